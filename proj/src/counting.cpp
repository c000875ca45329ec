/* Copyright 2026 The qpcdeph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qpcdeph/counting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpcdeph/errors.hpp"
#include "qpcdeph/rk4.hpp"
#include "qpcdeph/units.hpp"

namespace qpcdeph {

namespace {

constexpr double kTailLimit = 1e-8;
constexpr double kTotalTolerance = 1e-8;
constexpr double kNegativeTolerance = 1e-10;

void ladder_rhs(std::span<const double> y, std::span<double> dy, std::size_t sectors, double a,
                double e, const TunnelingRates &r) {
    const double d = r.d_rate;
    const double dp = r.d_prime_rate;
    const double damp = 0.5 * (d + dp);
    const double feed = std::sqrt(d * dp);

    double prev02 = 0.0, prev11 = 0.0, prev_re = 0.0, prev_im = 0.0;
    for (std::size_t n = 0; n < sectors; ++n) {
        const std::size_t i = n * NResolvedState::kStride;
        const double p02 = y[i], p11 = y[i + 1], re = y[i + 2], im = y[i + 3];
        dy[i] = -dp * p02 + dp * prev02 - 2.0 * a * im;
        dy[i + 1] = -d * p11 + d * prev11 + 2.0 * a * im;
        dy[i + 2] = -e * im - damp * re + feed * prev_re;
        dy[i + 3] = e * re + a * (p02 - p11) - damp * im + feed * prev_im;
        prev02 = p02;
        prev11 = p11;
        prev_re = re;
        prev_im = im;
    }
}

void validate_rates(const TunnelingRates &r) {
    if (!(r.d_rate >= 0.0) || !(r.d_prime_rate >= 0.0) || !std::isfinite(r.d_rate) ||
        !std::isfinite(r.d_prime_rate))
        throw InvalidArgument("hopping rates must be non-negative and finite");
}

void check_counting_state(const NResolvedState &s, double t) {
    const double tail = s.tail_mass();
    if (!(tail < kTailLimit))
        throw TruncationError("count ladder truncated: weight " + std::to_string(tail) +
                                  " in top sector at t = " + std::to_string(t) + " ns",
                              2 * s.n_max());
    const double total = s.total_probability();
    if (std::abs(total - 1.0) > kTotalTolerance)
        throw InvariantViolation("count-resolved total probability " + std::to_string(total));
    for (std::size_t n = 0; n < s.sectors(); ++n) {
        const DensityMatrix2 sec = s.sector(n);
        if (sec.p02 < -kNegativeTolerance || sec.p11 < -kNegativeTolerance)
            throw InvariantViolation("negative population in count sector " + std::to_string(n));
    }
}

} // namespace

NResolvedState::NResolvedState(std::size_t n_max) : n_max_(n_max), data_(kStride * (n_max + 1), 0.0) {
    if (n_max == 0) throw InvalidArgument("n_max must be positive");
}

NResolvedState NResolvedState::from_initial(const DensityMatrix2 &initial, std::size_t n_max) {
    NResolvedState s(n_max);
    s.set_sector(0, initial);
    return s;
}

DensityMatrix2 NResolvedState::sector(std::size_t n) const {
    const std::size_t i = n * kStride;
    return {data_.at(i), data_[i + 1], data_[i + 2], data_[i + 3]};
}

void NResolvedState::set_sector(std::size_t n, const DensityMatrix2 &s) {
    const std::size_t i = n * kStride;
    data_.at(i + 3) = s.coherence_im;
    data_[i] = s.p02;
    data_[i + 1] = s.p11;
    data_[i + 2] = s.coherence_re;
}

DensityMatrix2 NResolvedState::reduced() const {
    DensityMatrix2 sum{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < data_.size(); i += kStride) {
        sum.p02 += data_[i];
        sum.p11 += data_[i + 1];
        sum.coherence_re += data_[i + 2];
        sum.coherence_im += data_[i + 3];
    }
    return sum;
}

double NResolvedState::total_probability() const { return reduced().trace(); }

double NResolvedState::tail_mass() const {
    const std::size_t i = n_max_ * kStride;
    return data_[i] + data_[i + 1];
}

CountDistribution NResolvedState::distribution() const {
    CountDistribution dist;
    dist.probabilities.resize(sectors());
    double m1 = 0.0, m2 = 0.0;
    for (std::size_t n = 0; n < sectors(); ++n) {
        const double p = data_[n * kStride] + data_[n * kStride + 1];
        dist.probabilities[n] = p;
        const double x = static_cast<double>(n);
        m1 += x * p;
        m2 += x * x * p;
    }
    dist.mean = m1;
    dist.variance = m2 - m1 * m1;
    return dist;
}

void counting_rhs(const NResolvedState &state, const DotParams &dot, const TunnelingRates &rates,
                  NResolvedState &out) {
    if (out.n_max() != state.n_max()) throw InvalidArgument("n_max mismatch in counting_rhs");
    validate_rates(rates);
    ladder_rhs(state.data(), out.data(), state.sectors(), dot.tunnel_coupling / units::kHbar,
               dot.detuning / units::kHbar, rates);
}

NResolvedState counting_rhs(const NResolvedState &state, const DotParams &dot,
                            const TunnelingRates &rates) {
    NResolvedState out(state.n_max());
    counting_rhs(state, dot, rates, out);
    return out;
}

std::size_t required_n_max(const TunnelingRates &rates, double t_final) noexcept {
    const double mean = rates.max_rate() * t_final;
    return static_cast<std::size_t>(std::ceil(mean + 8.0 * std::sqrt(mean) + 10.0));
}

double max_counting_step(const DotParams &dot, const TunnelingRates &rates) noexcept {
    double limit = max_stable_step(SystemParams::from(dot, rates.gamma_d));
    if (rates.max_rate() > 0.0) limit = std::min(limit, kCountingStepFraction / rates.max_rate());
    return limit;
}

CountingTrajectory evolve_counting(const DensityMatrix2 &initial, const DotParams &dot,
                                   const TunnelingRates &rates, const TimeGrid &grid,
                                   std::size_t n_max, double dt) {
    SystemParams::from(dot, rates.gamma_d).validate();
    validate_rates(rates);
    grid.validate();
    check_state(initial);

    const std::size_t needed = required_n_max(rates, grid.t_final);
    if (n_max < needed)
        throw TruncationError("n_max = " + std::to_string(n_max) + " too small for t_final = " +
                                  std::to_string(grid.t_final) + " ns; need at least " +
                                  std::to_string(needed),
                              needed);

    const double max_dt = max_counting_step(dot, rates);
    const double interval = grid.t_final / static_cast<double>(grid.points - 1);
    if (dt <= 0.0) dt = std::isfinite(max_dt) ? max_dt : interval;
    if (!std::isfinite(dt)) throw InvalidArgument("step size must be finite");
    if (dt > max_dt) throw StepSizeError(dt, max_dt);

    const auto substeps = static_cast<std::size_t>(std::max(1.0, std::ceil(interval / dt)));
    const double h = interval / static_cast<double>(substeps);

    CountingTrajectory traj;
    traj.steps = substeps * (grid.points - 1);
    traj.step_size = h;
    traj.times.reserve(grid.points);
    traj.states.reserve(grid.points);

    NResolvedState state = NResolvedState::from_initial(initial, n_max);
    traj.times.push_back(0.0);
    traj.states.push_back(state);

    const double a = dot.tunnel_coupling / units::kHbar;
    const double e = dot.detuning / units::kHbar;
    const std::size_t sectors = state.sectors();
    auto rhs = [&](std::span<const double> y, std::span<double> dy) {
        ladder_rhs(y, dy, sectors, a, e, rates);
    };

    Rk4Stepper stepper(state.data().size());
    for (std::size_t k = 1; k < grid.points; ++k) {
        for (std::size_t j = 0; j < substeps; ++j) stepper.step(state.data(), h, rhs);
        const double t = grid.time(k);
        check_counting_state(state, t);
        traj.times.push_back(t);
        traj.states.push_back(state);
    }
    return traj;
}

double detector_signal(const DensityMatrix2 &state, const TunnelingRates &rates) noexcept {
    return rates.d_prime_rate * state.p02 + rates.d_rate * state.p11;
}

double detector_signal(const NResolvedState &state, const TunnelingRates &rates) {
    return detector_signal(state.reduced(), rates);
}

} // namespace qpcdeph
