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

#include "qpcdeph/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <span>
#include <string>

#include <Eigen/Eigenvalues>

#include "qpcdeph/errors.hpp"
#include "qpcdeph/expm.hpp"
#include "qpcdeph/rk4.hpp"
#include "qpcdeph/units.hpp"

namespace qpcdeph {

namespace {

std::string describe(const DensityMatrix2 &s) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "(p02=%.17g, p11=%.17g, re=%.17g, im=%.17g)", s.p02, s.p11,
                  s.coherence_re, s.coherence_im);
    return buf;
}

// Linear right-hand side shared by both RK4 entry points.
struct ReducedRhs {
    double a, e, g;
    void operator()(std::span<const double> v, std::span<double> dv) const {
        dv[0] = -2.0 * a * v[3];
        dv[1] = 2.0 * a * v[3];
        dv[2] = -e * v[3] - g * v[2];
        dv[3] = e * v[2] + a * (v[0] - v[1]) - g * v[3];
    }
};

class StepMonitor {
public:
    StepMonitor(const DensityMatrix2 &initial, TrajectoryDiagnostics &diag)
        : diag_(diag), last_purity_(initial.purity()) {
        observe(initial, false);
    }

    void observe(const DensityMatrix2 &s, bool check_purity = true) {
        const StateTolerances tol;
        const double trace_err = std::abs(s.trace() - 1.0);
        const double det = s.determinant();
        const double purity = s.purity();
        diag_.max_trace_error = std::max(diag_.max_trace_error, trace_err);
        diag_.min_determinant = std::min(diag_.min_determinant, det);
        if (check_purity)
            diag_.max_purity_increase = std::max(diag_.max_purity_increase, purity - last_purity_);

        check_state(s, tol);
        if (check_purity && purity > last_purity_ + tol.purity_step)
            throw InvariantViolation("purity increased by " + std::to_string(purity - last_purity_) +
                                     " in one step at " + describe(s));
        last_purity_ = purity;
    }

private:
    TrajectoryDiagnostics &diag_;
    double last_purity_;
};

void check_step(const SystemParams &params, double dt) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidArgument("step size must be positive");
    const double max_dt = max_stable_step(params);
    if (dt > max_dt) throw StepSizeError(dt, max_dt);
}

} // namespace

void SystemParams::validate() const {
    if (!std::isfinite(detuning)) throw InvalidArgument("detuning must be finite");
    if (!(tunnel_coupling >= 0.0) || !std::isfinite(tunnel_coupling))
        throw InvalidArgument("tunnel_coupling must be non-negative");
    if (!(gamma_d >= 0.0) || !std::isfinite(gamma_d))
        throw InvalidArgument("gamma_d must be non-negative");
}

double DensityMatrix2::coherence_abs() const noexcept { return std::hypot(coherence_re, coherence_im); }

void check_state(const DensityMatrix2 &s, const StateTolerances &tol) {
    if (!std::isfinite(s.p02) || !std::isfinite(s.p11) || !std::isfinite(s.coherence_re) ||
        !std::isfinite(s.coherence_im))
        throw InvariantViolation("non-finite state " + describe(s));
    if (std::abs(s.trace() - 1.0) > tol.trace)
        throw InvariantViolation("trace not preserved: " + describe(s));
    const double lo = -tol.trace;
    const double hi = 1.0 + tol.trace;
    if (s.p02 < lo || s.p02 > hi || s.p11 < lo || s.p11 > hi)
        throw InvariantViolation("population outside [0, 1]: " + describe(s));
    if (s.determinant() < -tol.positivity)
        throw InvariantViolation("state not positive: " + describe(s));
}

void Trajectory::push(double t, const DensityMatrix2 &state) {
    times.push_back(t);
    states.push_back(state);
    purity.push_back(state.purity());
}

void TimeGrid::validate() const {
    if (points < 2) throw InvalidArgument("time grid needs at least 2 points");
    if (!(t_final > 0.0) || !std::isfinite(t_final))
        throw InvalidArgument("t_final must be positive and finite");
}

double rabi_energy(const DotParams &dot) noexcept {
    return std::sqrt(dot.tunnel_coupling * dot.tunnel_coupling + 0.25 * dot.detuning * dot.detuning);
}

double bloch_period(const DotParams &dot) noexcept {
    const double w = rabi_energy(dot);
    return w > 0.0 ? std::numbers::pi * units::kHbar / w : kInfiniteT2;
}

double bloch_analytic(const SystemParams &params, double t) {
    params.validate();
    if (params.gamma_d != 0.0) throw InvalidArgument("bloch_analytic requires gamma_d = 0");
    const double tc2 = params.tunnel_coupling * params.tunnel_coupling;
    const double eps2_4 = 0.25 * params.detuning * params.detuning;
    const double denom = tc2 + eps2_4;
    if (denom == 0.0) return 1.0;
    const double c = std::cos(std::sqrt(denom) * t / units::kHbar);
    return (tc2 * c * c + eps2_4) / denom;
}

Generator liouvillian(const SystemParams &params) {
    params.validate();
    const double a = params.tunnel_coupling / units::kHbar;
    const double e = params.detuning / units::kHbar;
    const double g = params.gamma_d;
    Generator l;
    // clang-format off
    l << 0.0, 0.0, 0.0, -2.0 * a,
         0.0, 0.0, 0.0,  2.0 * a,
         0.0, 0.0,  -g,       -e,
           a,  -a,   e,       -g;
    // clang-format on
    return l;
}

DensityMatrix2 evolve_expm(const DensityMatrix2 &initial, const SystemParams &params, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("evolution time must be >= 0");
    if (t == 0.0) return initial;
    const Eigen::MatrixXd propagator = expm(Eigen::MatrixXd(liouvillian(params) * t));
    const auto a = initial.to_array();
    const Eigen::Vector4d v = propagator * Eigen::Vector4d(a[0], a[1], a[2], a[3]);
    return {v[0], v[1], v[2], v[3]};
}

double max_stable_step(const SystemParams &params) noexcept {
    const double w = rabi_energy(params.dot());
    double limit = w > 0.0 ? units::kHbar / w : kInfiniteT2;
    if (params.gamma_d > 0.0) limit = std::min(limit, 1.0 / params.gamma_d);
    return kStepFraction * limit;
}

Trajectory evolve_rk4(const DensityMatrix2 &initial, const SystemParams &params, double t_final,
                      double dt) {
    params.validate();
    if (!(t_final >= 0.0) || !std::isfinite(t_final))
        throw InvalidArgument("t_final must be non-negative and finite");
    check_step(params, dt);

    Trajectory traj;
    StepMonitor monitor(initial, traj.diagnostics);
    traj.push(0.0, initial);
    if (t_final == 0.0) return traj;

    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(t_final / dt)));
    const double h = t_final / static_cast<double>(steps);
    traj.diagnostics.steps = steps;
    traj.diagnostics.step_size = h;
    traj.times.reserve(steps + 1);
    traj.states.reserve(steps + 1);
    traj.purity.reserve(steps + 1);

    const ReducedRhs rhs{params.tunnel_coupling / units::kHbar, params.detuning / units::kHbar,
                         params.gamma_d};
    Rk4Stepper stepper(4);
    auto v = initial.to_array();
    for (std::size_t k = 1; k <= steps; ++k) {
        stepper.step(v, h, rhs);
        const auto s = DensityMatrix2::from_array(v);
        monitor.observe(s);
        traj.push(static_cast<double>(k) * h, s);
    }
    return traj;
}

Trajectory evolve_rk4(const DensityMatrix2 &initial, const SystemParams &params,
                      const TimeGrid &grid, double dt) {
    params.validate();
    grid.validate();
    if (dt <= 0.0) dt = max_stable_step(params);
    const double interval = grid.t_final / static_cast<double>(grid.points - 1);
    if (!std::isfinite(dt)) dt = interval;
    check_step(params, dt);

    const auto substeps = static_cast<std::size_t>(std::max(1.0, std::ceil(interval / dt)));
    const double h = interval / static_cast<double>(substeps);

    Trajectory traj;
    traj.diagnostics.steps = substeps * (grid.points - 1);
    traj.diagnostics.step_size = h;
    traj.times.reserve(grid.points);
    traj.states.reserve(grid.points);
    traj.purity.reserve(grid.points);

    StepMonitor monitor(initial, traj.diagnostics);
    traj.push(0.0, initial);

    const ReducedRhs rhs{params.tunnel_coupling / units::kHbar, params.detuning / units::kHbar,
                         params.gamma_d};
    Rk4Stepper stepper(4);
    auto v = initial.to_array();
    for (std::size_t k = 1; k < grid.points; ++k) {
        for (std::size_t j = 0; j < substeps; ++j) {
            stepper.step(v, h, rhs);
            monitor.observe(DensityMatrix2::from_array(v));
        }
        traj.push(grid.time(k), DensityMatrix2::from_array(v));
    }
    return traj;
}

double decoherence_rate(const SystemParams &params) {
    constexpr double kTol = 1e-12;
    const Eigen::EigenSolver<Generator> solver(liouvillian(params), false);
    double slowest = kInfiniteT2;
    for (const auto &lambda : solver.eigenvalues())
        if (lambda.real() < -kTol) slowest = std::min(slowest, -lambda.real());
    if (!std::isfinite(slowest)) throw NoDecayError();
    return slowest;
}

double combine_decoherence(double gamma_d, double t2_env) {
    if (!(gamma_d >= 0.0) || !std::isfinite(gamma_d))
        throw InvalidArgument("gamma_d must be non-negative");
    if (std::isinf(t2_env) && t2_env > 0.0) return gamma_d;
    if (!(t2_env > 0.0)) throw InvalidArgument("t2_env must be positive");
    return gamma_d + 1.0 / t2_env;
}

} // namespace qpcdeph
