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

/** @file counting.hpp
 *  @brief Count-resolved master equations: the double dot together with the
 *         number n of electrons that have crossed the QPC.
 *
 *  For each sector n (rho^(-1) = 0):
 *
 *      d rho11^(n)/dt = -D' rho11^(n) + D' rho11^(n-1) - 2a Im rho12^(n)
 *      d rho22^(n)/dt = -D  rho22^(n) + D  rho22^(n-1) + 2a Im rho12^(n)
 *      d rho12^(n)/dt = (i e - (D + D')/2) rho12^(n) + i a (rho11^(n) - rho22^(n))
 *                       + sqrt(D D') rho12^(n-1)
 *
 *  Summing over n gives back the reduced equations of dynamics.hpp with
 *  Gamma_d = (sqrt(D) - sqrt(D'))^2 / 2. The ladder is cut at n_max; the
 *  weight leaking out of the top sector is monitored.
 */

#ifndef QPCDEPH_COUNTING_HPP
#define QPCDEPH_COUNTING_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qpcdeph/dynamics.hpp"
#include "qpcdeph/qpc_model.hpp"

namespace qpcdeph {

struct CountDistribution {
    std::vector<double> probabilities;
    double mean = 0.0;
    double variance = 0.0;
};

class NResolvedState {
public:
    static constexpr std::size_t kStride = 4;

    explicit NResolvedState(std::size_t n_max);

    /// Whole weight in the n = 0 sector.
    static NResolvedState from_initial(const DensityMatrix2 &initial, std::size_t n_max);

    std::size_t n_max() const noexcept { return n_max_; }
    std::size_t sectors() const noexcept { return n_max_ + 1; }

    DensityMatrix2 sector(std::size_t n) const;
    void set_sector(std::size_t n, const DensityMatrix2 &s);

    /// Sum over all sectors.
    DensityMatrix2 reduced() const;
    double total_probability() const;
    double tail_mass() const;
    CountDistribution distribution() const;

    std::span<double> data() noexcept { return data_; }
    std::span<const double> data() const noexcept { return data_; }

private:
    std::size_t n_max_;
    std::vector<double> data_;
};

/// d/dt of `state` written to `out` (must have the same n_max).
void counting_rhs(const NResolvedState &state, const DotParams &dot, const TunnelingRates &rates,
                  NResolvedState &out);

NResolvedState counting_rhs(const NResolvedState &state, const DotParams &dot,
                            const TunnelingRates &rates);

/// Smallest ladder length accepted for an evolution up to t_final:
/// ceil(R t + 8 sqrt(R t) + 10) with R = max(D, D').
std::size_t required_n_max(const TunnelingRates &rates, double t_final) noexcept;

inline constexpr double kCountingStepFraction = 0.05;

/// min(max_stable_step of the reduced problem, kCountingStepFraction / max(D, D')).
double max_counting_step(const DotParams &dot, const TunnelingRates &rates) noexcept;

struct CountingTrajectory {
    std::vector<double> times;
    std::vector<NResolvedState> states;
    std::size_t steps = 0;
    double step_size = 0.0;
};

/// RK4 over the stacked 4 (n_max + 1) dimensional system, recording the
/// points of `grid`. dt <= 0 selects max_counting_step.
/// Throws TruncationError (ladder too short, or tail weight >= 1e-8 at an
/// output time) and StepSizeError.
CountingTrajectory evolve_counting(const DensityMatrix2 &initial, const DotParams &dot,
                                   const TunnelingRates &rates, const TimeGrid &grid,
                                   std::size_t n_max, double dt = 0.0);

/// Instantaneous mean count rate d<n>/dt = D' rho11 + D rho22.
double detector_signal(const DensityMatrix2 &state, const TunnelingRates &rates) noexcept;
double detector_signal(const NResolvedState &state, const TunnelingRates &rates);

} // namespace qpcdeph

#endif // QPCDEPH_COUNTING_HPP
