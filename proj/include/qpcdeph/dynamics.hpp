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

/** @file dynamics.hpp
 *  @brief Reduced two-level dynamics of the double dot under QPC dephasing.
 *
 *  Basis: index 1 is |(0,2)S>, index 2 is |(1,1)S>. With a = T_c/hbar and
 *  e = eps/hbar the reduced master equations read
 *
 *      d rho11/dt     = -2a Im rho12
 *      d rho22/dt     = +2a Im rho12
 *      d Re rho12/dt  = -e Im rho12 - Gamma_d Re rho12
 *      d Im rho12/dt  = +e Re rho12 + a (rho11 - rho22) - Gamma_d Im rho12
 *
 *  and are handled as a linear system dv/dt = L v on
 *  v = (rho11, rho22, Re rho12, Im rho12). The Hermitian partner rho21
 *  is never stored.
 */

#ifndef QPCDEPH_DYNAMICS_HPP
#define QPCDEPH_DYNAMICS_HPP

#include <array>
#include <cstddef>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace qpcdeph {

/// Double-dot energies in ueV.
struct DotParams {
    double detuning = 0.0;
    double tunnel_coupling = 0.0;
};

struct SystemParams {
    double detuning = 0.0;          ///< eps, ueV
    double tunnel_coupling = 0.0;   ///< T_c, ueV
    double gamma_d = 0.0;           ///< ns^-1

    void validate() const;
    DotParams dot() const noexcept { return {detuning, tunnel_coupling}; }
    static SystemParams from(DotParams dot, double gamma_d) noexcept {
        return {dot.detuning, dot.tunnel_coupling, gamma_d};
    }
};

struct DensityMatrix2 {
    double p02 = 0.0;           ///< rho11, population of |(0,2)S>
    double p11 = 1.0;           ///< rho22, population of |(1,1)S>
    double coherence_re = 0.0;  ///< Re rho12
    double coherence_im = 0.0;  ///< Im rho12

    /// rho22 = 1, the default starting point.
    static constexpr DensityMatrix2 singlet_11() noexcept { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr DensityMatrix2 singlet_02() noexcept { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr DensityMatrix2 maximally_mixed() noexcept { return {0.5, 0.5, 0.0, 0.0}; }

    double trace() const noexcept { return p02 + p11; }
    double coherence_norm2() const noexcept {
        return coherence_re * coherence_re + coherence_im * coherence_im;
    }
    double coherence_abs() const noexcept;
    /// Tr rho^2.
    double purity() const noexcept { return p02 * p02 + p11 * p11 + 2.0 * coherence_norm2(); }
    /// det rho = rho11 rho22 - |rho12|^2.
    double determinant() const noexcept { return p02 * p11 - coherence_norm2(); }

    std::array<double, 4> to_array() const noexcept { return {p02, p11, coherence_re, coherence_im}; }
    static DensityMatrix2 from_array(const std::array<double, 4> &v) noexcept {
        return {v[0], v[1], v[2], v[3]};
    }
};

/// Tolerances used for state checks.
struct StateTolerances {
    double trace = 1e-10;
    double positivity = 1e-10;
    double purity_step = 1e-9;
};

/// Throws InvariantViolation when the state is unphysical.
void check_state(const DensityMatrix2 &state, const StateTolerances &tol = {});

/// Worst deviations seen while integrating.
struct TrajectoryDiagnostics {
    std::size_t steps = 0;
    double step_size = 0.0;
    double max_trace_error = 0.0;
    double min_determinant = 0.0;
    double max_purity_increase = 0.0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix2> states;
    std::vector<double> purity;
    TrajectoryDiagnostics diagnostics;

    std::size_t size() const noexcept { return times.size(); }
    void push(double t, const DensityMatrix2 &state);
};

/// Output grid with `points` equidistant samples on [0, t_final].
struct TimeGrid {
    double t_final = 0.0;
    std::size_t points = 2;

    void validate() const;
    double time(std::size_t k) const noexcept {
        return points < 2 ? 0.0 : t_final * static_cast<double>(k) / static_cast<double>(points - 1);
    }
};

/// Half the level splitting, (T_c^2 + eps^2/4)^(1/2), in ueV.
double rabi_energy(const DotParams &dot) noexcept;

/// rho22(t) for Gamma_d = 0 starting from rho22(0) = 1:
/// [T_c^2 cos^2(w t/hbar) + eps^2/4] / (T_c^2 + eps^2/4).
/// Throws InvalidArgument when gamma_d != 0.
double bloch_analytic(const SystemParams &params, double t);

/// Period of bloch_analytic, pi hbar / w (ns). Infinite when w = 0.
double bloch_period(const DotParams &dot) noexcept;

using Generator = Eigen::Matrix4d;

Generator liouvillian(const SystemParams &params);

/// exp(L t) v by scaling and squaring. Throws InvalidArgument for t < 0.
DensityMatrix2 evolve_expm(const DensityMatrix2 &initial, const SystemParams &params, double t);

/// Fraction of the fastest time scale allowed per RK4 step.
inline constexpr double kStepFraction = 0.005;

/// kStepFraction * min(hbar / w, 1 / Gamma_d). Infinite for a zero generator.
double max_stable_step(const SystemParams &params) noexcept;

/// Fixed-step RK4 recording every step. The step actually taken is
/// t_final / ceil(t_final / dt). Throws StepSizeError when dt exceeds
/// max_stable_step(params), InvariantViolation if a state leaves the
/// physical region.
Trajectory evolve_rk4(const DensityMatrix2 &initial, const SystemParams &params, double t_final,
                      double dt);

/// Same integrator, recording only the points of `grid`. dt <= 0 selects
/// max_stable_step(params). Invariants are still checked at every step.
Trajectory evolve_rk4(const DensityMatrix2 &initial, const SystemParams &params,
                      const TimeGrid &grid, double dt = 0.0);

/// Slowest strictly decaying mode of L, min{-Re lambda : Re lambda < -1e-12}.
/// Throws NoDecayError when L has no such eigenvalue.
double decoherence_rate(const SystemParams &params);

inline constexpr double kInfiniteT2 = std::numeric_limits<double>::infinity();

/// 1/T2 = Gamma_d + 1/T2_env. Pass kInfiniteT2 for a suppressed environment.
double combine_decoherence(double gamma_d, double t2_env);

} // namespace qpcdeph

#endif // QPCDEPH_DYNAMICS_HPP
