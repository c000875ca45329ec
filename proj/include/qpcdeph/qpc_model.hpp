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

/** @file qpc_model.hpp
 *  @brief From QPC physics to the detector hopping rates and the
 *         measurement-induced dephasing rate.
 *
 *  The extra electron in the right dot (state |(0,2)S>) raises the QPC
 *  barrier by the Coulomb energy e^2/(4 pi eps_r eps0 a). To first order
 *  this lowers the transmission by
 *
 *      dT = U_c * T (1 - T) / E_F,
 *
 *  the hopping rates are D = T eV_d / h and D' = (T - dT) eV_d / h, and the
 *  off-diagonal element of the reduced density matrix decays at
 *
 *      Gamma_d = (sqrt(D) - sqrt(D'))^2 / 2.
 */

#ifndef QPCDEPH_QPC_MODEL_HPP
#define QPCDEPH_QPC_MODEL_HPP

namespace qpcdeph {

struct QpcConfig {
    double transmission = 0.5;    ///< T at E_F for dot state |(1,1)S>
    double fermi_energy = 1.0e4;  ///< ueV
    double bias_energy = 1.0e3;   ///< eV_d in ueV
    double distance = 200.0;      ///< nm; +inf switches the Coulomb shift off
    double rel_permittivity = 13.0;

    /// Throws InvalidArgument.
    void validate() const;

    /// T = 1/2, E_F = 10 meV, a = 200 nm, eps_r = 13, V_d = 1 mV.
    static QpcConfig reference() { return {}; }
};

/// Rates in ns^-1.
struct TunnelingRates {
    double d_rate = 0.0;        ///< D, dot in |(1,1)S>
    double d_prime_rate = 0.0;  ///< D', dot in |(0,2)S>
    double gamma_d = 0.0;

    double max_rate() const noexcept { return d_rate > d_prime_rate ? d_rate : d_prime_rate; }
};

struct TransmissionChange {
    double delta = 0.0;               ///< dT = T - T'
    double transmission = 0.0;        ///< T
    double transmission_prime = 0.0;  ///< T'

    double relative() const noexcept { return delta / transmission; }
};

/// Transmission through a delta barrier, 1 / (1 + g / (E/E_F)), where
/// g = hbar^2 b^2 / (2 m* E_F) is the barrier strength at the Fermi energy.
double delta_barrier_transmission(double barrier_strength, double energy_ratio);

/// Coulomb energy (ueV) of one extra electron at distance (nm).
double coulomb_shift(double distance, double rel_permittivity);

/// First-order transmission change. Accepts the closed range
/// 0 <= T <= 1 so that the boundary T = 1 can be probed directly.
double transmission_change(double transmission, double fermi_energy, double coulomb_energy);

/// Throws PerturbativeBreakdownError when dT >= T.
TransmissionChange transmission_change(const QpcConfig &cfg);

/// D = T eV_d/h, D' = T' eV_d/h and the exact dephasing rate.
TunnelingRates rates(const QpcConfig &cfg);

TunnelingRates rates_from_transmissions(double transmission, double transmission_prime,
                                        double bias_energy);

/// Keeps D and picks D' <= D such that (sqrt(D) - sqrt(D'))^2 / 2 = gamma_d.
TunnelingRates rates_with_dephasing(double d_rate, double gamma_d);

/// Exact dephasing rate from two hopping rates.
double dephasing_rate(double d_rate, double d_prime_rate);

struct ExpandedDephasing {
    double gamma_d = 0.0;
    /// Set when dT/T >= kExpansionLimit; the value is still returned.
    bool outside_validity = false;
};

inline constexpr double kExpansionLimit = 0.2;

/// Small-dT form eV_d dT^2 / (16 pi hbar T). Approximates rates(cfg).gamma_d
/// with a relative error of roughly dT/(2T).
ExpandedDephasing gamma_d_expanded(const QpcConfig &cfg);

ExpandedDephasing gamma_d_expanded(double bias_energy, double delta, double transmission);

} // namespace qpcdeph

#endif // QPCDEPH_QPC_MODEL_HPP
