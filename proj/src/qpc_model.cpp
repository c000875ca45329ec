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

#include "qpcdeph/qpc_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpcdeph/errors.hpp"
#include "qpcdeph/units.hpp"

namespace qpcdeph {

void QpcConfig::validate() const {
    if (!(transmission > 0.0 && transmission < 1.0))
        throw InvalidArgument("transmission must lie in (0, 1), got " + std::to_string(transmission));
    if (!(fermi_energy > 0.0) || !std::isfinite(fermi_energy))
        throw InvalidArgument("fermi_energy must be positive and finite");
    if (!(bias_energy >= 0.0) || !std::isfinite(bias_energy))
        throw InvalidArgument("bias_energy must be non-negative and finite");
    if (!(distance > 0.0))
        throw InvalidArgument("distance must be positive");
    if (!(rel_permittivity >= 1.0) || !std::isfinite(rel_permittivity))
        throw InvalidArgument("rel_permittivity must be >= 1");
}

double delta_barrier_transmission(double barrier_strength, double energy_ratio) {
    if (!(barrier_strength >= 0.0))
        throw InvalidArgument("barrier strength must be non-negative");
    if (!(energy_ratio > 0.0))
        throw InvalidArgument("energy ratio must be positive");
    return 1.0 / (1.0 + barrier_strength / energy_ratio);
}

double coulomb_shift(double distance, double rel_permittivity) {
    if (!(distance > 0.0)) throw InvalidArgument("distance must be positive");
    if (!(rel_permittivity >= 1.0)) throw InvalidArgument("rel_permittivity must be >= 1");
    return units::kCoulombNm / (rel_permittivity * distance);
}

double transmission_change(double transmission, double fermi_energy, double coulomb_energy) {
    if (!(transmission >= 0.0 && transmission <= 1.0))
        throw InvalidArgument("transmission must lie in [0, 1]");
    if (!(fermi_energy > 0.0)) throw InvalidArgument("fermi_energy must be positive");
    return coulomb_energy * transmission * (1.0 - transmission) / fermi_energy;
}

TransmissionChange transmission_change(const QpcConfig &cfg) {
    cfg.validate();
    const double shift = coulomb_shift(cfg.distance, cfg.rel_permittivity);
    const double delta = transmission_change(cfg.transmission, cfg.fermi_energy, shift);
    if (delta >= cfg.transmission)
        throw PerturbativeBreakdownError(
            "transmission change " + std::to_string(delta) +
            " is not smaller than the transmission " + std::to_string(cfg.transmission));
    return {delta, cfg.transmission, cfg.transmission - delta};
}

double dephasing_rate(double d_rate, double d_prime_rate) {
    // (sqrt D - sqrt D')^2 = (D - D')^2 / (sqrt D + sqrt D')^2, free of the
    // cancellation in the direct difference of square roots
    const double sum = std::sqrt(d_rate) + std::sqrt(d_prime_rate);
    if (sum == 0.0) return 0.0;
    const double ratio = (d_rate - d_prime_rate) / sum;
    return 0.5 * ratio * ratio;
}

TunnelingRates rates_from_transmissions(double transmission, double transmission_prime,
                                        double bias_energy) {
    if (!(transmission_prime >= 0.0 && transmission_prime <= transmission && transmission <= 1.0))
        throw InvalidArgument("transmissions must satisfy 0 <= T' <= T <= 1");
    if (!(bias_energy >= 0.0)) throw InvalidArgument("bias_energy must be non-negative");
    TunnelingRates r;
    r.d_rate = transmission * bias_energy / units::kPlanck;
    r.d_prime_rate = transmission_prime * bias_energy / units::kPlanck;
    r.gamma_d = dephasing_rate(r.d_rate, r.d_prime_rate);
    return r;
}

TunnelingRates rates(const QpcConfig &cfg) {
    const TransmissionChange change = transmission_change(cfg);
    TunnelingRates r = rates_from_transmissions(change.transmission, change.transmission_prime,
                                                cfg.bias_energy);
    // D - D' straight from dT rather than from the rounded D'
    const double sum = std::sqrt(r.d_rate) + std::sqrt(r.d_prime_rate);
    if (sum > 0.0) {
        const double ratio = change.delta * cfg.bias_energy / units::kPlanck / sum;
        r.gamma_d = 0.5 * ratio * ratio;
    }
    return r;
}

TunnelingRates rates_with_dephasing(double d_rate, double gamma_d) {
    if (!(d_rate >= 0.0) || !(gamma_d >= 0.0))
        throw InvalidArgument("rates must be non-negative");
    const double root = std::sqrt(d_rate) - std::sqrt(2.0 * gamma_d);
    if (root < 0.0)
        throw InvalidArgument("dephasing rate " + std::to_string(gamma_d) +
                              " ns^-1 cannot be produced with D = " + std::to_string(d_rate));
    TunnelingRates r;
    r.d_rate = d_rate;
    r.d_prime_rate = root * root;
    r.gamma_d = gamma_d;
    return r;
}

ExpandedDephasing gamma_d_expanded(double bias_energy, double delta, double transmission) {
    if (!(transmission > 0.0)) throw InvalidArgument("transmission must be positive");
    ExpandedDephasing out;
    out.gamma_d = bias_energy * delta * delta / (16.0 * std::numbers::pi * units::kHbar * transmission);
    out.outside_validity = delta / transmission >= kExpansionLimit;
    return out;
}

ExpandedDephasing gamma_d_expanded(const QpcConfig &cfg) {
    const TransmissionChange change = transmission_change(cfg);
    return gamma_d_expanded(cfg.bias_energy, change.delta, change.transmission);
}

} // namespace qpcdeph
