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

/** @file units.hpp
 *  @brief Physical constants and the internal unit system.
 *
 *  Internal units: energy in micro-electronvolt (ueV), time in nanoseconds,
 *  length in nanometres. Rates are therefore in ns^-1 and hbar carries
 *  ueV*ns. Values are CODATA 2018.
 */

#ifndef QPCDEPH_UNITS_HPP
#define QPCDEPH_UNITS_HPP

#include <numbers>
#include <string_view>

namespace qpcdeph::units {

/// Reduced Planck constant in ueV*ns.
inline constexpr double kHbar = 0.6582119569;

/// Planck constant in ueV*ns, tied to kHbar so that h = 2*pi*hbar holds
/// to rounding. CODATA quotes 4.135667696.
inline constexpr double kPlanck = 2.0 * std::numbers::pi * kHbar;

/// e^2 / (4 pi eps0) in ueV*nm.
inline constexpr double kCoulombNm = 1.43996454e6;

enum class EnergyUnit { MicroElectronVolt, MilliElectronVolt, ElectronVolt, MilliVoltBias };

/// Accepts "ueV", "μeV", "meV", "eV", "mV". Throws UnknownUnitError.
EnergyUnit parse_energy_unit(std::string_view tag);

std::string_view unit_tag(EnergyUnit unit) noexcept;

/// Energy in ueV. A bias of x mV is the electron energy e*x*mV = 1000*x ueV.
constexpr double to_internal_energy(double value, EnergyUnit unit) noexcept {
    switch (unit) {
    case EnergyUnit::MicroElectronVolt: return value;
    case EnergyUnit::MilliElectronVolt: return value * 1.0e3;
    case EnergyUnit::ElectronVolt: return value * 1.0e6;
    case EnergyUnit::MilliVoltBias: return value * 1.0e3;
    }
    return value;
}

double to_internal_energy(double value, std::string_view tag);

constexpr double rate_to_si(double rate_per_ns) noexcept { return rate_per_ns * 1.0e9; }
constexpr double rate_from_si(double rate_per_s) noexcept { return rate_per_s * 1.0e-9; }

/// Angular frequency (ns^-1) of an energy (ueV).
constexpr double angular_frequency(double energy) noexcept { return energy / kHbar; }

} // namespace qpcdeph::units

#endif // QPCDEPH_UNITS_HPP
