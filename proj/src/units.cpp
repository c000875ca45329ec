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

#include "qpcdeph/units.hpp"

#include <string>

#include "qpcdeph/errors.hpp"

namespace qpcdeph::units {

EnergyUnit parse_energy_unit(std::string_view tag) {
    if (tag == "ueV" || tag == "μeV" || tag == "µeV") return EnergyUnit::MicroElectronVolt;
    if (tag == "meV") return EnergyUnit::MilliElectronVolt;
    if (tag == "eV") return EnergyUnit::ElectronVolt;
    if (tag == "mV") return EnergyUnit::MilliVoltBias;
    throw UnknownUnitError(std::string(tag));
}

std::string_view unit_tag(EnergyUnit unit) noexcept {
    switch (unit) {
    case EnergyUnit::MicroElectronVolt: return "ueV";
    case EnergyUnit::MilliElectronVolt: return "meV";
    case EnergyUnit::ElectronVolt: return "eV";
    case EnergyUnit::MilliVoltBias: return "mV";
    }
    return "?";
}

double to_internal_energy(double value, std::string_view tag) {
    return to_internal_energy(value, parse_energy_unit(tag));
}

} // namespace qpcdeph::units
