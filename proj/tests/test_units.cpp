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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qpcdeph/errors.hpp"
#include "qpcdeph/units.hpp"

namespace u = qpcdeph::units;

TEST(Units, ConstantsMatchCodata) {
    EXPECT_DOUBLE_EQ(u::kHbar, 0.6582119569);
    EXPECT_NEAR(u::kPlanck / 4.135667696, 1.0, 1e-9);
    EXPECT_DOUBLE_EQ(u::kCoulombNm, 1.43996454e6);
}

TEST(Units, PlanckIsTwoPiHbar) {
    EXPECT_NEAR(u::kPlanck / (2.0 * M_PI * u::kHbar), 1.0, 1e-12);
}

TEST(Units, EnergyConversions) {
    EXPECT_EQ(u::to_internal_energy(10, "meV"), 10000.0);
    EXPECT_EQ(u::to_internal_energy(1, "mV"), 1000.0);
    EXPECT_EQ(u::to_internal_energy(30, "μeV"), 30.0);
    EXPECT_EQ(u::to_internal_energy(30, "ueV"), 30.0);
    EXPECT_EQ(u::to_internal_energy(2, "eV"), 2.0e6);
    EXPECT_EQ(u::unit_tag(u::parse_energy_unit("meV")), "meV");
}

TEST(Units, UnknownUnitIsRejected) {
    EXPECT_THROW(u::to_internal_energy(1, "keV"), qpcdeph::UnknownUnitError);
    try {
        u::parse_energy_unit("furlong");
        FAIL();
    } catch (const qpcdeph::UnknownUnitError &e) {
        EXPECT_EQ(e.tag(), "furlong");
    }
}

TEST(Units, RateToSi) {
    EXPECT_NEAR(u::rate_to_si(0.01139), 1.139e7, 1e-3);
    EXPECT_EQ(u::rate_to_si(0.0), 0.0);
    // D = T eV_d / h with T = 1/2, eV_d = 1000 ueV, h = 4.135667696 ueV ns
    const double d = 0.5 * 1000.0 / 4.135667696;
    EXPECT_NEAR(d, 120.9, 0.05);
    EXPECT_NEAR(u::rate_to_si(d), 1.209e11, 0.0005e11);
}

TEST(Units, RoundTripAndAngularFrequency) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> exponent(-6.0, 6.0);
    for (int i = 0; i < 200; ++i) {
        const double r = std::pow(10.0, exponent(rng));
        EXPECT_NEAR(u::rate_from_si(u::rate_to_si(r)) / r, 1.0, 1e-12);
        const double energy = std::pow(10.0, exponent(rng));
        EXPECT_NEAR(u::kHbar * u::angular_frequency(energy) / energy, 1.0, 1e-15);
    }
}
