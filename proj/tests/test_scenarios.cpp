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
#include <limits>
#include <numbers>
#include <string>

#include "qpcdeph/errors.hpp"
#include "qpcdeph/scenarios.hpp"
#include "qpcdeph/units.hpp"

using namespace qpcdeph;

namespace {

ScenarioConfig from_text(Scenario s, std::string_view text) {
    return ScenarioConfig::resolve(s, ConfigFile::parse(text));
}

// 2 (T_c/hbar)^2 [t/G - (1 - e^{-G t})/G^2]: leading order in T_c when the
// coherence relaxes much faster than the populations move.
double overdamped_departure(double tc, double gamma, double t) {
    const double a = tc / units::kHbar;
    return 2.0 * a * a * (t / gamma - (1.0 - std::exp(-gamma * t)) / (gamma * gamma));
}

} // namespace

TEST(ScenarioTags, RoundTrip) {
    for (Scenario s : {Scenario::Fig2a, Scenario::Fig2b, Scenario::ZenoSweep, Scenario::ScalingTable,
                       Scenario::CountingDemo, Scenario::RatesReport, Scenario::Evolve, Scenario::Counting})
        EXPECT_EQ(parse_scenario(scenario_tag(s)), s);
    EXPECT_THROW(parse_scenario("fig3"), ConfigError);
}

TEST(ScenarioConfig, UnknownKeyRejected) {
    EXPECT_THROW(from_text(Scenario::Evolve, "epsilon = 3\n"), ConfigError);
}

TEST(ScenarioConfig, SectionWinsOverGlobal) {
    const auto c = from_text(Scenario::Fig2b, "eps = 1\n[fig2b]\neps = 30 ueV\ntc = 0.01 meV\n");
    EXPECT_DOUBLE_EQ(c.dot.detuning, 30.0);
    EXPECT_DOUBLE_EQ(c.dot.tunnel_coupling, 10.0);
}

TEST(ScenarioConfig, DefaultGammaListFollowsTc) {
    const auto c = from_text(Scenario::Fig2a, "tc = 2\neps = 6\nt_final = 6\n");
    const double unit = 2.0 / units::kHbar;
    ASSERT_EQ(c.gamma_list.size(), 3u);
    EXPECT_NEAR(c.gamma_list[1], unit, 1e-12);
    EXPECT_NEAR(c.gamma_list[2], 4.0 * unit, 1e-12);
}

TEST(ScenarioConfig, ValidationFailuresAreConfigErrors) {
    EXPECT_THROW(from_text(Scenario::Fig2a, "t_final = 1\n"), ConfigError);
    EXPECT_THROW(from_text(Scenario::ZenoSweep, "t_final = 1\n"), ConfigError);
    EXPECT_THROW(from_text(Scenario::ZenoSweep, "gamma_d_list_tc = 1, 2, 4, 8\n"), ConfigError);
    EXPECT_THROW(from_text(Scenario::ScalingTable, "distance_list = 200\n"), ConfigError);
    EXPECT_THROW(from_text(Scenario::Evolve, "gamma_d = -1\n"), ConfigError);
    EXPECT_THROW(from_text(Scenario::Evolve, "points = 1\n"), ConfigError);
    EXPECT_THROW(from_text(Scenario::Evolve, "initial = 0.5, 0.5, 0.6, 0\n"), ConfigError);
    EXPECT_THROW(from_text(Scenario::Evolve, "transmission = 1.5\n"), ConfigError);
    EXPECT_THROW(from_text(Scenario::Evolve, "gamma_d_list = 1\ngamma_d_list_tc = 1\n"), ConfigError);
}

TEST(Fig2a, DefaultRunMatchesAnalyticAndStartsAtOne) {
    const Table t = run_fig2a(ScenarioConfig::defaults(Scenario::Fig2a));
    ASSERT_EQ(t.columns().size(), 5u);
    EXPECT_EQ(t.columns()[2], "rho22_gamma_0tc");
    EXPECT_EQ(t.columns()[3], "rho22_gamma_1tc");
    EXPECT_EQ(t.columns()[4], "rho22_gamma_4tc");
    EXPECT_LT(t.footer_value("max_abs_dev_from_analytic"), 1e-8);
    EXPECT_LT(t.footer_value("max_purity_increase"), 1e-9);
    for (std::size_t c = 2; c < 5; ++c) EXPECT_EQ(t.cell(0, t.columns()[c]), 1.0);

    const SystemParams p = SystemParams::from({3.0, 1.0}, 0.0);
    const auto times = t.column("t_ns");
    const auto rho = t.column("rho22_gamma_0tc");
    for (std::size_t k = 0; k < times.size(); ++k) EXPECT_NEAR(rho[k], bloch_analytic(p, times[k]), 1e-8);
}

TEST(Fig2a, QuarterTurnGivesNineThirteenths) {
    const double period = bloch_period({3.0, 1.0});
    ScenarioConfig c = ScenarioConfig::defaults(Scenario::Fig2a);
    c.grid = {2.0 * period, 9};  // index 2 sits at omega t / hbar = pi / 2
    const Table t = run_fig2a(c);
    EXPECT_NEAR(t.cell(2, "t_tc") * rabi_energy(c.dot), std::numbers::pi / 2.0, 1e-12);
    EXPECT_NEAR(t.cell(2, "rho22_gamma_0tc"), 9.0 / 13.0, 1e-8);
}

TEST(Fig2a, StrongerMeasurementHoldsTheStateAtShortTimes) {
    ScenarioConfig c = ScenarioConfig::defaults(Scenario::Fig2a);
    const double t_star = zeno_probe_time(c.dot);
    c.grid = {35.0 * t_star, 36};  // row 1 is t_star; 35 t_star exceeds two periods
    const Table t = run_fig2a(c);
    EXPECT_NEAR(t.cell(1, "t_ns"), t_star, 1e-14);
    const double r0 = t.cell(1, "rho22_gamma_0tc");
    const double r1 = t.cell(1, "rho22_gamma_1tc");
    const double r4 = t.cell(1, "rho22_gamma_4tc");
    EXPECT_LT(r0, r1);
    EXPECT_LT(r1, r4);
    EXPECT_LT(r4, 1.0);
}

TEST(Fig2b, StartsInSingletAndRelaxesToMixture) {
    const Table t = run_fig2b(ScenarioConfig::defaults(Scenario::Fig2b));
    EXPECT_EQ(t.cell(0, "p02"), 0.0);
    EXPECT_EQ(t.cell(0, "p11"), 1.0);
    EXPECT_EQ(t.cell(0, "coh_re"), 0.0);
    EXPECT_EQ(t.cell(0, "coh_im"), 0.0);
    EXPECT_NEAR(t.footer_value("p02_final"), 0.5, 2e-2);
    EXPECT_NEAR(t.footer_value("p11_final"), 0.5, 2e-2);
    EXPECT_LT(t.footer_value("max_trace_error"), 1e-10);
    EXPECT_GT(t.footer_value("min_determinant"), -1e-10);

    // the spectral rate and the envelope of |rho12| measure the same thing
    const double spectral = t.footer_value("decoherence_rate_per_ns");
    EXPECT_NEAR(t.footer_value("envelope_decay_rate_per_ns") / spectral, 1.0, 0.05);
    EXPECT_NEAR(t.footer_value("t2_spectral_ns") * spectral, 1.0, 1e-10);  // 12-digit CSV values
    EXPECT_NEAR(t.footer_value("gamma_d_per_s"), 1.17519e7, 1e3);
}

TEST(ZenoSweep, DepartureShrinksWithMeasurementStrength) {
    const ScenarioConfig c = ScenarioConfig::defaults(Scenario::ZenoSweep);
    const Table t = run_zeno_sweep(c);
    const auto g = t.column("gamma_d_tc");
    const auto dep = t.column("departure");
    const auto rate = t.column("effective_rate_per_ns");
    ASSERT_EQ(g.size(), 10u);
    ASSERT_EQ(g[0], 0.0);

    EXPECT_NEAR(dep[0], t.footer_value("departure_analytic_gamma0"), 1e-12);
    EXPECT_NEAR(dep[0], 1.0 - bloch_analytic(SystemParams::from(c.dot, 0.0), c.grid.t_final), 1e-12);
    for (std::size_t i = 1; i < g.size(); ++i) {
        EXPECT_LT(dep[i], dep[i - 1]) << "gamma_d = " << g[i] << " T_c/hbar";
        EXPECT_GT(dep[i], 0.0);
        EXPECT_GT(rate[i], 0.0);
    }

    // deep in the overdamped regime the perturbative expression takes over
    const double gamma100 = t.cell(g.size() - 1, "gamma_d_per_ns");
    EXPECT_NEAR(dep.back() / overdamped_departure(c.dot.tunnel_coupling, gamma100, c.grid.t_final), 1.0,
                0.02);
}

TEST(ScalingTable, PowerLawsAndBasePoint) {
    const Table t = run_scaling_table(ScenarioConfig::defaults(Scenario::ScalingTable));
    EXPECT_NEAR(t.footer_value("slope_log_t2_vs_log_distance"), 2.0, 0.05);
    EXPECT_NEAR(t.footer_value("slope_log_t2_vs_log_bias"), -1.0, 1e-6);
    const double base = t.footer_value("base_gamma_d_per_s");
    EXPECT_GE(base, 1.08e7);
    EXPECT_LE(base, 1.20e7);
    EXPECT_EQ(t.rows().size(), 12u);
}

TEST(ScalingTable, LargeDistancesApproachExactSquareLaw) {
    ScenarioConfig c = ScenarioConfig::defaults(Scenario::ScalingTable);
    c.distances = {5000.0, 10000.0, 20000.0};
    const Table t = run_scaling_table(c);
    EXPECT_NEAR(t.footer_value("slope_log_t2_vs_log_distance"), 2.0, 2e-3);
}

TEST(RatesReport, ReferenceDetector) {
    const Table t = run_rates_report(ScenarioConfig::defaults(Scenario::RatesReport));
    ASSERT_EQ(t.rows().size(), 1u);
    EXPECT_GE(t.cell(0, "delta_t_over_t"), 0.0272);
    EXPECT_LE(t.cell(0, "delta_t_over_t"), 0.0282);
    EXPECT_NEAR(t.cell(0, "gamma_d_exact_per_s"), 1.17519e7, 1e3);
    EXPECT_NEAR(t.cell(0, "gamma_d_expanded_per_s"), 1.15886e7, 1e3);
    EXPECT_EQ(t.cell(0, "expansion_outside_validity"), 0.0);
    EXPECT_NEAR(t.cell(0, "gamma_d_times_t2_env"), 0.117519, 1e-5);
    EXPECT_EQ(t.cell(0, "environment_dominated"), 1.0);
    EXPECT_NEAR(t.cell(0, "t2_total_ns") * t.cell(0, "total_rate_per_s") * 1e-9, 1.0, 1e-10);
}

TEST(RatesReport, DetectorAtInfinityDoesNotDephase) {
    const Table t = run_rates_report(from_text(Scenario::RatesReport, "distance = inf\nt2_env = inf\n"));
    EXPECT_EQ(t.cell(0, "gamma_d_exact_per_s"), 0.0);
    EXPECT_EQ(t.cell(0, "delta_t"), 0.0);
    EXPECT_TRUE(std::isinf(t.cell(0, "t2_qpc_ns")));
    EXPECT_TRUE(std::isinf(t.cell(0, "t2_total_ns")));
    EXPECT_EQ(t.cell(0, "environment_dominated"), 0.0);
}

TEST(Evolve, ExplicitZeroRateMatchesAnalytic) {
    const Table t = run_evolve(from_text(Scenario::Evolve, "gamma_d = 0\neps = 3\ntc = 1\nt_final = 6\n"));
    EXPECT_LT(t.footer_value("max_abs_dev_from_analytic"), 1e-8);
    EXPECT_EQ(t.meta_value("gamma_d_source"), "explicit");
}

TEST(Counting, TraceOverCountsReproducesReducedRun) {
    const Table t = run_counting(ScenarioConfig::defaults(Scenario::Counting));
    EXPECT_LT(t.footer_value("max_trace_over_n_deviation"), 1e-6);
    const auto mean = t.column("mean_n");
    for (std::size_t k = 1; k < mean.size(); ++k) EXPECT_GE(mean[k], mean[k - 1]);
}

TEST(CountingDemo, DistributionIsNormalisedWithSensibleMoments) {
    const Table t = run_counting_demo(ScenarioConfig::defaults(Scenario::CountingDemo));
    double total = 0.0;
    for (double p : t.column("probability")) total += p;
    EXPECT_NEAR(total, 1.0, 1e-8);
    const double d = t.footer_value("d_rate_per_ns");
    const double dp = t.footer_value("d_prime_rate_per_ns");
    const double mean = t.footer_value("mean_n");
    EXPECT_GT(mean, dp * 5.0 - 1e-6);
    EXPECT_LT(mean, d * 5.0 + 1e-6);
}

TEST(Determinism, SameConfigSameBytes) {
    const ScenarioConfig c = ScenarioConfig::defaults(Scenario::Fig2a);
    EXPECT_EQ(run_scenario(c).to_csv(), run_scenario(c).to_csv());
}

TEST(Fits, SlopeAndOriginFit) {
    EXPECT_NEAR(log_log_slope({1, 2, 4, 8}, {3, 12, 48, 192}), 2.0, 1e-12);
    EXPECT_NEAR(fit_rate_through_origin({1, 2, 3}, {0.5, 1.0, 1.5}), 0.5, 1e-12);
    EXPECT_THROW(log_log_slope({1}, {1}), Error);
}

TEST(EnvironmentDominance, Threshold) {
    EXPECT_TRUE(environment_dominates(1.137e-2, 10.0));
    EXPECT_FALSE(environment_dominates(1.0, 10.0));
    EXPECT_FALSE(environment_dominates(0.0, kInfiniteT2));
}
