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

/** @file scenarios.hpp
 *  @brief Named experiments assembled from the qpc-model, dynamics and
 *         counting modules, each producing one result Table.
 */

#ifndef QPCDEPH_SCENARIOS_HPP
#define QPCDEPH_SCENARIOS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpcdeph/config.hpp"
#include "qpcdeph/counting.hpp"
#include "qpcdeph/dynamics.hpp"
#include "qpcdeph/qpc_model.hpp"
#include "qpcdeph/table.hpp"

namespace qpcdeph {

enum class Scenario { Fig2a, Fig2b, ZenoSweep, ScalingTable, CountingDemo, RatesReport, Evolve, Counting };

/// "fig2a", "fig2b", "zeno-sweep", "scaling-table", "counting-demo",
/// "rates-report", "evolve", "counting". Throws ConfigError.
Scenario parse_scenario(std::string_view tag);
std::string_view scenario_tag(Scenario s) noexcept;

struct ScenarioConfig {
    Scenario scenario = Scenario::Evolve;
    DotParams dot{3.0, 1.0};
    /// Unset: derived from `qpc`.
    std::optional<double> gamma_d;
    QpcConfig qpc = QpcConfig::reference();
    TimeGrid grid{6.0, 601};
    /// Unset or <= 0: largest admissible step.
    double dt = 0.0;
    DensityMatrix2 initial = DensityMatrix2::singlet_11();
    /// ns^-1.
    std::vector<double> gamma_list;
    /// ns; kInfiniteT2 when the environment is suppressed.
    double t2_env = 10.0;
    std::vector<double> distances;  ///< nm
    std::vector<double> biases;     ///< ueV
    std::optional<std::size_t> n_max;
    std::string output_path;

    /// Scenario-specific defaults.
    static ScenarioConfig defaults(Scenario s);

    /// Defaults overlaid by the keys visible from `[tag]` in `file`.
    /// Throws ConfigError.
    static ScenarioConfig resolve(Scenario s, const ConfigFile &file);

    void validate() const;

    /// gamma_d if set, else rates(qpc).gamma_d.
    double resolved_gamma_d() const;
};

Table run_fig2a(const ScenarioConfig &cfg);
Table run_fig2b(const ScenarioConfig &cfg);
Table run_zeno_sweep(const ScenarioConfig &cfg);
Table run_scaling_table(const ScenarioConfig &cfg);
Table run_counting_demo(const ScenarioConfig &cfg);
Table run_rates_report(const ScenarioConfig &cfg);
Table run_evolve(const ScenarioConfig &cfg);
Table run_counting(const ScenarioConfig &cfg);

Table run_scenario(const ScenarioConfig &cfg);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double> &x, const std::vector<double> &y);

/// One-parameter fit k of y ~ k t through the origin.
double fit_rate_through_origin(const std::vector<double> &t, const std::vector<double> &y);

inline constexpr double kEnvironmentDominance = 5.0;

/// True when 1/T2_env >= kEnvironmentDominance * Gamma_d (and T2_env finite).
bool environment_dominates(double gamma_d, double t2_env);

/// t* = 0.1 hbar / T_c used by the Zeno sweep.
double zeno_probe_time(const DotParams &dot);

} // namespace qpcdeph

#endif // QPCDEPH_SCENARIOS_HPP
