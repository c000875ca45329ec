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

#include "qpcdeph/scenarios.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "qpcdeph/errors.hpp"
#include "qpcdeph/units.hpp"

namespace qpcdeph {

namespace {

constexpr std::array<std::string_view, 8> kTags = {"fig2a",         "fig2b",         "zeno-sweep",
                                                   "scaling-table", "counting-demo", "rates-report",
                                                   "evolve",        "counting"};

const std::set<std::string_view> &known_keys() {
    static const std::set<std::string_view> keys = {
        "eps",          "tc",          "gamma_d",   "gamma_d_list", "gamma_d_list_tc",
        "transmission", "fermi_energy", "bias",     "distance",     "rel_permittivity",
        "t_final",      "points",      "dt",        "initial",      "t2_env",
        "distance_list", "bias_list",  "n_max",     "out"};
    return keys;
}

double tc_rate(const DotParams &dot) { return dot.tunnel_coupling / units::kHbar; }

std::string list_to_string(const std::vector<double> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_number(v[i]);
    return s.empty() ? "-" : s;
}

void describe(const ScenarioConfig &cfg, Table &t) {
    t.add_meta("scenario", std::string(scenario_tag(cfg.scenario)));
    t.add_meta("units", "energy ueV, time ns, length nm, rates ns^-1 unless suffixed _per_s");
    t.add_meta("eps_ueV", cfg.dot.detuning);
    t.add_meta("tc_ueV", cfg.dot.tunnel_coupling);
    t.add_meta("gamma_d_source", cfg.gamma_d ? "explicit" : "qpc");
    t.add_meta("transmission", cfg.qpc.transmission);
    t.add_meta("fermi_energy_ueV", cfg.qpc.fermi_energy);
    t.add_meta("bias_ueV", cfg.qpc.bias_energy);
    t.add_meta("distance_nm", cfg.qpc.distance);
    t.add_meta("rel_permittivity", cfg.qpc.rel_permittivity);
    t.add_meta("t_final_ns", cfg.grid.t_final);
    t.add_meta("points", static_cast<double>(cfg.grid.points));
    t.add_meta("dt_ns", cfg.dt > 0.0 ? format_number(cfg.dt) : std::string("auto"));
    t.add_meta("initial", list_to_string({cfg.initial.p02, cfg.initial.p11, cfg.initial.coherence_re,
                                          cfg.initial.coherence_im}));
    t.add_meta("gamma_d_list_per_ns", list_to_string(cfg.gamma_list));
    t.add_meta("t2_env_ns", cfg.t2_env);
    t.add_meta("distance_list_nm", list_to_string(cfg.distances));
    t.add_meta("bias_list_ueV", list_to_string(cfg.biases));
    t.add_meta("n_max", cfg.n_max ? format_number(static_cast<double>(*cfg.n_max)) : std::string("auto"));
}

void add_diagnostics(Table &t, const TrajectoryDiagnostics &d) {
    t.add_footer("steps", static_cast<double>(d.steps));
    t.add_footer("step_size_ns", d.step_size);
    t.add_footer("max_trace_error", d.max_trace_error);
    t.add_footer("min_determinant", d.min_determinant);
    t.add_footer("max_purity_increase", d.max_purity_increase);
}

void append_state_rows(Table &t, const Trajectory &traj) {
    for (std::size_t k = 0; k < traj.size(); ++k) {
        const auto &s = traj.states[k];
        check_state(s);
        t.add_row(std::vector<double>{traj.times[k], s.p02, s.p11, s.coherence_re, s.coherence_im,
                                      s.coherence_abs(), traj.purity[k]});
    }
}

bool starts_in_11(const DensityMatrix2 &s) {
    return s.p02 == 0.0 && s.p11 == 1.0 && s.coherence_re == 0.0 && s.coherence_im == 0.0;
}

double max_analytic_deviation(const Trajectory &traj, const SystemParams &p) {
    double dev = 0.0;
    for (std::size_t k = 0; k < traj.size(); ++k)
        dev = std::max(dev, std::abs(traj.states[k].p11 - bloch_analytic(p, traj.times[k])));
    return dev;
}

// log |rho12| envelope: maxima over equal windows in the second half of
// the trajectory, then a straight-line fit.
double envelope_decay_rate(const Trajectory &traj) {
    constexpr std::size_t kWindows = 50;
    const std::size_t start = traj.size() / 2;
    const std::size_t span = traj.size() - start;
    if (span < 3 * kWindows) return std::nan("");
    const std::size_t width = span / kWindows;
    std::vector<double> t, logy;
    for (std::size_t w = 0; w < kWindows; ++w) {
        double best = 0.0, best_t = 0.0;
        for (std::size_t k = start + w * width; k < start + (w + 1) * width; ++k) {
            const double c = traj.states[k].coherence_abs();
            if (c > best) {
                best = c;
                best_t = traj.times[k];
            }
        }
        if (best > 1e-300) {
            t.push_back(best_t);
            logy.push_back(std::log(best));
        }
    }
    if (t.size() < 3) return std::nan("");
    const double n = static_cast<double>(t.size());
    double st = 0, sy = 0, stt = 0, sty = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        st += t[i];
        sy += logy[i];
        stt += t[i] * t[i];
        sty += t[i] * logy[i];
    }
    return -(n * sty - st * sy) / (n * stt - st * st);
}

TunnelingRates counting_rates(const ScenarioConfig &cfg) {
    if (cfg.gamma_d) return rates_with_dephasing(rates(cfg.qpc).d_rate, *cfg.gamma_d);
    return rates(cfg.qpc);
}

struct CountingRun {
    TunnelingRates rates;
    std::size_t n_max = 0;
    CountingTrajectory counting;
    Trajectory reduced;
    double max_deviation = 0.0;
};

CountingRun run_counting_core(const ScenarioConfig &cfg) {
    CountingRun run;
    run.rates = counting_rates(cfg);
    run.n_max = cfg.n_max.value_or(required_n_max(run.rates, cfg.grid.t_final));
    run.counting = evolve_counting(cfg.initial, cfg.dot, run.rates, cfg.grid, run.n_max, cfg.dt);
    run.reduced = evolve_rk4(cfg.initial, SystemParams::from(cfg.dot, run.rates.gamma_d), cfg.grid);
    for (std::size_t k = 0; k < run.reduced.size(); ++k) {
        const auto a = run.counting.states[k].reduced().to_array();
        const auto b = run.reduced.states[k].to_array();
        for (std::size_t i = 0; i < 4; ++i)
            run.max_deviation = std::max(run.max_deviation, std::abs(a[i] - b[i]));
    }
    return run;
}

void add_counting_footer(Table &t, const CountingRun &run) {
    t.add_footer("d_rate_per_ns", run.rates.d_rate);
    t.add_footer("d_prime_rate_per_ns", run.rates.d_prime_rate);
    t.add_footer("gamma_d_per_ns", run.rates.gamma_d);
    t.add_footer("n_max", static_cast<double>(run.n_max));
    t.add_footer("steps", static_cast<double>(run.counting.steps));
    t.add_footer("step_size_ns", run.counting.step_size);
    t.add_footer("max_trace_over_n_deviation", run.max_deviation);
}

} // namespace

Scenario parse_scenario(std::string_view tag) {
    for (std::size_t i = 0; i < kTags.size(); ++i)
        if (kTags[i] == tag) return static_cast<Scenario>(i);
    throw ConfigError("unknown scenario '" + std::string(tag) + "'");
}

std::string_view scenario_tag(Scenario s) noexcept { return kTags[static_cast<std::size_t>(s)]; }

double zeno_probe_time(const DotParams &dot) {
    if (!(dot.tunnel_coupling > 0.0)) throw InvalidArgument("Zeno probe time needs T_c > 0");
    return 0.1 * units::kHbar / dot.tunnel_coupling;
}

ScenarioConfig ScenarioConfig::defaults(Scenario s) {
    ScenarioConfig c;
    c.scenario = s;
    switch (s) {
    case Scenario::Fig2a:
        c.grid = {6.0, 601};
        c.gamma_list = {0.0, tc_rate(c.dot), 4.0 * tc_rate(c.dot)};
        break;
    case Scenario::Fig2b:
        c.dot = {30.0, 10.0};
        c.grid = {3000.0, 3001};
        break;
    case Scenario::ZenoSweep:
        c.grid = {zeno_probe_time(c.dot), 21};
        for (double m : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 100.0})
            c.gamma_list.push_back(m * tc_rate(c.dot));
        break;
    case Scenario::ScalingTable:
        c.distances = {100.0, 150.0, 200.0, 300.0, 400.0, 600.0, 800.0};
        c.biases = {250.0, 500.0, 1000.0, 2000.0, 4000.0};
        break;
    case Scenario::CountingDemo:
    case Scenario::Counting:
        c.grid = {5.0, 51};
        break;
    case Scenario::RatesReport:
    case Scenario::Evolve:
        break;
    }
    return c;
}

ScenarioConfig ScenarioConfig::resolve(Scenario s, const ConfigFile &file) {
    for (const auto &key : file.keys())
        if (!known_keys().contains(key)) throw ConfigError("unknown config key '" + key + "'");

    ScenarioConfig c = defaults(s);
    const ConfigView v(file, std::string(scenario_tag(s)));

    const DotParams old_dot = c.dot;
    if (auto x = v.energy("eps")) c.dot.detuning = *x;
    if (auto x = v.energy("tc")) c.dot.tunnel_coupling = *x;
    if (auto x = v.rate("gamma_d")) c.gamma_d = *x;

    if (auto x = v.number("transmission")) c.qpc.transmission = *x;
    if (auto x = v.energy("fermi_energy")) c.qpc.fermi_energy = *x;
    if (auto x = v.energy("bias")) c.qpc.bias_energy = *x;
    if (auto x = v.number("distance")) c.qpc.distance = *x;
    if (auto x = v.number("rel_permittivity")) c.qpc.rel_permittivity = *x;

    if (s == Scenario::ZenoSweep) {
        if (c.dot.tunnel_coupling <= 0.0) throw ConfigError("zeno-sweep needs tc > 0");
        c.grid.t_final = zeno_probe_time(c.dot);
    }
    if (auto x = v.number("t_final")) {
        if (s == Scenario::ZenoSweep) throw ConfigError("zeno-sweep fixes t_final to 0.1 hbar/T_c");
        c.grid.t_final = *x;
    }
    if (auto x = v.count("points")) c.grid.points = *x;
    if (auto x = v.number("dt")) c.dt = *x;

    if (auto x = v.numbers("initial")) {
        if (x->size() != 4) throw ConfigError("initial needs four values: p02, p11, re, im");
        c.initial = {(*x)[0], (*x)[1], (*x)[2], (*x)[3]};
    }

    const bool has_list = v.raw("gamma_d_list").has_value();
    const bool has_list_tc = v.raw("gamma_d_list_tc").has_value();
    if (has_list && has_list_tc) throw ConfigError("give either gamma_d_list or gamma_d_list_tc, not both");
    if (has_list) {
        c.gamma_list = *v.numbers("gamma_d_list");
    } else if (has_list_tc) {
        const std::vector<double> multiples = *v.numbers("gamma_d_list_tc");
        c.gamma_list.clear();
        for (double m : multiples) c.gamma_list.push_back(m * tc_rate(c.dot));
    } else if (old_dot.tunnel_coupling != c.dot.tunnel_coupling && old_dot.tunnel_coupling > 0.0) {
        // default lists are in units of T_c / hbar
        for (double &g : c.gamma_list) g *= c.dot.tunnel_coupling / old_dot.tunnel_coupling;
    }

    if (auto x = v.number("t2_env")) c.t2_env = *x;
    if (auto x = v.numbers("distance_list")) c.distances = *x;
    if (auto x = v.energies("bias_list")) c.biases = *x;
    if (auto x = v.count("n_max")) c.n_max = *x;
    if (auto x = v.raw("out")) c.output_path = *x;

    try {
        c.validate();
    } catch (const ConfigError &) {
        throw;
    } catch (const Error &e) {
        throw ConfigError(e.what());
    }
    return c;
}

void ScenarioConfig::validate() const {
    SystemParams::from(dot, gamma_d.value_or(0.0)).validate();
    qpc.validate();
    grid.validate();
    check_state(initial);
    if (dt < 0.0 || !std::isfinite(dt)) throw ConfigError("dt must be positive (or omitted)");
    for (double g : gamma_list)
        if (!(g >= 0.0) || !std::isfinite(g)) throw ConfigError("gamma_d list entries must be >= 0");
    if (!(t2_env > 0.0)) throw ConfigError("t2_env must be positive or inf");
    for (double a : distances)
        if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("distance_list entries must be positive");
    for (double b : biases)
        if (!(b > 0.0) || !std::isfinite(b)) throw ConfigError("bias_list entries must be positive");
    if (n_max && *n_max == 0) throw ConfigError("n_max must be positive");

    switch (scenario) {
    case Scenario::Fig2a:
        if (gamma_list.empty()) throw ConfigError("fig2a needs a gamma_d list");
        if (grid.t_final < 2.0 * bloch_period(dot))
            throw ConfigError("fig2a needs t_final >= two Rabi periods (" +
                              format_number(2.0 * bloch_period(dot)) + " ns)");
        break;
    case Scenario::ZenoSweep:
        if (gamma_list.size() < 4 ||
            std::find(gamma_list.begin(), gamma_list.end(), 0.0) == gamma_list.end())
            throw ConfigError("zeno-sweep needs at least 4 gamma_d values including 0");
        break;
    case Scenario::ScalingTable:
        if (distances.size() < 2 || biases.size() < 2)
            throw ConfigError("scaling-table needs at least two distances and two biases");
        break;
    default:
        break;
    }
}

double ScenarioConfig::resolved_gamma_d() const { return gamma_d ? *gamma_d : rates(qpc).gamma_d; }

Table run_fig2a(const ScenarioConfig &cfg) {
    cfg.validate();
    Table t;
    describe(cfg, t);
    t.add_meta("time_axis", "t_ns in ns; t_tc = t * T_c / hbar (dimensionless)");
    t.add_meta("gamma_d_convention", "gamma_d[ns^-1] = gamma_d[ueV] / hbar; labels in units of T_c/hbar");

    const double unit = tc_rate(cfg.dot);
    std::vector<std::string> cols = {"t_ns", "t_tc"};
    std::vector<Trajectory> curves;
    for (double g : cfg.gamma_list) {
        cols.push_back("rho22_gamma_" + format_number(unit > 0 ? g / unit : g) + "tc");
        curves.push_back(evolve_rk4(cfg.initial, SystemParams::from(cfg.dot, g), cfg.grid, cfg.dt));
    }
    t.set_columns(cols);
    for (std::size_t k = 0; k < cfg.grid.points; ++k) {
        std::vector<double> row = {curves[0].times[k], curves[0].times[k] * unit};
        for (const auto &c : curves) {
            check_state(c.states[k]);
            row.push_back(c.states[k].p11);
        }
        t.add_row(row);
    }
    for (std::size_t i = 0; i < cfg.gamma_list.size(); ++i)
        if (cfg.gamma_list[i] == 0.0 && starts_in_11(cfg.initial))
            t.add_footer("max_abs_dev_from_analytic",
                         max_analytic_deviation(curves[i], SystemParams::from(cfg.dot, 0.0)));
    double worst_purity = 0.0;
    for (const auto &c : curves) worst_purity = std::max(worst_purity, c.diagnostics.max_purity_increase);
    t.add_footer("max_purity_increase", worst_purity);
    return t;
}

Table run_fig2b(const ScenarioConfig &cfg) {
    cfg.validate();
    const double gamma = cfg.resolved_gamma_d();
    const SystemParams params = SystemParams::from(cfg.dot, gamma);
    const Trajectory traj = evolve_rk4(cfg.initial, params, cfg.grid, cfg.dt);

    Table t;
    describe(cfg, t);
    t.set_columns({"t_ns", "p02", "p11", "coh_re", "coh_im", "coh_abs", "purity"});
    append_state_rows(t, traj);

    t.add_footer("gamma_d_per_s", units::rate_to_si(gamma));
    double rate = std::nan("");
    try {
        rate = decoherence_rate(params);
    } catch (const NoDecayError &) {
    }
    t.add_footer("decoherence_rate_per_ns", rate);
    t.add_footer("t2_spectral_ns", 1.0 / rate);
    t.add_footer("envelope_decay_rate_per_ns", envelope_decay_rate(traj));
    const auto &last = traj.states.back();
    t.add_footer("coherence_abs_final", last.coherence_abs());
    t.add_footer("p02_final", last.p02);
    t.add_footer("p11_final", last.p11);
    add_diagnostics(t, traj.diagnostics);
    return t;
}

Table run_zeno_sweep(const ScenarioConfig &cfg) {
    cfg.validate();
    const double t_star = zeno_probe_time(cfg.dot);
    const double unit = tc_rate(cfg.dot);

    Table t;
    describe(cfg, t);
    t.add_meta("t_star_ns", t_star);
    t.set_columns({"gamma_d_per_ns", "gamma_d_tc", "rho22_tstar", "departure", "effective_rate_per_ns"});

    std::vector<double> times;
    for (std::size_t k = 1; k < cfg.grid.points; ++k)
        times.push_back(t_star * static_cast<double>(k) / static_cast<double>(cfg.grid.points - 1));

    for (double g : cfg.gamma_list) {
        const SystemParams p = SystemParams::from(cfg.dot, g);
        const DensityMatrix2 s = evolve_expm(cfg.initial, p, t_star);
        check_state(s);
        std::vector<double> departures;
        for (double ti : times) departures.push_back(1.0 - evolve_expm(cfg.initial, p, ti).p11);
        t.add_row(std::vector<double>{g, g / unit, s.p11, 1.0 - s.p11,
                                      fit_rate_through_origin(times, departures)});
        if (g == 0.0 && starts_in_11(cfg.initial))
            t.add_footer("departure_analytic_gamma0", 1.0 - bloch_analytic(p, t_star));
    }
    return t;
}

Table run_scaling_table(const ScenarioConfig &cfg) {
    cfg.validate();
    Table t;
    describe(cfg, t);
    t.set_columns({"sweep", "distance_nm", "bias_ueV", "gamma_d_per_s", "t2_ns"});

    auto row = [&](std::string sweep, const QpcConfig &q, std::vector<double> &t2_out) {
        const double g = rates(q).gamma_d;
        t2_out.push_back(1.0 / g);
        t.add_row(std::vector<std::string>{std::move(sweep), format_number(q.distance),
                                           format_number(q.bias_energy),
                                           format_number(units::rate_to_si(g)), format_number(1.0 / g)});
    };

    std::vector<double> t2_a, t2_v;
    for (double a : cfg.distances) {
        QpcConfig q = cfg.qpc;
        q.distance = a;
        row("distance", q, t2_a);
    }
    for (double b : cfg.biases) {
        QpcConfig q = cfg.qpc;
        q.bias_energy = b;
        row("bias", q, t2_v);
    }
    t.add_footer("slope_log_t2_vs_log_distance", log_log_slope(cfg.distances, t2_a));
    t.add_footer("slope_log_t2_vs_log_bias", log_log_slope(cfg.biases, t2_v));
    t.add_footer("base_gamma_d_per_s", units::rate_to_si(rates(cfg.qpc).gamma_d));
    return t;
}

Table run_counting_demo(const ScenarioConfig &cfg) {
    cfg.validate();
    const CountingRun run = run_counting_core(cfg);
    const NResolvedState &final_state = run.counting.states.back();
    const CountDistribution dist = final_state.distribution();

    Table t;
    describe(cfg, t);
    t.set_columns({"n", "probability"});
    for (std::size_t n = 0; n < dist.probabilities.size(); ++n)
        t.add_row(std::vector<double>{static_cast<double>(n), dist.probabilities[n]});
    add_counting_footer(t, run);
    t.add_footer("mean_n", dist.mean);
    t.add_footer("variance_n", dist.variance);
    t.add_footer("fano_factor", dist.mean > 0.0 ? dist.variance / dist.mean : std::nan(""));
    t.add_footer("detector_signal_final_per_ns", detector_signal(final_state, run.rates));
    return t;
}

Table run_counting(const ScenarioConfig &cfg) {
    cfg.validate();
    const CountingRun run = run_counting_core(cfg);
    Table t;
    describe(cfg, t);
    t.set_columns({"t_ns", "p02", "p11", "coh_re", "coh_im", "mean_n", "variance_n",
                   "detector_signal_per_ns"});
    for (std::size_t k = 0; k < run.counting.times.size(); ++k) {
        const NResolvedState &s = run.counting.states[k];
        const DensityMatrix2 r = s.reduced();
        const CountDistribution d = s.distribution();
        t.add_row(std::vector<double>{run.counting.times[k], r.p02, r.p11, r.coherence_re,
                                      r.coherence_im, d.mean, d.variance, detector_signal(r, run.rates)});
    }
    add_counting_footer(t, run);
    return t;
}

Table run_rates_report(const ScenarioConfig &cfg) {
    cfg.validate();
    const TransmissionChange change = transmission_change(cfg.qpc);
    const TunnelingRates r = rates(cfg.qpc);
    const ExpandedDephasing expanded = gamma_d_expanded(cfg.qpc);
    const double total = combine_decoherence(r.gamma_d, cfg.t2_env);
    const bool env_dominated = environment_dominates(r.gamma_d, cfg.t2_env);

    Table t;
    describe(cfg, t);
    t.set_columns({"transmission", "transmission_prime", "delta_t", "delta_t_over_t",
                   "coulomb_shift_ueV", "d_rate_per_s", "d_prime_rate_per_s", "gamma_d_exact_per_s",
                   "gamma_d_expanded_per_s", "expansion_outside_validity", "t2_qpc_ns", "t2_env_ns",
                   "total_rate_per_s", "t2_total_ns", "gamma_d_times_t2_env", "environment_dominated"});
    const double shift = std::isinf(cfg.qpc.distance) ? 0.0 : coulomb_shift(cfg.qpc.distance, cfg.qpc.rel_permittivity);
    t.add_row(std::vector<double>{change.transmission,
                                  change.transmission_prime,
                                  change.delta,
                                  change.relative(),
                                  shift,
                                  units::rate_to_si(r.d_rate),
                                  units::rate_to_si(r.d_prime_rate),
                                  units::rate_to_si(r.gamma_d),
                                  units::rate_to_si(expanded.gamma_d),
                                  expanded.outside_validity ? 1.0 : 0.0,
                                  1.0 / r.gamma_d,
                                  cfg.t2_env,
                                  units::rate_to_si(total),
                                  1.0 / total,
                                  std::isinf(cfg.t2_env) ? kInfiniteT2 : r.gamma_d * cfg.t2_env,
                                  env_dominated ? 1.0 : 0.0});
    return t;
}

Table run_evolve(const ScenarioConfig &cfg) {
    cfg.validate();
    const SystemParams params = SystemParams::from(cfg.dot, cfg.resolved_gamma_d());
    const Trajectory traj = evolve_rk4(cfg.initial, params, cfg.grid, cfg.dt);
    Table t;
    describe(cfg, t);
    t.add_meta("gamma_d_per_ns", params.gamma_d);
    t.set_columns({"t_ns", "p02", "p11", "coh_re", "coh_im", "coh_abs", "purity"});
    append_state_rows(t, traj);
    if (params.gamma_d == 0.0 && starts_in_11(cfg.initial))
        t.add_footer("max_abs_dev_from_analytic", max_analytic_deviation(traj, params));
    add_diagnostics(t, traj.diagnostics);
    return t;
}

Table run_scenario(const ScenarioConfig &cfg) {
    switch (cfg.scenario) {
    case Scenario::Fig2a: return run_fig2a(cfg);
    case Scenario::Fig2b: return run_fig2b(cfg);
    case Scenario::ZenoSweep: return run_zeno_sweep(cfg);
    case Scenario::ScalingTable: return run_scaling_table(cfg);
    case Scenario::CountingDemo: return run_counting_demo(cfg);
    case Scenario::RatesReport: return run_rates_report(cfg);
    case Scenario::Evolve: return run_evolve(cfg);
    case Scenario::Counting: return run_counting(cfg);
    }
    throw Error("unhandled scenario");
}

bool environment_dominates(double gamma_d, double t2_env) {
    if (std::isinf(t2_env)) return false;
    return 1.0 / t2_env >= kEnvironmentDominance * gamma_d;
}

double log_log_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) throw InvalidArgument("slope fit needs >= 2 matched points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw InvalidArgument("log-log fit needs positive data");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw InvalidArgument("log-log fit needs distinct x values");
    return (n * sxy - sx * sy) / denom;
}

double fit_rate_through_origin(const std::vector<double> &t, const std::vector<double> &y) {
    if (t.size() != y.size() || t.empty()) throw InvalidArgument("rate fit needs matched points");
    double sty = 0, stt = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        sty += t[i] * y[i];
        stt += t[i] * t[i];
    }
    if (stt == 0.0) throw InvalidArgument("rate fit needs nonzero times");
    return sty / stt;
}

} // namespace qpcdeph
