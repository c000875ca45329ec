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

#include "qpcdeph/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qpcdeph/config.hpp"
#include "qpcdeph/errors.hpp"
#include "qpcdeph/scenarios.hpp"
#include "qpcdeph/table.hpp"

namespace qpcdeph {

namespace {

std::string one_line(std::string s) {
    for (char &c : s)
        if (c == '\n' || c == '\r') c = ' ';
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

struct Flag {
    const char *name;
    const char *key;
    const char *help;
};

constexpr Flag kFlags[] = {
    {"--eps", "eps", "detuning (ueV, or with unit tag, e.g. '30 ueV')"},
    {"--tc", "tc", "tunnel coupling (ueV or with unit tag)"},
    {"--gamma-d", "gamma_d", "dephasing rate in ns^-1 ('1.1e7 /s' for s^-1)"},
    {"--t-final", "t_final", "final time in ns"},
    {"--points", "points", "number of output grid points"},
    {"--dt", "dt", "RK4 step in ns (default: largest admissible)"},
    {"--n-max", "n_max", "count ladder length for counting runs"},
    {"--t2-env", "t2_env", "environment T2 in ns ('inf' to suppress)"},
    {"--out", "out", "CSV output path (default: standard output)"},
};

} // namespace

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Measurement-induced dephasing of a double-dot spin qubit read out by a QPC"};
    app.name("qpcdeph");
    app.set_version_flag("--version", std::string(version()));

    std::string tag;
    std::string config_path;
    app.add_option("scenario", tag,
                   "fig2a | fig2b | zeno-sweep | scaling-table | counting-demo | rates-report | "
                   "evolve | counting")
        ->required();
    app.add_option("-c,--config", config_path, "key = value configuration file");

    std::vector<std::optional<std::string>> values(std::size(kFlags));
    std::vector<std::string> storage(std::size(kFlags));
    std::vector<CLI::Option *> options;
    for (std::size_t i = 0; i < std::size(kFlags); ++i)
        options.push_back(app.add_option(kFlags[i].name, storage[i], kFlags[i].help));

    try {
        // CLI11 expects argv order without the program name, reversed.
        std::vector<std::string> rev(args.rbegin(), args.rend());
        if (!rev.empty()) rev.pop_back();
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "qpcdeph: error: " << one_line(e.what()) << '\n';
        return kExitUsage;
    }

    Table table;
    std::string output_path;
    try {
        const Scenario scenario = parse_scenario(tag);
        ConfigFile file = config_path.empty() ? ConfigFile::parse("") : ConfigFile::load(config_path);
        for (std::size_t i = 0; i < std::size(kFlags); ++i)
            if (options[i]->count() > 0) file.set_override(kFlags[i].key, storage[i]);
        const ScenarioConfig cfg = ScenarioConfig::resolve(scenario, file);
        output_path = cfg.output_path;
        table = run_scenario(cfg);
    } catch (const IoError &e) {
        err << "qpcdeph: error: " << one_line(e.what()) << '\n';
        return kExitIo;
    } catch (const Error &e) {
        err << "qpcdeph: error: " << one_line(e.what()) << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "qpcdeph: error: " << one_line(e.what()) << '\n';
        return kExitUsage;
    }

    const std::string csv = table.to_csv();
    if (output_path.empty()) {
        out << csv;
        out.flush();
        return out ? kExitOk : kExitIo;
    }
    std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "qpcdeph: error: cannot open '" << output_path << "' for writing\n";
        return kExitIo;
    }
    file << csv;
    file.close();
    if (!file) {
        err << "qpcdeph: error: failed writing '" << output_path << "'\n";
        return kExitIo;
    }
    return kExitOk;
}

int cli_main(int argc, char **argv, std::ostream &out, std::ostream &err) {
    std::vector<std::string> args(argv, argv + argc);
    return cli_main(args, out, err);
}

} // namespace qpcdeph
