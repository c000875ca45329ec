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

/** @file config.hpp
 *  @brief Flat `key = value` configuration with optional `[section]` blocks.
 *
 *  Keys before the first section are global. A section named after a
 *  scenario overrides the global value for that scenario; an override
 *  layer (command-line flags) wins over both. `#` starts a comment.
 *
 *  Energy values may carry a unit tag ("10 meV", "1 mV", "30 ueV"); bare
 *  numbers are ueV. Rates may carry "/s" to be read as s^-1.
 */

#ifndef QPCDEPH_CONFIG_HPP
#define QPCDEPH_CONFIG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qpcdeph {

class ConfigFile {
public:
    using Section = std::map<std::string, std::string, std::less<>>;

    /// Throws ConfigError with the offending line number.
    static ConfigFile parse(std::string_view text, std::string_view origin = "<string>");

    /// Throws ConfigError if the file cannot be read.
    static ConfigFile load(const std::string &path);

    void set_override(const std::string &key, const std::string &value);

    /// Resolution order: override, [section], global.
    std::optional<std::string> lookup(std::string_view section, std::string_view key) const;

    bool has_section(std::string_view name) const;
    std::vector<std::string> sections() const;

    /// Keys present anywhere (global, any section, overrides).
    std::vector<std::string> keys() const;

private:
    std::map<std::string, Section, std::less<>> sections_;
    Section overrides_;
};

/// Typed view of one scenario's resolved keys. All getters throw
/// ConfigError when a value does not parse.
class ConfigView {
public:
    ConfigView(const ConfigFile &file, std::string section) : file_(&file), section_(std::move(section)) {}

    std::optional<std::string> raw(std::string_view key) const { return file_->lookup(section_, key); }

    std::optional<double> number(std::string_view key) const;
    /// ueV; unit tags via units::to_internal_energy.
    std::optional<double> energy(std::string_view key) const;
    /// ns^-1; "/s" tag converts from s^-1.
    std::optional<double> rate(std::string_view key) const;
    std::optional<std::size_t> count(std::string_view key) const;
    /// Comma-separated numbers.
    std::optional<std::vector<double>> numbers(std::string_view key) const;
    std::optional<std::vector<double>> energies(std::string_view key) const;

private:
    const ConfigFile *file_;
    std::string section_;
};

/// Parses "1.5", "inf", "10 meV" style values into (number, unit tag).
std::pair<double, std::string> split_quantity(std::string_view text);

} // namespace qpcdeph

#endif // QPCDEPH_CONFIG_HPP
