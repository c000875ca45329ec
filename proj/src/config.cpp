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

#include "qpcdeph/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "qpcdeph/errors.hpp"
#include "qpcdeph/units.hpp"

namespace qpcdeph {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_list(std::string_view s) {
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

std::pair<double, std::string> split_quantity(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw ConfigError("empty value");

    double value = 0.0;
    std::string_view rest;
    const auto lower_starts = [&](std::string_view word) {
        if (text.size() < word.size()) return false;
        for (std::size_t i = 0; i < word.size(); ++i)
            if (std::tolower(static_cast<unsigned char>(text[i])) != word[i]) return false;
        return true;
    };
    if (lower_starts("inf")) {
        std::size_t len = lower_starts("infinity") ? 8 : 3;
        value = std::numeric_limits<double>::infinity();
        rest = text.substr(len);
    } else {
        const char *first = text.data();
        const char *last = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || !std::isfinite(value))
            throw ConfigError("cannot parse number from '" + std::string(text) + "'");
        rest = std::string_view(ptr, static_cast<std::size_t>(last - ptr));
    }
    return {value, std::string(trim(rest))};
}

ConfigFile ConfigFile::parse(std::string_view text, std::string_view origin) {
    ConfigFile cfg;
    cfg.sections_[""];
    std::string current;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view l = line;
        if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
        l = trim(l);
        if (l.empty()) continue;
        const auto where = [&] { return std::string(origin) + ":" + std::to_string(line_no) + ": "; };
        if (l.front() == '[') {
            if (l.back() != ']') throw ConfigError(where() + "unterminated section header");
            current = std::string(trim(l.substr(1, l.size() - 2)));
            if (current.empty()) throw ConfigError(where() + "empty section name");
            cfg.sections_[current];
            continue;
        }
        const auto eq = l.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where() + "expected 'key = value'");
        const std::string key(trim(l.substr(0, eq)));
        const std::string value(trim(l.substr(eq + 1)));
        if (key.empty()) throw ConfigError(where() + "empty key");
        if (value.empty()) throw ConfigError(where() + "empty value for '" + key + "'");
        auto &section = cfg.sections_[current];
        if (section.contains(key)) throw ConfigError(where() + "duplicate key '" + key + "'");
        section.emplace(key, value);
    }
    return cfg;
}

ConfigFile ConfigFile::load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ConfigError("cannot read config file '" + path + "'");
    return parse(buf.str(), path);
}

void ConfigFile::set_override(const std::string &key, const std::string &value) {
    overrides_[key] = value;
}

std::optional<std::string> ConfigFile::lookup(std::string_view section, std::string_view key) const {
    if (auto it = overrides_.find(key); it != overrides_.end()) return it->second;
    if (auto s = sections_.find(section); s != sections_.end())
        if (auto it = s->second.find(key); it != s->second.end()) return it->second;
    if (auto g = sections_.find(std::string_view{}); g != sections_.end())
        if (auto it = g->second.find(key); it != g->second.end()) return it->second;
    return std::nullopt;
}

bool ConfigFile::has_section(std::string_view name) const { return sections_.contains(name); }

std::vector<std::string> ConfigFile::sections() const {
    std::vector<std::string> out;
    for (const auto &[name, _] : sections_)
        if (!name.empty()) out.push_back(name);
    return out;
}

std::vector<std::string> ConfigFile::keys() const {
    std::set<std::string> all;
    for (const auto &[_, sec] : sections_)
        for (const auto &[k, v] : sec) all.insert(k);
    for (const auto &[k, v] : overrides_) all.insert(k);
    return {all.begin(), all.end()};
}

std::optional<double> ConfigView::number(std::string_view key) const {
    const auto text = raw(key);
    if (!text) return std::nullopt;
    const auto [value, unit] = split_quantity(*text);
    if (!unit.empty())
        throw ConfigError("unexpected unit '" + unit + "' for key '" + std::string(key) + "'");
    return value;
}

std::optional<double> ConfigView::energy(std::string_view key) const {
    const auto text = raw(key);
    if (!text) return std::nullopt;
    const auto [value, unit] = split_quantity(*text);
    if (unit.empty()) return value;
    try {
        return units::to_internal_energy(value, unit);
    } catch (const UnknownUnitError &e) {
        throw ConfigError(std::string(e.what()) + " for key '" + std::string(key) + "'");
    }
}

std::optional<double> ConfigView::rate(std::string_view key) const {
    const auto text = raw(key);
    if (!text) return std::nullopt;
    const auto [value, unit] = split_quantity(*text);
    if (unit.empty() || unit == "/ns") return value;
    if (unit == "/s") return units::rate_from_si(value);
    throw ConfigError("unknown rate unit '" + unit + "' for key '" + std::string(key) + "'");
}

std::optional<std::size_t> ConfigView::count(std::string_view key) const {
    const auto v = number(key);
    if (!v) return std::nullopt;
    if (!(*v >= 0.0) || std::floor(*v) != *v || *v > 1e12)
        throw ConfigError("key '" + std::string(key) + "' must be a non-negative integer");
    return static_cast<std::size_t>(*v);
}

std::optional<std::vector<double>> ConfigView::numbers(std::string_view key) const {
    const auto text = raw(key);
    if (!text) return std::nullopt;
    std::vector<double> out;
    for (const auto item : split_list(*text)) {
        const auto [value, unit] = split_quantity(item);
        if (!unit.empty())
            throw ConfigError("unexpected unit '" + unit + "' in list '" + std::string(key) + "'");
        out.push_back(value);
    }
    return out;
}

std::optional<std::vector<double>> ConfigView::energies(std::string_view key) const {
    const auto text = raw(key);
    if (!text) return std::nullopt;
    std::vector<double> out;
    for (const auto item : split_list(*text)) {
        const auto [value, unit] = split_quantity(item);
        try {
            out.push_back(unit.empty() ? value : units::to_internal_energy(value, unit));
        } catch (const UnknownUnitError &e) {
            throw ConfigError(std::string(e.what()) + " in list '" + std::string(key) + "'");
        }
    }
    return out;
}

} // namespace qpcdeph
