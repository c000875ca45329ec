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

#include "qpcdeph/table.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "qpcdeph/errors.hpp"

#ifndef QPCDEPH_VERSION
#define QPCDEPH_VERSION "0.0.0"
#endif

namespace qpcdeph {

std::string_view version() noexcept { return QPCDEPH_VERSION; }

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0.0) return "0";  // folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void Table::add_meta(std::string key, std::string value) {
    meta_.emplace_back(std::move(key), std::move(value));
}

void Table::add_meta(std::string key, double value) { add_meta(std::move(key), format_number(value)); }

void Table::set_columns(std::vector<std::string> columns) { columns_ = std::move(columns); }

void Table::add_row(const std::vector<double> &values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_number(v));
    add_row(std::move(cells));
}

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size()) throw Error("row width does not match the column count");
    rows_.push_back(std::move(cells));
}

void Table::add_footer(std::string key, double value) {
    add_footer(std::move(key), format_number(value));
}

void Table::add_footer(std::string key, std::string value) {
    footer_.emplace_back(std::move(key), std::move(value));
}

std::size_t Table::column_index(std::string_view name) const {
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (columns_[i] == name) return i;
    throw Error("no column named '" + std::string(name) + "'");
}

std::vector<double> Table::column(std::string_view name) const {
    const std::size_t idx = column_index(name);
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const auto &row : rows_) out.push_back(std::stod(row[idx]));
    return out;
}

double Table::cell(std::size_t row, std::string_view name) const {
    return std::stod(rows_.at(row).at(column_index(name)));
}

double Table::footer_value(std::string_view key) const {
    for (const auto &[k, v] : footer_)
        if (k == key) return std::stod(v);
    throw Error("no footer record '" + std::string(key) + "'");
}

std::string Table::meta_value(std::string_view key) const {
    for (const auto &[k, v] : meta_)
        if (k == key) return v;
    throw Error("no metadata record '" + std::string(key) + "'");
}

void Table::write_csv(std::ostream &out) const {
    out << "# qpcdeph " << version() << '\n';
    for (const auto &[k, v] : meta_) out << "# " << k << " = " << v << '\n';
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
    out << '\n';
    for (const auto &row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
        out << '\n';
    }
    for (const auto &[k, v] : footer_) out << "# " << k << " = " << v << '\n';
}

std::string Table::to_csv() const {
    std::ostringstream out;
    write_csv(out);
    return out.str();
}

} // namespace qpcdeph
