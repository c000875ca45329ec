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

/** @file table.hpp
 *  @brief In-memory result table and its CSV serialization.
 *
 *  Layout of a written table:
 *
 *      # qpcdeph <version>
 *      # <key> = <value>          (resolved parameters, in insertion order)
 *      col_a,col_b,...
 *      1.5,2,...
 *      # <footer key> = <value>   (summary records)
 *
 *  Numbers go through format_number (12 significant digits, "%.12g"), so
 *  identical inputs give byte-identical files.
 */

#ifndef QPCDEPH_TABLE_HPP
#define QPCDEPH_TABLE_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qpcdeph {

std::string_view version() noexcept;

std::string format_number(double value);

class Table {
public:
    using Entry = std::pair<std::string, std::string>;

    void add_meta(std::string key, std::string value);
    void add_meta(std::string key, double value);
    void set_columns(std::vector<std::string> columns);
    void add_row(const std::vector<double> &values);
    void add_row(std::vector<std::string> cells);
    void add_footer(std::string key, double value);
    void add_footer(std::string key, std::string value);

    const std::vector<Entry> &meta() const noexcept { return meta_; }
    const std::vector<std::string> &columns() const noexcept { return columns_; }
    const std::vector<std::vector<std::string>> &rows() const noexcept { return rows_; }
    const std::vector<Entry> &footer() const noexcept { return footer_; }

    std::size_t column_index(std::string_view name) const;
    /// Numeric view of a column. Throws Error for unknown names.
    std::vector<double> column(std::string_view name) const;
    double cell(std::size_t row, std::string_view name) const;
    double footer_value(std::string_view key) const;
    std::string meta_value(std::string_view key) const;

    void write_csv(std::ostream &out) const;
    std::string to_csv() const;

private:
    std::vector<Entry> meta_;
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
    std::vector<Entry> footer_;
};

} // namespace qpcdeph

#endif // QPCDEPH_TABLE_HPP
