// Copyright 2026 The tlsphot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TLSPHOT_TABLE_H
#define TLSPHOT_TABLE_H

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tlsphot {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Named columns of numbers or labels, written as CSV.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
    size_t column(std::string_view col) const;
    double number(size_t row, std::string_view col) const;
    const std::string &label(size_t row, std::string_view col) const;
};

/// Shortest representation that reads back to the same double.
std::string format_double(double x);

/// Header row, LF line endings, '.' decimal separator.
void write_csv(const Table &t, std::ostream &out);
std::string to_csv(const Table &t);

}  // namespace tlsphot

#endif
