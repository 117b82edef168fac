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

#include "tlsphot/table.h"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tlsphot {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("row width does not match the columns of table " + name);
    }
    rows.push_back(std::move(row));
}

size_t Table::column(std::string_view col) const {
    for (size_t k = 0; k < columns.size(); k++) {
        if (columns[k] == col) {
            return k;
        }
    }
    throw std::out_of_range("table " + name + " has no column " + std::string(col));
}

double Table::number(size_t row, std::string_view col) const {
    const Cell &c = rows.at(row).at(column(col));
    if (const auto *d = std::get_if<double>(&c)) {
        return *d;
    }
    if (const auto *i = std::get_if<std::int64_t>(&c)) {
        return (double)*i;
    }
    throw std::invalid_argument("column " + std::string(col) + " holds text");
}

const std::string &Table::label(size_t row, std::string_view col) const {
    return std::get<std::string>(rows.at(row).at(column(col)));
}

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

namespace {

std::string quote(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

}  // namespace

void write_csv(const Table &t, std::ostream &out) {
    for (size_t k = 0; k < t.columns.size(); k++) {
        out << (k ? "," : "") << quote(t.columns[k]);
    }
    out << '\n';
    for (const auto &row : t.rows) {
        for (size_t k = 0; k < row.size(); k++) {
            if (k) {
                out << ',';
            }
            std::visit(
                [&](const auto &v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        out << format_double(v);
                    } else if constexpr (std::is_same_v<T, std::int64_t>) {
                        out << v;
                    } else {
                        out << quote(v);
                    }
                },
                row[k]);
        }
        out << '\n';
    }
}

std::string to_csv(const Table &t) {
    std::ostringstream out;
    write_csv(t, out);
    return out.str();
}

}  // namespace tlsphot
