// SPDX-License-Identifier: Apache-2.0
//
// ris-capacity: large-system analysis and optimization of multi-RIS MIMO links
// Copyright (C) 2026 the ris-capacity authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "riscap/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace riscap {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void CsvWriter::add_manifest(const std::string &line) { manifest_.push_back("# " + line); }

void CsvWriter::set_header(const std::vector<std::string> &cols) {
    header_.clear();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i)
            header_ += ',';
        header_ += cols[i];
    }
}

void CsvWriter::add_row(const std::vector<std::string> &cells) {
    std::string row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            row += ',';
        row += cells[i];
    }
    rows_.push_back(std::move(row));
}

void CsvWriter::add_row(const std::vector<double> &values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values)
        cells.push_back(format_number(v));
    add_row(cells);
}

std::string CsvWriter::str() const {
    std::string out;
    for (const auto &m : manifest_)
        out += m + "\n";
    if (!header_.empty())
        out += header_ + "\n";
    for (const auto &r : rows_)
        out += r + "\n";
    return out;
}

void CsvWriter::write(const std::string &path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("CsvWriter: cannot open " + path + " for writing");
    f << str();
    if (!f)
        throw std::runtime_error("CsvWriter: write failed for " + path);
}

} // namespace riscap
