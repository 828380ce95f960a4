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

#pragma once

#include <string>
#include <vector>

namespace riscap {

/// Deterministic 12-significant-digit number formatting shared by all CSV
/// output, so identical runs produce byte-identical files.
std::string format_number(double v);

/// CSV document with '#'-prefixed manifest comment lines above the header.
class CsvWriter {
  public:
    void add_manifest(const std::string &line);            // without the '#'
    void set_header(const std::vector<std::string> &cols);
    void add_row(const std::vector<std::string> &cells);
    void add_row(const std::vector<double> &values);

    std::string str() const;
    void write(const std::string &path) const;

  private:
    std::vector<std::string> manifest_;
    std::string header_;
    std::vector<std::string> rows_;
};

} // namespace riscap
