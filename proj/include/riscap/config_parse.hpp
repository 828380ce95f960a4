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

#include "riscap/experiment.hpp"

#include <stdexcept>
#include <string>

namespace riscap {

/// Config parse failure with the offending line and field in the message.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string &origin, int line, const std::string &what_arg);
    int line() const { return line_; }

  private:
    int line_;
};

/// Parses the flat key/value experiment format (sections in brackets, '#'
/// comments, comma-separated value lists). Angles are accepted in degrees and
/// the SNR in dB; both are converted at this boundary.
ExperimentSpec parse_experiment_text(const std::string &text,
                                     const std::string &origin = "<string>");

ExperimentSpec parse_experiment_file(const std::string &path);

} // namespace riscap
