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

#include <array>
#include <complex>
#include <cstdint>

namespace riscap {

/// Philox 4x32 counter-based generator, 10 rounds.
///
/// Counter-based streams make parallel sampling reproducible: the value at
/// (counter, key) is a pure function, so worker threads never share state.
struct Philox4x32 {
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Block generate(Block counter, Key key);
};

/// One logical random substream, keyed by (seed, stream id, slot).
///
/// Each draw consumes one Philox block addressed by an incrementing block
/// index, so the n-th draw of a given substream is identical no matter how
/// many other substreams were consumed before or concurrently.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id, std::uint32_t slot = 0);

    /// Uniform double in (0, 1].
    double uniform();

    /// Standard circularly-symmetric complex Gaussian, E|z|^2 = 1.
    std::complex<double> gaussian();

  private:
    Philox4x32::Key key_;
    std::uint32_t stream_lo_;
    std::uint32_t stream_hi_;
    std::uint32_t slot_;
    std::uint32_t block_ = 0;

    Philox4x32::Block next_block();
};

} // namespace riscap
