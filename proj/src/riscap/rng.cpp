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

#include "riscap/rng.hpp"

#include <cmath>

namespace riscap {

namespace {

constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(Philox4x32::Block &x, const Philox4x32::Key &k) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * x[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * x[2];
    const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
    const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
    const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
    x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}

// 53-bit uniform in (0, 1]; never returns 0 so it is safe inside log().
inline double uniform_from_words(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
    return static_cast<double>(bits + 1) * 0x1p-53;
}

} // namespace

Philox4x32::Block Philox4x32::generate(Block counter, Key key) {
    for (int round = 0; round < 10; ++round) {
        philox_round(counter, key);
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return counter;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id, std::uint32_t slot)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      stream_lo_(static_cast<std::uint32_t>(stream_id)),
      stream_hi_(static_cast<std::uint32_t>(stream_id >> 32)), slot_(slot) {}

Philox4x32::Block RandomStream::next_block() {
    // Counter layout: (stream lo, stream hi, slot, block). The slot keeps
    // independent draws within one stream (e.g. the per-link channel
    // matrices of one Monte Carlo sample) from colliding.
    return Philox4x32::generate({stream_lo_, stream_hi_, slot_, block_++}, key_);
}

double RandomStream::uniform() {
    const auto b = next_block();
    return uniform_from_words(b[0], b[1]);
}

std::complex<double> RandomStream::gaussian() {
    const auto b = next_block();
    const double u1 = uniform_from_words(b[0], b[1]);
    const double u2 = uniform_from_words(b[2], b[3]);
    const double r = std::sqrt(-std::log(u1));
    const double phase = 2.0 * M_PI * u2;
    return {r * std::cos(phase), r * std::sin(phase)};
}

} // namespace riscap
