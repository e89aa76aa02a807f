// Copyright 2026 The levyfp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace levyfp {

/// Philox4x32-10 block function (Salmon, Moraes, Dror, Shaw; SC'11).
inline constexpr std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                                          std::array<std::uint32_t, 2> key) noexcept {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    key[0] += 0x9E3779B9u;
    key[1] += 0xBB67AE85u;
  }
  return ctr;
}

/// SplitMix64 finalizer; a bijection on 64-bit words.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Hashes a path of identifiers (experiment, purpose, index, ...) into a
/// stream id. Order matters.
std::uint64_t derive_stream_id(std::initializer_list<std::uint64_t> path) noexcept;

/// Maps 52 high bits of a word to the open interval (0, 1): the grid
/// (k + 1/2) 2^-52 whose ends 2^-53 and 1 - 2^-53 are exact doubles.
inline constexpr double to_open_unit(std::uint64_t bits) noexcept {
  return (static_cast<double>(bits >> 12) + 0.5) * 0x1p-52;
}

/// Counter-based random stream: block `n` of stream `(seed, stream_id)` is
/// Philox4x32-10 applied to counter (n, stream_id) under key seed. Streams are
/// plain values; copying a stream forks an identical sequence.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }
  /// Index of the next block to be generated.
  std::uint64_t block_position() const noexcept { return counter_; }

  std::uint64_t next_u64() noexcept;
  /// Uniform on (0, 1); never returns 0 or 1.
  double uniform() noexcept { return to_open_unit(next_u64()); }

  /// Fills `first[i]`, `second[i]` from the two words of one block each.
  /// A half-consumed block from next_u64() is discarded first.
  void fill_uniform_pairs(std::span<double> first, std::span<double> second) noexcept;

  /// Independent child stream of the same seed.
  RngStream substream(std::uint64_t child) const noexcept {
    return RngStream(seed_, derive_stream_id({stream_id_, child}));
  }

 private:
  std::array<std::uint64_t, 2> block(std::uint64_t n) const noexcept;

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t counter_ = 0;
  std::uint64_t spare_ = 0;
  bool has_spare_ = false;
};

}  // namespace levyfp
