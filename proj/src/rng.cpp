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

#include "levyfp/rng.hpp"

#include <cassert>

namespace levyfp {

std::uint64_t derive_stream_id(std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t h = 0x6a09e667f3bcc909ull;
  for (std::uint64_t id : path) h = mix64(h ^ mix64(id));
  return h;
}

std::array<std::uint64_t, 2> RngStream::block(std::uint64_t n) const noexcept {
  const auto out = philox4x32_10(
      {static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(n >> 32),
       static_cast<std::uint32_t>(stream_id_), static_cast<std::uint32_t>(stream_id_ >> 32)},
      {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
  return {(std::uint64_t{out[1]} << 32) | out[0], (std::uint64_t{out[3]} << 32) | out[2]};
}

std::uint64_t RngStream::next_u64() noexcept {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const auto words = block(counter_++);
  spare_ = words[1];
  has_spare_ = true;
  return words[0];
}

void RngStream::fill_uniform_pairs(std::span<double> first, std::span<double> second) noexcept {
  assert(first.size() == second.size());
  has_spare_ = false;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const auto words = block(counter_++);
    first[i] = to_open_unit(words[0]);
    second[i] = to_open_unit(words[1]);
  }
}

}  // namespace levyfp
