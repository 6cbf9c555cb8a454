// Copyright 2026 The sfjsp Authors
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

#ifndef SFJSP_RNG_HPP_
#define SFJSP_RNG_HPP_

#include <array>
#include <cstdint>

namespace sfjsp {

/// Philox4x32-10 block function. Maps a 128-bit counter under a 64-bit key
/// to 128 pseudo-random bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::uint64_t key);

/// Seedable, splittable counter-based random stream.
///
/// A stream is identified by its 64-bit key; draws walk a private counter.
/// `child(i)` derives an independent stream whose key is a Philox image of
/// (i, key) under a domain tag that never collides with ordinary draws, so
/// hierarchies such as seed -> reward set -> scenario 17 are reproducible
/// regardless of how many draws any sibling consumed.
class Stream {
 public:
  explicit Stream(std::uint64_t seed = 0) : key_(seed) {}

  Stream child(std::uint64_t index) const;

  std::uint64_t key() const { return key_; }

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1).
  double uniform();
  /// Uniform on [lo, hi); returns lo exactly when lo == hi.
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n);
  /// Uniform integer in the closed range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  double normal();
  /// Gamma variate with the given shape and unit scale.
  double gamma(double shape);
  double beta(double a, double b);

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  std::uint64_t buffered_ = 0;
  bool has_buffered_ = false;
};

}  // namespace sfjsp

#endif  // SFJSP_RNG_HPP_
