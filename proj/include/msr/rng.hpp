// Copyright 2026 The Authors.
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

// Seed-portable random primitives. Everything random in this library draws
// from mt19937_64 through the helpers below; std::uniform_int_distribution
// and std::shuffle are implementation-defined and must not be used, or
// identical seeds would stop producing identical instances across toolchains.

#ifndef MSR_RNG_HPP_
#define MSR_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace msr {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t r = gen_();
      if (r >= limit) return r % n;
    }
  }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    // 53-bit draw compared against p; deterministic given the double p.
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return u < p;
  }

  // Fisher-Yates, high index down, partner drawn with below().
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace msr

#endif  // MSR_RNG_HPP_
