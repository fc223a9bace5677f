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

// Exact solvers by exhaustive search over ordered sequences, plus the
// parametric adversarial fixtures used as ground truth in the verification
// suites. Desk scale only: the guard aborts once too many partial sequences
// have been enumerated.

#ifndef MSR_ORACLE_HPP_
#define MSR_ORACLE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "msr/core.hpp"

namespace msr {

struct BruteForceGuard {
  std::uint64_t max_sequences = 10'000'000;
};

class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BruteForceResult {
  Ranking ranking;  // lexicographically smallest maximizer
  Rational value = 0;
  std::uint64_t sequences_explored = 0;
};

// Exhaustive maximization of the ranking objective. Search stops extending a
// sequence once its cost reaches the largest budget; deeper items cannot fit
// any function's prefix. Throws TooLargeError past the guard.
BruteForceResult brute_force_msr(const Instance& instance,
                                 const BruteForceGuard& guard = {});

// Exhaustive maximization of the large-item objective over sequences of
// items that are large for at least one function.
BruteForceResult brute_force_gamma(const Instance& instance,
                                   const BruteForceGuard& guard = {});

// Named parametric instances:
//   example1             3 items with costs 5/2, 3, 13/2; two modular
//                        functions with budgets 3 and 9; greedy picks the
//                        cost-efficient middle item and loses to the DP.
//   tight2(k, eps)       n = m = 2k unit-cost items, budgets 1..2k; the
//                        uniform greedy with adversarial ties gets stuck
//                        near half the optimum 2k.
//   singleton_bad(m, eps) budgets 1..m plus an eps-cost decoy; the
//                        min-budget best-of-two baseline collapses to 1/m.
//   second_bad(m, eps)   budgets 2^i with per-function exclusive item pairs;
//                        the min-budget baseline captures one function.
Instance fixture_example1();
Instance fixture_tight2(int k, const Rational& eps);
Instance fixture_singleton_bad(int m, const Rational& eps);
Instance fixture_second_bad(int m, const Rational& eps);

// String dispatch: "example1", "tight2(50,0.001)", "singleton_bad(5,0.01)",
// "second_bad(4,0.01)". Throws std::invalid_argument on unknown names.
Instance fixture(const std::string& descriptor);

}  // namespace msr

#endif  // MSR_ORACLE_HPP_
