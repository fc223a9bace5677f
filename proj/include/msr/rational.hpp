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

// Exact rational arithmetic used for every cost, budget and function value.
// Budget-boundary comparisons (cost <= budget) must be bit-exact, so no
// floating point is used anywhere in the optimization path.

#ifndef MSR_RATIONAL_HPP_
#define MSR_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace msr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q", an integer, or a decimal literal with optional exponent
// ("5/2", "-3", "2.5", "1e-3"). Decimal literals convert exactly, so
// "0.1" becomes 1/10, not the nearest double. Throws std::invalid_argument
// on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
// parse_rational(format_rational(x)) == x for all x.
std::string format_rational(const Rational& x);

double to_double(const Rational& x);

// Largest integer <= x.
BigInt rational_floor(const Rational& x);

// Smallest integer >= x.
BigInt rational_ceil(const Rational& x);

}  // namespace msr

#endif  // MSR_RATIONAL_HPP_
