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

#include "msr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace msr {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw std::invalid_argument("malformed rational: '" + std::string(text) +
                              "'");
}

// Parses an integer or decimal-with-exponent literal exactly.
Rational parse_decimal(std::string_view s, std::string_view original) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long long exponent = 0;
  size_t epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string_view exp = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool exp_neg = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      exp_neg = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) bad_rational(original);
    exponent = std::stoll(std::string(exp));
    if (exp_neg) exponent = -exponent;
  }
  std::string digits;
  size_t dot = s.find('.');
  if (dot != std::string_view::npos) {
    std::string_view head = s.substr(0, dot);
    std::string_view tail = s.substr(dot + 1);
    if (head.empty() && tail.empty()) bad_rational(original);
    if (!head.empty() && !all_digits(head)) bad_rational(original);
    if (!tail.empty() && !all_digits(tail)) bad_rational(original);
    digits = std::string(head) + std::string(tail);
    exponent -= static_cast<long long>(tail.size());
  } else {
    if (!all_digits(s)) bad_rational(original);
    digits = std::string(s);
  }
  if (digits.empty()) bad_rational(original);
  BigInt numer(digits);
  BigInt denom = 1;
  if (exponent > 0) {
    numer *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent));
  } else if (exponent < 0) {
    denom = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-exponent));
  }
  if (negative) numer = -numer;
  return Rational(numer, denom);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  // Trim surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) bad_rational(text);

  size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    Rational p = parse_decimal(num, text);
    Rational q = parse_decimal(den, text);
    if (q == 0) bad_rational(text);
    return p / q;
  }
  return parse_decimal(text, text);
}

std::string format_rational(const Rational& x) {
  std::string out = numerator(x).str();
  if (denominator(x) != 1) {
    out += "/";
    out += denominator(x).str();
  }
  return out;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

BigInt rational_floor(const Rational& x) {
  BigInt n = numerator(x);
  BigInt d = denominator(x);
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) --q;
  return q;
}

BigInt rational_ceil(const Rational& x) { return -rational_floor(-x); }

}  // namespace msr
