/*
 * Copyright 2026 The cakecut authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef CAKECUT_RATIONAL_HPP
#define CAKECUT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cakecut {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, kept in lowest terms with a positive denominator.
/// Every quantity in this library is a Rational; nothing is ever rounded and
/// no floating point is used anywhere in the core. Expression templates are
/// off so that arithmetic results are plain values (std::min, ternaries and
/// mixed comparisons behave normally).
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// Builds num/den, normalizing the sign into the numerator.
/// Throws std::domain_error when den == 0.
inline Rational make_rational(Int num, Int den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline Rational rat(long long num, long long den = 1) {
  return make_rational(Int(num), Int(den));
}

/// Parses "p", "-p" or "p/q" with integer p and positive integer q.
/// Returns nullopt for anything else (including "1/0" and embedded spaces).
inline std::optional<Rational> try_parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t pos = 0;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto read_digits = [&](Int& out) -> bool {
    if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') return false;
    out = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      out = out * 10 + (text[pos] - '0');
      ++pos;
    }
    return true;
  };
  Int num;
  if (!read_digits(num)) return std::nullopt;
  Int den = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') return std::nullopt;
    ++pos;
    if (!read_digits(den)) return std::nullopt;
    if (pos != text.size()) return std::nullopt;
    if (den == 0) return std::nullopt;
  }
  if (negative) num = -num;
  return Rational(num, den);
}

/// Parsing that throws std::invalid_argument with the offending text.
inline Rational parse_rational(std::string_view text) {
  auto parsed = try_parse_rational(text);
  if (!parsed) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) +
                                "\" (expected \"p\" or \"p/q\" with q > 0)");
  }
  return *parsed;
}

/// Canonical rendering: "p/q" in lowest terms, or plain "p" for integers.
inline std::string to_string(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

}  // namespace cakecut

#endif  // CAKECUT_RATIONAL_HPP
