/*
 * Copyright (c) 2026, The receptive-entropy authors.
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

#include "receptive/rational.hpp"

#include "receptive/error.hpp"

#include <cctype>

namespace receptive {

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole,
                     const std::string& field) {
  if (digits.empty()) {
    throw ConfigError(field, "malformed number '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ConfigError(field, "malformed number '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

Rational parse_decimal(std::string_view text, std::string_view whole,
                       const std::string& field) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto dot = text.find('.');
  Rational value;
  if (dot == std::string_view::npos) {
    value = Rational(parse_integer(text, whole, field));
  } else {
    const auto int_part = text.substr(0, dot);
    const auto frac_part = text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw ConfigError(field, "malformed number '" + std::string(whole) + "'");
    }
    BigInt numer = int_part.empty() ? BigInt(0)
                                    : parse_integer(int_part, whole, field);
    BigInt denom = 1;
    for (char c : frac_part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ConfigError(field,
                          "malformed number '" + std::string(whole) + "'");
      }
      numer = numer * 10 + (c - '0');
      denom *= 10;
    }
    value = Rational(numer, denom);
  }
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text, const std::string& field) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto whole = text;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return parse_decimal(text, whole, field);
  }
  const Rational num = parse_decimal(text.substr(0, slash), whole, field);
  const Rational den = parse_decimal(text.substr(slash + 1), whole, field);
  if (den == 0) {
    throw ConfigError(field, "zero denominator in '" + std::string(whole) + "'");
  }
  return num / den;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace receptive
