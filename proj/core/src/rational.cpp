// Copyright 2026 The Toric Moduli Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "toric/rational.hpp"

#include <cctype>
#include <cmath>

#include "toric/error.hpp"

namespace toric {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Int floor(const Rat& r) { return floor_div(num(r), den(r)); }

Int mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

Int lcm(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

Rat from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::ParseError, "non-finite coordinate");
  }
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // mantissa * 2^53 is an exact integer.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  Rat result = Rat(Int(scaled));
  exponent -= 53;
  Int power = 1;
  power <<= static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  if (exponent < 0) {
    result /= Rat(power);
  } else {
    result *= Rat(power);
  }
  return result;
}

std::string to_string(const Rat& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

std::string to_string(const Int& i) { return i.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Leading zeros would make GMP read the digits as octal.
Int decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Int(std::string(digits.empty() ? std::string_view("0") : digits));
}

Int parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw Error(ErrorCode::ParseError,
                "malformed rational '" + std::string(whole) + "'");
  }
  Int value = decimal_integer(digits);
  return negative ? Int(-value) : value;
}

Int pow10(long long exponent) {
  Int result = 1;
  for (long long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Int p = parse_integer(text.substr(0, slash), text);
    const Int q = parse_integer(text.substr(slash + 1), text);
    if (q == 0) {
      throw Error(ErrorCode::ParseError,
                  "zero denominator in '" + std::string(text) + "'");
    }
    return Rat(p, q);
  }

  // Decimal with optional fraction and exponent, parsed exactly.
  std::string_view mantissa = text;
  long long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    const Int exp_value = parse_integer(text.substr(e + 1), text);
    if (abs(exp_value) > 10000) {
      throw Error(ErrorCode::ParseError,
                  "exponent out of range in '" + std::string(text) + "'");
    }
    exponent = exp_value.convert_to<long long>();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string_view whole = mantissa;
  std::string_view fraction;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    whole = mantissa.substr(0, dot);
    fraction = mantissa.substr(dot + 1);
  }
  if ((whole.empty() && fraction.empty()) ||
      (!whole.empty() && !all_digits(whole)) ||
      (!fraction.empty() && !all_digits(fraction))) {
    throw Error(ErrorCode::ParseError,
                "malformed rational '" + std::string(text) + "'");
  }
  const std::string digits = std::string(whole) + std::string(fraction);
  Rat value(decimal_integer(digits));
  exponent -= static_cast<long long>(fraction.size());
  if (exponent >= 0) {
    value *= Rat(pow10(exponent));
  } else {
    value /= Rat(pow10(-exponent));
  }
  return negative ? Rat(-value) : value;
}

}  // namespace toric
