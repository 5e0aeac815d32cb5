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

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace toric {

// Arbitrary precision integers and rationals. Expression templates are off so
// that `auto` locals hold values, not lazy expressions.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

/// Largest integer not exceeding `r`.
Int floor(const Rat& r);

/// Floor division for integers, `b != 0`.
Int floor_div(const Int& a, const Int& b);

/// Non-negative remainder of `a` modulo `m > 0`.
Int mod(const Int& a, const Int& m);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

double to_double(const Rat& r);

/// Exact conversion of a finite double (every double is a dyadic rational).
Rat from_double(double value);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rat& r);
std::string to_string(const Int& i);

/// Parses "p", "p/q", or a finite decimal such as "-0.125" or "1e-3". Throws
/// toric::Error with ErrorCode::ParseError on malformed text or a zero
/// denominator.
Rat parse_rational(std::string_view text);

}  // namespace toric
