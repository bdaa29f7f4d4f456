// Copyright 2026 The pcrtv Authors
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

#ifndef PCRTV_RATIONAL_HPP
#define PCRTV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace pcrtv {

using Rational = mpq_class;

// Accepts "p/q", integers and finite decimals with an optional exponent
// ("2.75", "-1e-3"). Throws ValidationError on anything else.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

Rational ratio(long num, long den = 1);

}  // namespace pcrtv

#endif  // PCRTV_RATIONAL_HPP
