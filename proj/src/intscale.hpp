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

#ifndef PCRTV_SRC_INTSCALE_HPP
#define PCRTV_SRC_INTSCALE_HPP

#include <cstdint>
#include <vector>

#include "pcrtv/rational.hpp"

namespace pcrtv::detail {

// values * factor, all integral, factor = lcm of denominators.
struct Scaled {
  mpz_class factor = 1;
  std::vector<mpz_class> values;
  mpz_class abs_sum = 0;

  bool fits(const mpz_class& limit) const { return abs_sum < limit; }
};

inline Scaled scale_to_integers(const std::vector<Rational>& v) {
  Scaled s;
  for (const Rational& r : v) mpz_lcm(s.factor.get_mpz_t(), s.factor.get_mpz_t(), r.get_den_mpz_t());
  s.values.reserve(v.size());
  for (const Rational& r : v) {
    mpz_class z = r.get_num() * (s.factor / r.get_den());
    s.abs_sum += abs(z);
    s.values.push_back(std::move(z));
  }
  return s;
}

inline mpz_class pow2(unsigned k) {
  mpz_class z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, k);
  return z;
}

inline std::int64_t to_i64(const mpz_class& z) { return static_cast<std::int64_t>(z.get_si()); }

}  // namespace pcrtv::detail

#endif  // PCRTV_SRC_INTSCALE_HPP
