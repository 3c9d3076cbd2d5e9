/*
   Copyright 2026 The trisparse authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TRISPARSE_CYCLOTOMIC_HPP
#define TRISPARSE_CYCLOTOMIC_HPP

#include <cstdint>

#include "trisparse/poly.hpp"

namespace trisparse {

/// The d-th cyclotomic polynomial reduced over the field, computed by exact
/// division of X^d - 1 by the lower-index cyclotomics.  Requires
/// gcd(d, characteristic) = 1.  Results are memoized in a mutex-guarded
/// process-wide cache keyed by (field, d); fills are idempotent, so
/// concurrent use is safe.
Polynomial cyclotomic_poly(const FieldPtr& field, std::uint64_t d);

/// Checks the inflation identity: the (m * p^e)-th cyclotomic polynomial
/// equals the (m * p)-th one inflated by p^(e-1).  p prime, e >= 1,
/// gcd(m * p, characteristic) = 1.
bool cyclotomic_inflation_check(const FieldPtr& field, std::uint64_t m, std::uint64_t p,
                                std::uint32_t e);

}  // namespace trisparse

#endif
