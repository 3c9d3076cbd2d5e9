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

#ifndef TRISPARSE_INTUTIL_HPP
#define TRISPARSE_INTUTIL_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace trisparse {

// Plain trial-division number theory.  Inputs stay below 2^62 throughout the
// library, so nothing fancier is warranted.

bool is_prime(std::uint64_t n) noexcept;

/// n >= 1; prime factorization with ascending primes.  factor_integer(1) = {}.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factor_integer(std::uint64_t n);

/// n >= 1; all divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// base^exp with an overflow check (throws Error).
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp);

}  // namespace trisparse

#endif
