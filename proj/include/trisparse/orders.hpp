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

#ifndef TRISPARSE_ORDERS_HPP
#define TRISPARSE_ORDERS_HPP

#include <cstdint>

namespace trisparse {

/// p-adic valuation of n; p prime, n >= 1.
std::uint32_t vp(std::uint64_t p, std::uint64_t n);

/// v_p(a^k - 1) by the lifting-the-exponent closed forms, without computing
/// a^k.  Odd p requires p | a - 1; p = 2 requires odd a.  k >= 1, a >= 2.
std::uint32_t lte_v(std::uint64_t p, std::uint64_t a, std::uint64_t k);

struct PrimePowerOrder {
    std::uint64_t order;
    /// false when no closed form applied and the order was found by brute
    /// force (odd p dividing neither a - 1 nor a + 1)
    bool closed_form;
};

/// Multiplicative order of a modulo p^k via closed forms.
///
/// For odd p | a - 1 with k1 = v_p(a - 1): 1 when k <= k1, else p^(k - k1).
/// For odd p | a + 1 with k2 = v_p(a + 1): 2 when k <= k2, else 2 p^(k - k2).
/// For p = 2 and odd a, with k0 = v_2(a - 1) and w = v_2(a^2 - 1): 1 when
/// k <= k0, 2 when k0 < k <= w, else 2^(k - w + 1).  The 2-adic case needs
/// all three regimes: collapsing the middle one misstates the order for
/// a = 3 mod 4 (the pinned regression is ord of 3 modulo 8, which is 2).
PrimePowerOrder ord_prime_power(std::uint64_t a, std::uint64_t p, std::uint32_t k);

/// Multiplicative order of a modulo d >= 1, gcd(a, d) = 1: composed as the
/// lcm of the prime-power orders of d's factorization.
std::uint64_t ord_general(std::uint64_t a, std::uint64_t d);

/// Reference implementation: iterate powers of a modulo d until 1.
std::uint64_t ord_bruteforce(std::uint64_t a, std::uint64_t d);

/// The valuations steering the closed forms, bundled for diagnostics:
/// for odd q and prime p, v2(q-1), v_p(q-1), v_p(q+1) and v_p(q^2-1).
struct OrderProfile {
    std::uint64_t q = 0;
    std::uint64_t p = 0;
    std::uint32_t v2_q_minus_1 = 0;
    std::uint32_t vp_q_minus_1 = 0;
    std::uint32_t vp_q_plus_1 = 0;
    std::uint32_t vp_q_sq_minus_1 = 0;

    static OrderProfile compute(std::uint64_t q, std::uint64_t p);
};

}  // namespace trisparse

#endif
