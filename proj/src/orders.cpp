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

#include "trisparse/orders.hpp"

#include <numeric>

#include "trisparse/errors.hpp"
#include "trisparse/intutil.hpp"

namespace trisparse {

std::uint32_t vp(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p)) throw Error("vp: p must be prime");
    if (n == 0) throw Error("vp: n must be >= 1");
    std::uint32_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::uint32_t lte_v(std::uint64_t p, std::uint64_t a, std::uint64_t k) {
    if (!is_prime(p)) throw Error("lte_v: p must be prime");
    if (a < 2 || k < 1) throw Error("lte_v: need a >= 2 and k >= 1");
    if (p == 2) {
        if (a % 2 == 0) throw LtePreconditionFailed("p = 2 requires odd a");
        if (k % 2 == 1) return vp(2, a - 1);
        return vp(2, a - 1) + vp(2, a + 1) + vp(2, k) - 1;
    }
    if ((a - 1) % p != 0) throw LtePreconditionFailed("odd p must divide a - 1");
    return vp(p, a - 1) + vp(p, k);
}

PrimePowerOrder ord_prime_power(std::uint64_t a, std::uint64_t p, std::uint32_t k) {
    if (!is_prime(p)) throw Error("ord_prime_power: p must be prime");
    if (a < 2) throw Error("ord_prime_power: need a >= 2");
    if (k == 0) return {1, true};
    if (a % p == 0) throw NotCoprime("base shares the prime with the modulus");

    if (p == 2) {
        const std::uint32_t k0 = vp(2, a - 1);
        const std::uint32_t w = vp(2, a - 1) + vp(2, a + 1);
        if (k <= k0) return {1, true};
        if (k <= w) return {2, true};
        return {checked_pow(2, k - w + 1), true};
    }
    if ((a - 1) % p == 0) {
        const std::uint32_t k1 = vp(p, a - 1);
        if (k <= k1) return {1, true};
        return {checked_pow(p, k - k1), true};
    }
    if ((a + 1) % p == 0) {
        const std::uint32_t k2 = vp(p, a + 1);
        if (k <= k2) return {2, true};
        return {2 * checked_pow(p, k - k2), true};
    }
    return {ord_bruteforce(a, checked_pow(p, k)), false};
}

std::uint64_t ord_general(std::uint64_t a, std::uint64_t d) {
    if (a < 2) throw Error("ord_general: need a >= 2");
    if (d == 0) throw Error("ord_general: modulus must be >= 1");
    if (d == 1) return 1;
    if (std::gcd(a, d) != 1) throw NotCoprime("base and modulus are not coprime");
    std::uint64_t out = 1;
    for (const auto& [p, e] : factor_integer(d))
        out = std::lcm(out, ord_prime_power(a, p, e).order);
    return out;
}

std::uint64_t ord_bruteforce(std::uint64_t a, std::uint64_t d) {
    if (a < 2) throw Error("ord_bruteforce: need a >= 2");
    if (d == 0) throw Error("ord_bruteforce: modulus must be >= 1");
    if (d == 1) return 1;
    if (d > (std::uint64_t{1} << 31)) throw Error("ord_bruteforce: modulus too large");
    if (std::gcd(a, d) != 1) throw NotCoprime("base and modulus are not coprime");
    const std::uint64_t base = a % d;
    std::uint64_t acc = base;
    std::uint64_t t = 1;
    while (acc != 1) {
        acc = acc * base % d;
        ++t;
    }
    return t;
}

OrderProfile OrderProfile::compute(std::uint64_t q, std::uint64_t p) {
    if (q < 3 || q % 2 == 0) throw EvenCharacteristicUnsupported("profile needs odd q >= 3");
    if (!is_prime(p)) throw Error("OrderProfile: p must be prime");
    OrderProfile out;
    out.q = q;
    out.p = p;
    out.v2_q_minus_1 = vp(2, q - 1);
    out.vp_q_minus_1 = vp(p, q - 1);
    out.vp_q_plus_1 = vp(p, q + 1);
    out.vp_q_sq_minus_1 = out.vp_q_minus_1 + out.vp_q_plus_1;
    return out;
}

}  // namespace trisparse
