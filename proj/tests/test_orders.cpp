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

#include <doctest.h>

#include <numeric>
#include <vector>

#include "support.hpp"
#include "trisparse/intutil.hpp"
#include "trisparse/orders.hpp"

using namespace trisparse;

namespace {

// odd prime powers up to 81
const std::vector<std::uint64_t> kOddPrimePowers{3,  5,  7,  9,  11, 13, 17, 19, 23,
                                                 25, 27, 29, 31, 37, 41, 43, 47, 49,
                                                 53, 59, 61, 67, 71, 73, 79, 81};

}  // namespace

TEST_CASE("p-adic valuation") {
    CHECK(vp(2, 80) == 4);
    CHECK(vp(5, 80) == 1);
    CHECK(vp(3, 80) == 0);
    CHECK(vp(3, 81) == 4);
    CHECK(vp(2, 1) == 0);
    CHECK_THROWS_AS(vp(4, 8), Error);
    CHECK_THROWS_AS(vp(2, 0), Error);
}

TEST_CASE("lifting-the-exponent closed forms") {
    CHECK(lte_v(2, 3, 2) == 3);    // v_2(8)
    CHECK(lte_v(2, 3, 5) == 1);    // v_2(242)
    CHECK(lte_v(5, 11, 5) == 2);   // v_5(161050)
    CHECK(lte_v(2, 7, 4) == 5);    // v_2(7^4 - 1) = v_2(2400)
    CHECK(lte_v(3, 10, 9) == 4);   // v_3(10^9 - 1)

    SUBCASE("preconditions") {
        CHECK_THROWS_AS(lte_v(3, 5, 2), LtePreconditionFailed);   // 3 does not divide 4
        CHECK_THROWS_AS(lte_v(2, 6, 2), LtePreconditionFailed);   // even a
        CHECK_THROWS_AS(lte_v(4, 5, 2), Error);                   // p not prime
        CHECK_THROWS_AS(lte_v(2, 1, 2), Error);                   // a too small
        CHECK_THROWS_AS(lte_v(2, 3, 0), Error);                   // k too small
    }

    SUBCASE("big-integer spot checks beyond 64 bits") {
        CHECK(lte_v(2, 3, 64) == testsupport::vp_pow_minus_one(2, 3, 64));
        CHECK(lte_v(2, 3, 64) == 8);
        CHECK(lte_v(7, 29, 49) == testsupport::vp_pow_minus_one(7, 29, 49));
        CHECK(lte_v(7, 29, 49) == 3);
        CHECK(lte_v(3, 28, 27) == testsupport::vp_pow_minus_one(3, 28, 27));
    }
}

TEST_CASE("ord of 3 modulo 8 is 2 (three-regime 2-adic formula)") {
    // The regression pinning the corrected 2-adic closed form: a two-regime
    // formula would report 2^(3-1) = 4 here, but 3^2 = 9 = 8 + 1.
    const PrimePowerOrder got = ord_prime_power(3, 2, 3);
    CHECK(got.order == 2);
    CHECK(got.closed_form);
    CHECK(ord_bruteforce(3, 8) == 2);
}

TEST_CASE("prime-power order closed forms") {
    CHECK(ord_prime_power(3, 2, 1).order == 1);
    CHECK(ord_prime_power(3, 2, 2).order == 2);
    CHECK(ord_prime_power(3, 2, 4).order == 4);   // 2^(4-3+1)
    CHECK(ord_prime_power(7, 2, 5).order == 4);   // w = v_2(48) = 4
    CHECK(ord_prime_power(9, 5, 1).order == 2);
    CHECK(ord_prime_power(9, 5, 2).order == 10);
    CHECK(ord_prime_power(7, 3, 1).order == 1);   // 3 | 7 - 1
    CHECK(ord_prime_power(7, 3, 2).order == 3);
    CHECK(ord_prime_power(5, 2, 0).order == 1);

    SUBCASE("fallback is flagged") {
        const PrimePowerOrder fb = ord_prime_power(3, 7, 1);
        CHECK(fb.order == 6);
        CHECK_FALSE(fb.closed_form);
        CHECK(ord_prime_power(2, 7, 1).order == 3);
        CHECK(ord_prime_power(9, 5, 2).closed_form);
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(ord_prime_power(6, 3, 2), NotCoprime);
        CHECK_THROWS_AS(ord_prime_power(3, 4, 2), Error);
        CHECK_THROWS_AS(ord_prime_power(1, 2, 2), Error);
    }
}

TEST_CASE("closed forms match brute force on the full grid") {
    for (const std::uint64_t q : kOddPrimePowers) {
        for (const std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
            if (q % p == 0) continue;
            std::uint64_t pk = p;
            for (std::uint32_t k = 1; pk <= 100000; ++k, pk *= p) {
                CHECK(ord_prime_power(q, p, k).order == ord_bruteforce(q, pk));
            }
        }
    }
}

TEST_CASE("general order composes by lcm") {
    CHECK(ord_general(3, 40) == 4);
    CHECK(ord_general(9, 80) == 2);
    CHECK(ord_general(3, 1) == 1);
    CHECK(ord_general(7, 1) == 1);
    CHECK(ord_general(2, 15) == 4);
    CHECK_THROWS_AS(ord_general(6, 4), NotCoprime);
    CHECK_THROWS_AS(ord_general(3, 0), Error);

    SUBCASE("matches brute force for every admissible modulus up to 10^4") {
        for (const std::uint64_t a : {3, 5, 7, 9, 25, 27}) {
            for (std::uint64_t d = 1; d <= 10000; ++d) {
                if (std::gcd(a, d) != 1) continue;
                CHECK(ord_general(a, d) == ord_bruteforce(a, d));
            }
        }
    }
}

TEST_CASE("brute-force oracle basics") {
    CHECK(ord_bruteforce(3, 16) == 4);
    CHECK(ord_bruteforce(3, 7) == 6);
    CHECK(ord_bruteforce(3, 1) == 1);
    CHECK_THROWS_AS(ord_bruteforce(4, 2), NotCoprime);
    CHECK_THROWS_AS(ord_bruteforce(3, (std::uint64_t{1} << 31) + 2), Error);
}

TEST_CASE("order profile collects the steering valuations") {
    const OrderProfile pr = OrderProfile::compute(9, 2);
    CHECK(pr.v2_q_minus_1 == 3);
    CHECK(pr.vp_q_minus_1 == 3);
    CHECK(pr.vp_q_plus_1 == 1);
    CHECK(pr.vp_q_sq_minus_1 == 4);

    const OrderProfile pr5 = OrderProfile::compute(9, 5);
    CHECK(pr5.vp_q_minus_1 == 0);
    CHECK(pr5.vp_q_plus_1 == 1);
    CHECK(pr5.vp_q_sq_minus_1 == 1);

    CHECK_THROWS_AS(OrderProfile::compute(8, 2), EvenCharacteristicUnsupported);
    CHECK_THROWS_AS(OrderProfile::compute(9, 6), Error);

    SUBCASE("profile invariants across the grid") {
        for (const std::uint64_t q : kOddPrimePowers) {
            for (const std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
                const OrderProfile profile = OrderProfile::compute(q, p);
                // independent recomputation straight from q^2 - 1
                CHECK(profile.vp_q_sq_minus_1 == vp(p, q * q - 1));
                if (p == 2) {
                    CHECK(profile.v2_q_minus_1 >= 1);
                    CHECK(vp(2, q + 1) >= 1);
                    CHECK(profile.vp_q_sq_minus_1 ==
                          profile.v2_q_minus_1 + vp(2, q + 1));
                } else {
                    CHECK((profile.vp_q_minus_1 == 0 || profile.vp_q_plus_1 == 0));
                    CHECK(profile.vp_q_sq_minus_1 ==
                          profile.vp_q_minus_1 + profile.vp_q_plus_1);
                }
            }
        }
    }
}
