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

#include <vector>

#include "trisparse/field.hpp"

using namespace trisparse;

TEST_CASE("construction picks the smallest irreducible modulus") {
    CHECK(Field::make(3, 1)->modulus() == std::vector<std::uint64_t>{0, 1});
    CHECK(Field::make(3, 2)->modulus() == std::vector<std::uint64_t>{1, 0, 1});
    CHECK(Field::make(5, 2)->modulus() == std::vector<std::uint64_t>{2, 0, 1});
    CHECK(Field::make(3, 3)->modulus() == std::vector<std::uint64_t>{1, 2, 0, 1});

    const FieldPtr f9 = Field::make(3, 2);
    CHECK(f9->characteristic() == 3);
    CHECK(f9->extension_degree() == 2);
    CHECK(f9->size() == 9);
    CHECK(f9->level_size(Level::tower) == 81);
    CHECK(f9->group_order(Level::base) == 8);
    CHECK(f9->group_order(Level::tower) == 80);
    CHECK(f9->odd_characteristic());
}

TEST_CASE("construction rejects bad characteristics and moduli") {
    CHECK_THROWS_AS(Field::make(4, 1), InvalidCharacteristic);
    CHECK_THROWS_AS(Field::make(1, 1), InvalidCharacteristic);
    CHECK_THROWS_AS(Field::make(0, 2), InvalidCharacteristic);
    CHECK_THROWS_AS(Field::make(3, 0), InvalidModulus);

    // wrong length
    CHECK_THROWS_AS(Field::make(3, 2, {{1, 0, 0, 1}}), InvalidModulus);
    // digit out of range
    CHECK_THROWS_AS(Field::make(3, 2, {{4, 0, 1}}), InvalidModulus);
    // not monic
    CHECK_THROWS_AS(Field::make(3, 2, {{1, 0, 2}}), InvalidModulus);
    // Y^2 + 2 = (Y + 1)(Y + 2) over F_3
    CHECK_THROWS_AS(Field::make(3, 2, {{2, 0, 1}}), InvalidModulus);

    // an explicit valid choice is accepted verbatim
    const FieldPtr f = Field::make(3, 2, {{2, 2, 1}});
    CHECK(f->modulus() == std::vector<std::uint64_t>{2, 2, 1});
    CHECK_FALSE(f->same_field(*Field::make(3, 2)));
    CHECK(Field::make(3, 2)->same_field(*Field::make(3, 2, {{1, 0, 1}})));
}

TEST_CASE("field size cap") {
    CHECK_THROWS_AS(Field::make(3, 21), Error);  // 3^21 > 2^31
    CHECK_THROWS_AS(Field::make(2147483659ULL, 1), Error);
}

TEST_CASE("prime field arithmetic") {
    const FieldPtr f = Field::make(3, 1);
    const Element zero = f->zero(), one = f->one(), two = f->from_code(2);
    CHECK(f->add(one, two) == zero);
    CHECK(f->sub(zero, one) == two);
    CHECK(f->mul(two, two) == one);
    CHECK(f->div(one, two) == two);
    CHECK(f->neg(one) == two);
    CHECK(f->inv(two) == two);
    CHECK(f->pow(two, 0) == one);
    CHECK(f->pow(zero, 0) == one);
    CHECK(f->pow(two, 5) == two);
    CHECK(f->from_int(-1) == two);
    CHECK(f->from_int(7) == one);
    CHECK_THROWS_AS(f->inv(zero), DivisionByZero);
    CHECK_THROWS_AS(f->div(one, zero), DivisionByZero);
    CHECK_THROWS_AS(f->from_code(3), Error);
}

TEST_CASE("extension field arithmetic in F_9") {
    const FieldPtr f = Field::make(3, 2);  // Y^2 + 1
    const Element alpha = f->gen();
    CHECK(alpha.code == 3);
    CHECK(f->gen() == f->from_digits({0, 1}));
    CHECK(f->mul(alpha, alpha) == f->from_int(2));  // alpha^2 = -1
    CHECK(f->pow(alpha, 4) == f->one());
    CHECK(f->order(alpha) == 4);
    CHECK(f->digits(f->from_code(7)) == std::vector<std::uint64_t>{1, 2});
    CHECK(f->from_digits({1, 2}).code == 7);
    CHECK_THROWS_AS(f->from_digits({1, 2, 0}), Error);
    CHECK_THROWS_AS(f->from_digits({3, 0}), Error);
    CHECK_THROWS_AS(f->order(f->zero()), ZeroHasNoOrder);

    // alternate modulus Y^2 + 2Y + 2: its root generates the full group
    const FieldPtr g = Field::make(3, 2, {{2, 2, 1}});
    CHECK(g->mul(g->gen(), g->gen()) == g->from_code(4));  // alpha^2 = alpha + 1
    CHECK(g->order(g->gen()) == 8);
}

TEST_CASE("field axioms on sampled elements") {
    // one table-backed field and one beyond the table limit (37^2 = 1369)
    for (const FieldPtr& f : {Field::make(3, 3), Field::make(37, 2)}) {
        const std::uint64_t q = f->size();
        std::vector<std::uint64_t> sample{0, 1, 2, q - 1, q / 2, q / 3 + 1, 5 % q, 7 % q};
        for (auto a : sample) {
            for (auto b : sample) {
                const Element x = f->from_code(a), y = f->from_code(b);
                CHECK(f->add(x, y) == f->add(y, x));
                CHECK(f->mul(x, y) == f->mul(y, x));
                CHECK(f->sub(f->add(x, y), y) == x);
                for (auto c : sample) {
                    const Element z = f->from_code(c);
                    CHECK(f->add(f->add(x, y), z) == f->add(x, f->add(y, z)));
                    CHECK(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
                    CHECK(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
                }
            }
            const Element x = f->from_code(a);
            CHECK(f->add(x, f->neg(x)) == f->zero());
            CHECK(f->pow(x, q) == x);  // Frobenius fixes F_q pointwise
            if (a != 0) {
                CHECK(f->mul(x, f->inv(x)) == f->one());
                CHECK(f->pow(x, q - 1) == f->one());
            }
        }
    }
}

TEST_CASE("order agrees with naive iteration across F_27") {
    const FieldPtr f = Field::make(3, 3);
    for (std::uint64_t c = 1; c < 27; ++c) {
        const Element x = f->from_code(c);
        std::uint64_t t = 1;
        Element acc = x;
        while (!(acc == f->one())) {
            acc = f->mul(acc, x);
            ++t;
        }
        CHECK(f->order(x) == t);
    }
}

TEST_CASE("quadratic tower") {
    const FieldPtr f3 = Field::make(3, 1);
    CHECK(f3->tower_nonsquare() == f3->from_code(2));
    const FieldPtr f9 = Field::make(3, 2);
    CHECK(f9->tower_nonsquare() == f9->from_code(4));  // a + 1

    const Element beta = f9->tower_gen();
    CHECK(beta.code == 9);
    CHECK(f9->mul(beta, beta) == f9->embed(f9->tower_nonsquare()));
    CHECK(f9->order(beta) == 16);         // nonsquare has order 8 in F_9
    CHECK(f3->order(f3->tower_gen()) == 4);  // beta^2 = 2, order 2 in F_3

    SUBCASE("embedding and projection") {
        const Element x = f9->from_code(5);
        CHECK(f9->in_base(x));
        CHECK(f9->in_base(f9->embed(x)));
        CHECK(f9->project(f9->embed(x)) == x);
        CHECK_FALSE(f9->in_base(beta));
        CHECK_THROWS_AS(f9->project(beta), Error);
    }

    SUBCASE("levels do not mix silently") {
        CHECK_THROWS_AS(f9->add(f9->one(), f9->one(Level::tower)), LevelMismatch);
        CHECK_THROWS_AS(f9->mul(f9->gen(), beta), LevelMismatch);
    }

    SUBCASE("tower inverses") {
        for (std::uint64_t c : {1ULL, 9ULL, 13ULL, 40ULL, 80ULL}) {
            const Element x = f9->from_code(c, Level::tower);
            CHECK(f9->mul(x, f9->inv(x)) == f9->one(Level::tower));
        }
    }
}

TEST_CASE("roots of unity are deterministic and of exact order") {
    const FieldPtr f9 = Field::make(3, 2);
    CHECK(f9->root_of_unity(Level::base, 8) == f9->from_code(4));
    CHECK(f9->root_of_unity(Level::base, 1) == f9->one());
    CHECK(f9->root_of_unity(Level::base, 2) == f9->from_code(2));

    const FieldPtr f3 = Field::make(3, 1);
    const Element z8 = f3->root_of_unity(Level::tower, 8);
    CHECK(f3->order(z8) == 8);
    CHECK_FALSE(f3->in_base(z8));

    CHECK_THROWS_AS(f3->root_of_unity(Level::base, 5), NoSuchRoot);
    CHECK_THROWS_AS(f3->root_of_unity(Level::base, 0), NoSuchRoot);
}

TEST_CASE("element rendering") {
    const FieldPtr f9 = Field::make(3, 2);
    CHECK(f9->to_string(f9->zero()) == "0");
    CHECK(f9->to_string(f9->one()) == "1");
    CHECK(f9->to_string(f9->from_code(2)) == "2");
    CHECK(f9->to_string(f9->gen()) == "a");
    CHECK(f9->to_string(f9->from_code(4)) == "a+1");
    CHECK(f9->to_string(f9->from_code(7)) == "2*a+1");
    CHECK(f9->to_string(f9->from_code(6)) == "2*a");
    CHECK(f9->to_string(f9->tower_gen()) == "b");
    CHECK(f9->to_string(f9->from_code(38, Level::tower)) == "(a+1)*b+2");
    CHECK(f9->to_string(f9->from_code(2, Level::tower)) == "2");

    const FieldPtr f3 = Field::make(3, 1);
    CHECK(f3->to_string(f3->from_code(5, Level::tower)) == "b+2");

    const FieldPtr f27 = Field::make(3, 3);
    CHECK(f27->to_string(f27->from_code(9)) == "a^2");
    CHECK(f27->to_string(f27->from_code(14)) == "a^2+a+2");
}

TEST_CASE("even characteristic has no tower") {
    const FieldPtr f2 = Field::make(2, 1);
    CHECK_FALSE(f2->odd_characteristic());
    CHECK(f2->add(f2->one(), f2->one()) == f2->zero());
    CHECK_THROWS_AS(f2->tower_nonsquare(), Error);
    CHECK_THROWS_AS(f2->tower_gen(), Error);
    CHECK_THROWS_AS(f2->from_code(1, Level::tower), Error);
}
