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

#include "support.hpp"
#include "trisparse/poly.hpp"

using namespace trisparse;
using testsupport::poly;

TEST_CASE("construction and normalization") {
    const FieldPtr f = Field::make(3, 1);
    const Polynomial zero(f);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.weight() == 0);

    CHECK(poly(f, {1, 0, 0}) == poly(f, {1}));  // trailing zeros vanish
    CHECK(poly(f, {-1, 1}) == poly(f, {2, 1}));
    CHECK(poly(f, {0}) == zero);
    CHECK(poly(f, {1}).is_one());

    const Polynomial m = Polynomial::monomial(f, 3, f->from_code(2));
    CHECK(m.degree() == 3);
    CHECK(m.weight() == 1);
    CHECK(Polynomial::monomial(f, 5, f->zero()).is_zero());
    CHECK(Polynomial::constant(f, f->from_code(2)) == poly(f, {2}));

    const Polynomial b = Polynomial::x_pow_minus_one(f, 4);
    CHECK(b == poly(f, {2, 0, 0, 0, 1}));
    CHECK_THROWS_AS(Polynomial::x_pow_minus_one(f, 0), Error);
    CHECK_THROWS_AS(Polynomial::from_codes(f, {3, 1}), Error);  // code out of range
}

TEST_CASE("coefficient access") {
    const FieldPtr f = Field::make(3, 1);
    const Polynomial p = poly(f, {2, 0, 1, 1});
    CHECK(p.degree() == 3);
    CHECK(p.weight() == 3);
    CHECK(p.coeff(0) == f->from_code(2));
    CHECK(p.coeff(1) == f->zero());
    CHECK(p.coeff_code(2) == 1);
    CHECK(p.coeff_code(17) == 0);  // past the degree
    CHECK(p.leading() == f->one());
    CHECK(p.is_monic());
    CHECK_FALSE(poly(f, {1, 2}).is_monic());
}

TEST_CASE("ring operations over F_3") {
    const FieldPtr f = Field::make(3, 1);
    const Polynomial a = poly(f, {2, 1, 1});  // X^2 + X + 2
    const Polynomial b = poly(f, {2, 2, 1});  // X^2 + 2X + 2
    CHECK(a * b == poly(f, {1, 0, 0, 0, 1}));  // X^4 + 1
    CHECK(a + b == poly(f, {1, 0, 2}));
    CHECK(a - a == Polynomial(f));
    CHECK(-a == poly(f, {1, 2, 2}));
    CHECK(a + (-a) == Polynomial(f));
    CHECK(a * Polynomial(f) == Polynomial(f));
    CHECK(a * poly(f, {1}) == a);
}

TEST_CASE("monic scaling and derivative") {
    const FieldPtr f = Field::make(3, 1);
    CHECK(poly(f, {1, 1, 2}).monic() == poly(f, {2, 2, 1}));
    CHECK(poly(f, {1, 1, 2}).monic().is_monic());
    CHECK(Polynomial(f).monic().is_zero());

    CHECK(poly(f, {1, 1, 0, 1}).derivative() == poly(f, {1}));  // 3X^2 + 1 = 1
    CHECK(poly(f, {2, 0, 0, 1}).derivative().is_zero());        // X^3 + 2
    CHECK(poly(f, {5}).derivative().is_zero());
}

TEST_CASE("division with remainder") {
    const FieldPtr f = Field::make(3, 1);
    const auto [q1, r1] = divmod(Polynomial::x_pow_minus_one(f, 8), poly(f, {1, 0, 0, 0, 1}));
    CHECK(q1 == poly(f, {2, 0, 0, 0, 1}));  // X^4 + 2
    CHECK(r1.is_zero());

    const auto [q2, r2] = divmod(poly(f, {1, 0, 1}), poly(f, {1, 1}));
    CHECK(q2 == poly(f, {2, 1}));
    CHECK(r2 == poly(f, {2}));

    // degree too small: quotient zero, remainder the dividend
    const auto [q3, r3] = divmod(poly(f, {1, 1}), poly(f, {1, 0, 1}));
    CHECK(q3.is_zero());
    CHECK(r3 == poly(f, {1, 1}));

    CHECK_THROWS_AS(divmod(poly(f, {1, 1}), Polynomial(f)), DivisionByZero);

    // reconstruction property on a non-monic divisor
    const Polynomial g = poly(f, {1, 2});
    const Polynomial h = poly(f, {2, 0, 1, 1});
    const auto [q4, r4] = divmod(h, g);
    CHECK(q4 * g + r4 == h);
    CHECK(r4.degree() < g.degree());
}

TEST_CASE("gcd") {
    const FieldPtr f = Field::make(3, 1);
    CHECK(gcd(Polynomial::x_pow_minus_one(f, 4), Polynomial::x_pow_minus_one(f, 2)) ==
          poly(f, {2, 0, 1}));
    CHECK(gcd(poly(f, {1, 1}), Polynomial(f)) == poly(f, {1, 1}));
    CHECK(gcd(Polynomial(f), poly(f, {0, 2})) == poly(f, {0, 1}));  // result is monic
    CHECK_THROWS_AS(gcd(Polynomial(f), Polynomial(f)), UndefinedGcd);
}

TEST_CASE("inflation") {
    const FieldPtr f = Field::make(3, 1);
    const Polynomial t = poly(f, {2, 1, 1});
    CHECK(t.inflate(2) == poly(f, {2, 0, 1, 0, 1}));  // X^4 + X^2 + 2
    CHECK(t.inflate(1) == t);
    CHECK(t.inflate(3).weight() == t.weight());
    CHECK(Polynomial(f).inflate(4).is_zero());
    CHECK_THROWS_AS(t.inflate(0), Error);
}

TEST_CASE("evaluation") {
    const FieldPtr f = Field::make(3, 1);
    const Polynomial p = poly(f, {1, 0, 1});  // X^2 + 1
    CHECK(p.eval(f->from_code(1)) == f->from_code(2));
    CHECK(p.eval(f->zero()) == f->one());

    // a base polynomial evaluated at a tower point: beta^2 + 1 = 2 + 1 = 0
    const Element beta = f->tower_gen();
    CHECK(p.eval(beta) == f->zero(Level::tower));
    CHECK(p.eval(beta).level == Level::tower);
}

TEST_CASE("level lifting and projection") {
    const FieldPtr f = Field::make(3, 1);
    const Polynomial p = poly(f, {2, 1, 1});
    const Polynomial lifted = p.lift_to_tower();
    CHECK(lifted.level() == Level::tower);
    CHECK(lifted.project_to_base() == p);

    Polynomial with_beta =
        Polynomial::from_codes(f, {f->tower_gen().code, 1}, Level::tower);
    CHECK_THROWS_AS(with_beta.project_to_base(), Error);
}

TEST_CASE("canonical comparison") {
    const FieldPtr f = Field::make(3, 1);
    CHECK(Polynomial::compare(poly(f, {1, 1}), poly(f, {1, 0, 1})) < 0);   // by degree
    CHECK(Polynomial::compare(poly(f, {1, 1}), poly(f, {2, 1})) < 0);      // by constant term
    CHECK(Polynomial::compare(poly(f, {2, 1, 1}), poly(f, {2, 2, 1})) < 0);
    CHECK(Polynomial::compare(poly(f, {2, 1}), poly(f, {2, 1})) == 0);

    const FieldPtr g = Field::make(5, 1);
    CHECK_FALSE(poly(f, {1, 1}) == poly(g, {1, 1}));  // equality never throws
    CHECK_THROWS_AS(Polynomial::compare(poly(f, {1, 1}), poly(g, {1, 1})), ContextMismatch);
    CHECK_THROWS_AS(poly(f, {1, 1}) + poly(g, {1, 1}), ContextMismatch);
    const FieldPtr f9 = Field::make(3, 2);
    CHECK_THROWS_AS(poly(f9, {1, 1}) * poly(f9, {1, 1}, Level::tower), ContextMismatch);
}

TEST_CASE("rendering") {
    const FieldPtr f = Field::make(3, 1);
    CHECK(Polynomial(f).to_string() == "0");
    CHECK(poly(f, {2}).to_string() == "2");
    CHECK(poly(f, {0, 1}).to_string() == "X");
    CHECK(poly(f, {0, 0, 2}).to_string() == "2*X^2");
    CHECK(poly(f, {1, 2, 0, 0, 1}).to_string() == "X^4 + 2*X + 1");
    CHECK(poly(f, {1, 2, 0, 0, 1}).to_string("Y") == "Y^4 + 2*Y + 1");

    const FieldPtr f9 = Field::make(3, 2);
    CHECK(Polynomial::from_codes(f9, {1, 5, 1}).to_string() == "X^2 + (a+2)*X + 1");
    CHECK(Polynomial::from_codes(f9, {0, 3}).to_string() == "a*X");
}
