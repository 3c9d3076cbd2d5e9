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

#include "trisparse/sparsity.hpp"

#include <algorithm>
#include <numeric>

#include "trisparse/cyclotomic.hpp"
#include "trisparse/intutil.hpp"
#include "trisparse/orders.hpp"

namespace trisparse {

namespace {

void require_odd(const Field& field) {
    if (!field.odd_characteristic())
        throw EvenCharacteristicUnsupported("this operation needs odd characteristic");
}

}  // namespace

std::map<std::uint64_t, std::uint32_t> prime_base(std::uint64_t q) {
    if (q < 3 || q % 2 == 0)
        throw EvenCharacteristicUnsupported("q must be an odd prime power >= 3");
    if (factor_integer(q).size() != 1) throw Error("q must be a prime power");
    std::map<std::uint64_t, std::uint32_t> out;
    for (const auto& [p, e] : factor_integer(q - 1)) out[p] += e;
    for (const auto& [p, e] : factor_integer(q + 1)) out[p] += e;
    return out;
}

SparsityReport is_sparse_theorem(const FieldPtr& field, std::uint64_t n) {
    require_odd(*field);
    if (n == 0) throw Error("n must be >= 1");
    const std::uint64_t r = field->characteristic();
    if (n % r == 0) {
        const std::uint32_t v = vp(r, n);
        throw CharacteristicDividesN(r, v, n / checked_pow(r, v));
    }

    SparsityReport report;
    report.q = field->size();
    report.n = n;
    report.base_primes = prime_base(report.q);
    for (const auto& [p, e] : factor_integer(n)) {
        (void)e;
        if (!report.base_primes.contains(p)) {
            report.offending_prime = p;
            break;
        }
    }
    report.sparse = !report.offending_prime.has_value();
    return report;
}

bool is_sparse_oracle(const FieldPtr& field, std::uint64_t n, std::uint64_t seed) {
    require_odd(*field);
    if (n == 0) throw Error("n must be >= 1");
    const std::uint64_t r = field->characteristic();
    if (n % r == 0) {
        const std::uint32_t v = vp(r, n);
        throw CharacteristicDividesN(r, v, n / checked_pow(r, v));
    }
    const Factorization fac = factor(Polynomial::x_pow_minus_one(field, n), seed);
    return fac.max_weight() <= 3;
}

DivisorPlan plan_divisor(const FieldPtr& field, std::uint64_t d) {
    require_odd(*field);
    if (d == 0) throw Error("divisor must be >= 1");
    const std::uint64_t q = field->size();
    const auto base = prime_base(q);

    DivisorPlan plan;
    plan.divisor = d;
    plan.capped = 1;
    for (const auto& [p, e] : factor_integer(d)) {
        const auto it = base.find(p);
        if (it == base.end())
            throw NotInSparseFamily("prime " + std::to_string(p) +
                                    " does not divide q^2 - 1");
        plan.capped *= checked_pow(p, std::min(e, it->second));
    }
    plan.inflation = d / plan.capped;

    const std::uint64_t t0 = ord_general(q, plan.capped);
    if (t0 > 2) throw std::logic_error("root stage order exceeds 2");
    if (ord_general(q, d) != t0 * plan.inflation)
        throw std::logic_error("order bookkeeping failed for the divisor plan");
    plan.root_degree = static_cast<std::uint32_t>(t0);
    return plan;
}

Factorization factor_cyclotomic_structured(const FieldPtr& field, std::uint64_t d) {
    const DivisorPlan plan = plan_divisor(field, d);
    const std::uint64_t q = field->size();
    const std::uint64_t d0 = plan.capped;

    Factorization out(field, Level::base, field->one());
    if (d0 == 1) {
        // the slice of index d = 1: the factor X - 1
        out.insert(Polynomial::x_pow_minus_one(field, 1), 1);
        return out;
    }

    if (plan.root_degree == 1) {
        // all d0-th roots of unity live in F_q: linear factors X - zeta^i
        const Element zeta = field->root_of_unity(Level::base, d0);
        for (std::uint64_t i = 1; i <= d0; ++i) {
            if (std::gcd(i, d0) != 1) continue;
            const Element root = field->pow(zeta, i);
            const Polynomial lin = Polynomial::from_codes(
                field, {field->neg(root).code, 1}, Level::base);
            out.insert(lin.inflate(plan.inflation), 1);
        }
        return out;
    }

    // roots live in the tower; conjugate pairs {i, iq} give quadratics
    // X^2 - (zeta^i + zeta^iq) X + zeta^(i(q+1)) whose coefficients are
    // fixed by the Frobenius and therefore lie in F_q
    const Element zeta = field->root_of_unity(Level::tower, d0);
    std::vector<bool> used(d0, false);
    for (std::uint64_t i = 1; i < d0; ++i) {
        if (used[i] || std::gcd(i, d0) != 1) continue;
        const std::uint64_t j = i * (q % d0) % d0;
        used[i] = true;
        used[j] = true;
        const Element sum = field->add(field->pow(zeta, i), field->pow(zeta, j));
        const Element prod = field->pow(zeta, i * ((q + 1) % d0) % d0);
        if (!field->in_base(sum) || !field->in_base(prod))
            throw std::logic_error("quadratic coefficients escaped the base field");
        const Polynomial quad = Polynomial::from_codes(
            field,
            {field->project(prod).code, field->neg(field->project(sum)).code, 1},
            Level::base);
        out.insert(quad.inflate(plan.inflation), 1);
    }
    return out;
}

Factorization factor_xn1_structured(const FieldPtr& field, std::uint64_t n) {
    const SparsityReport report = is_sparse_theorem(field, n);
    if (!report.sparse)
        throw NotInSparseFamily("prime " + std::to_string(*report.offending_prime) +
                                " of n does not divide q^2 - 1");
    Factorization out(field, Level::base, field->one());
    for (const std::uint64_t d : divisors(n)) {
        const Factorization part = factor_cyclotomic_structured(field, d);
        for (const auto& entry : part.entries())
            out.insert(entry.poly, entry.multiplicity);
    }
    return out;
}

bool binomial_divides(const FieldPtr& field, std::uint64_t m, const Element& a,
                      std::uint64_t n) {
    if (m == 0 || n == 0) throw Error("binomial_divides: need m >= 1 and n >= 1");
    if (a.level != Level::base) throw LevelMismatch("a must be a base-level element");
    if (a.code == 0) throw ZeroHasNoOrder("a must be nonzero");
    const std::uint64_t ord = field->order(a);
    return n % (m * ord) == 0;
}

Polynomial char_poly_power(const Polynomial& f, std::uint64_t t) {
    if (t == 0) throw Error("char_poly_power: power must be >= 1");
    if (!f.is_monic() || f.degree() < 1 || !is_irreducible(f))
        throw NotIrreducible("f must be monic irreducible");
    const FieldPtr& field = f.field();
    const Field& fd = *field;
    const Level lv = f.level();
    const std::uint64_t m = static_cast<std::uint64_t>(f.degree());

    // gamma = X^t in F_q[X]/(f); find the monic dependency of lowest degree
    // among 1, gamma, gamma^2, ... by Gaussian elimination, then raise the
    // minimal polynomial to the cofactor power
    Polynomial gamma(field, lv);
    {
        Polynomial x = Polynomial::from_codes(field, {0, 1}, lv);
        Polynomial acc = Polynomial::from_codes(field, {1}, lv);
        const Polynomial xmod = divmod(x, f).second;
        std::uint64_t e = t;
        Polynomial base = xmod;
        while (e > 0) {
            if (e & 1) acc = divmod(acc * base, f).second;
            base = divmod(base * base, f).second;
            e >>= 1;
        }
        gamma = std::move(acc);
    }

    struct Row {
        std::vector<std::uint64_t> value;  // coordinates in F_q^m, pivot-normalized
        std::vector<std::uint64_t> combo;  // expression in powers of gamma
        std::size_t pivot;
    };
    std::vector<Row> rows;

    Polynomial power = Polynomial::from_codes(field, {1}, lv);
    for (std::uint64_t j = 0;; ++j) {
        std::vector<std::uint64_t> value(m, 0);
        for (std::uint64_t i = 0; i < m; ++i) value[i] = power.coeff_code(i);
        std::vector<std::uint64_t> combo(j + 1, 0);
        combo[j] = 1;

        for (const Row& row : rows) {
            const std::uint64_t c = value[row.pivot];
            if (c == 0) continue;
            for (std::uint64_t i = 0; i < m; ++i)
                value[i] = fd.sub_code(lv, value[i], fd.mul_code(lv, c, row.value[i]));
            for (std::size_t i = 0; i < row.combo.size() && i < combo.size(); ++i)
                combo[i] = fd.sub_code(lv, combo[i], fd.mul_code(lv, c, row.combo[i]));
        }

        const auto nz = std::find_if(value.begin(), value.end(),
                                     [](std::uint64_t c) { return c != 0; });
        if (nz == value.end()) {
            // dependency found: combo encodes the minimal polynomial of gamma
            const Polynomial minimal = Polynomial::from_codes(field, std::move(combo), lv);
            Polynomial result = Polynomial::from_codes(field, {1}, lv);
            for (std::uint64_t i = 0; i < m / j; ++i) result = result * minimal;
            return result;
        }

        Row row;
        row.pivot = static_cast<std::size_t>(nz - value.begin());
        const std::uint64_t scale = fd.inv_code(lv, value[row.pivot]);
        row.value.resize(m);
        for (std::uint64_t i = 0; i < m; ++i) row.value[i] = fd.mul_code(lv, value[i], scale);
        row.combo.resize(combo.size());
        for (std::size_t i = 0; i < combo.size(); ++i)
            row.combo[i] = fd.mul_code(lv, combo[i], scale);
        rows.push_back(std::move(row));
        power = divmod(power * gamma, f).second;
    }
}

Polynomial witness_nonsparse(const FieldPtr& field, std::uint64_t p, std::uint64_t seed) {
    require_odd(*field);
    if (!is_prime(p)) throw Error("witness_nonsparse: p must be prime");
    const std::uint64_t r = field->characteristic();
    if (p == r) throw CharacteristicDividesN(r, 1, 1);
    const std::uint64_t q = field->size();
    if ((q - 1) % p == 0 || (q + 1) % p == 0)
        throw NoWitnessExists("p divides q^2 - 1, so X^p - 1 is 3-sparse");

    const Factorization fac = factor(cyclotomic_poly(field, p), seed);

    // internal cross-check: trinomial factors X^t + a X + b must reproduce
    // the closed form of the characteristic polynomial of the squared root
    for (const auto& entry : fac.entries()) {
        const Polynomial& g = entry.poly;
        const auto t = static_cast<std::uint64_t>(g.degree());
        if (g.weight() != 3 || t < 3 || g.coeff_code(1) == 0 || g.coeff_code(0) == 0)
            continue;
        bool trinomial_shape = true;
        for (std::uint64_t i = 2; i < t; ++i)
            if (g.coeff_code(i) != 0) trinomial_shape = false;
        if (!trinomial_shape) continue;

        const Element a = g.coeff(1);
        const Element b = g.coeff(0);
        const Element two = field->from_int(2);
        Polynomial closed(field, Level::base);
        if (t % 2 == 0) {
            // X^t + 2b X^(t/2) - a^2 X + b^2
            closed = Polynomial::monomial(field, t, field->one()) +
                     Polynomial::monomial(field, t / 2, field->mul(two, b)) +
                     Polynomial::monomial(field, 1, field->neg(field->mul(a, a))) +
                     Polynomial::constant(field, field->mul(b, b));
        } else {
            // X^t + 2a X^((t+1)/2) + a^2 X - b^2
            closed = Polynomial::monomial(field, t, field->one()) +
                     Polynomial::monomial(field, (t + 1) / 2, field->mul(two, a)) +
                     Polynomial::monomial(field, 1, field->mul(a, a)) +
                     Polynomial::constant(field, field->neg(field->mul(b, b)));
        }
        if (!(char_poly_power(g, 2) == closed))
            throw std::logic_error("trinomial square closed form mismatch");
    }

    for (const auto& entry : fac.entries())
        if (entry.poly.weight() >= 4) return entry.poly;
    throw std::logic_error("no heavy factor found although p does not divide q^2 - 1");
}

std::vector<std::uint64_t> enumerate_sparse(const FieldPtr& field, std::uint64_t bound) {
    require_odd(*field);
    if (bound == 0) throw Error("bound must be >= 1");
    std::vector<std::uint64_t> primes;
    for (const auto& [p, e] : prime_base(field->size())) {
        (void)e;
        primes.push_back(p);
    }

    std::vector<std::uint64_t> out{1};
    for (std::size_t from = 0; from < out.size(); ++from)
        for (const std::uint64_t p : primes)
            if (out[from] <= bound / p) out.push_back(out[from] * p);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace trisparse
