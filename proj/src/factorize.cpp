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

#include "trisparse/factorize.hpp"

#include <algorithm>
#include <random>

#include "trisparse/intutil.hpp"

namespace trisparse {

namespace {

Polynomial identity_x(const FieldPtr& field, Level lv) {
    return Polynomial::from_codes(field, {0, 1}, lv);
}

Polynomial powmod(Polynomial base, std::uint64_t e, const Polynomial& mod) {
    Polynomial out = Polynomial::from_codes(base.field(), {1}, base.level());
    base = divmod(base, mod).second;
    while (e > 0) {
        if (e & 1) out = divmod(out * base, mod).second;
        base = divmod(base * base, mod).second;
        e >>= 1;
    }
    return out;
}

/// f = g(X^r) with g's coefficients the r-th roots of f's; valid whenever
/// f' = 0.  In F_q the r-th root of a is a^(q/r) (resp. a^(q^2/r) at tower
/// level), since y -> y^r is the Frobenius bijection.
Polynomial char_root_deflate(const Polynomial& f) {
    const Field& fd = *f.field();
    const std::uint64_t r = fd.characteristic();
    const std::uint64_t root_exp = fd.level_size(f.level()) / r;
    std::vector<std::uint64_t> out(static_cast<std::size_t>(f.degree()) / r + 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = fd.pow_code(f.level(), f.coeff_code(i * r), root_exp);
    return Polynomial::from_codes(f.field(), std::move(out), f.level());
}

void equal_degree_recurse(const Polynomial& f, std::uint64_t d, std::mt19937_64& rng,
                          std::vector<Polynomial>& out) {
    const std::uint64_t deg = static_cast<std::uint64_t>(f.degree());
    if (deg == d) {
        out.push_back(f);
        return;
    }
    const Field& fd = *f.field();
    const Level lv = f.level();
    const std::uint64_t q = fd.level_size(lv);
    std::uniform_int_distribution<std::uint64_t> coeff(0, q - 1);

    for (int attempt = 0; attempt < 128; ++attempt) {
        std::vector<std::uint64_t> codes(deg, 0);
        for (auto& c : codes) c = coeff(rng);
        const Polynomial a = Polynomial::from_codes(f.field(), std::move(codes), lv);
        if (a.is_zero()) continue;

        Polynomial g = gcd(a, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_recurse(g, d, rng, out);
            equal_degree_recurse(divmod(f, g).first, d, rng, out);
            return;
        }

        // b = a^((q^d - 1)/2) mod f, via the norm-style chain
        // a^(1 + q + ... + q^(d-1)) raised to (q-1)/2, so every exponent
        // stays below q
        Polynomial chain = a;
        Polynomial frob = a;
        for (std::uint64_t i = 1; i < d; ++i) {
            frob = powmod(std::move(frob), q, f);
            chain = divmod(chain * frob, f).second;
        }
        Polynomial b = powmod(std::move(chain), (q - 1) / 2, f);
        b = b - Polynomial::from_codes(f.field(), {1}, lv);
        if (b.is_zero()) continue;
        g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_recurse(g, d, rng, out);
            equal_degree_recurse(divmod(f, g).first, d, rng, out);
            return;
        }
    }
    throw NotEqualDegree("splitting did not converge; input is not an equal-degree product");
}

}  // namespace

Factorization::Factorization(FieldPtr field, Level level, Element unit)
    : field_(std::move(field)), level_(level), unit_(unit) {}

void Factorization::insert(Polynomial factor, std::uint64_t multiplicity) {
    if (multiplicity == 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), factor,
                               [](const FactorEntry& e, const Polynomial& p) {
                                   return Polynomial::compare(e.poly, p) < 0;
                               });
    if (it != entries_.end() && Polynomial::compare(it->poly, factor) == 0) {
        it->multiplicity += multiplicity;
        return;
    }
    entries_.insert(it, FactorEntry{std::move(factor), multiplicity});
}

Polynomial Factorization::expand() const {
    Polynomial out = Polynomial::constant(field_, unit_);
    for (const auto& e : entries_)
        for (std::uint64_t i = 0; i < e.multiplicity; ++i) out = out * e.poly;
    return out;
}

std::size_t Factorization::max_weight() const noexcept {
    std::size_t w = 0;
    for (const auto& e : entries_) w = std::max(w, e.poly.weight());
    return w;
}

bool operator==(const Factorization& a, const Factorization& b) {
    if (!(a.level_ == b.level_ && a.field_->same_field(*b.field_) && a.unit_ == b.unit_))
        return false;
    if (a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (a.entries_[i].multiplicity != b.entries_[i].multiplicity ||
            !(a.entries_[i].poly == b.entries_[i].poly))
            return false;
    return true;
}

std::vector<std::pair<Polynomial, std::uint64_t>> squarefree_decompose(const Polynomial& f) {
    if (f.is_zero()) throw ZeroPolynomial("cannot decompose the zero polynomial");
    std::vector<std::pair<Polynomial, std::uint64_t>> out;
    if (f.degree() == 0) return out;

    const std::uint64_t r = f.field()->characteristic();
    const Polynomial fm = f.monic();
    const Polynomial deriv = fm.derivative();

    auto absorb_char_part = [&](const Polynomial& part) {
        // part = g(X^r); recurse on g and scale multiplicities by r
        for (auto& [h, m] : squarefree_decompose(char_root_deflate(part)))
            out.emplace_back(std::move(h), m * r);
    };

    if (deriv.is_zero()) {
        absorb_char_part(fm);
    } else {
        Polynomial c = gcd(fm, deriv);
        Polynomial w = divmod(fm, c).first;
        std::uint64_t i = 1;
        while (w.degree() > 0) {
            const Polynomial y = gcd(w, c);
            const Polynomial piece = divmod(w, y).first;
            if (piece.degree() > 0) out.emplace_back(piece, i);
            w = y;
            c = divmod(c, y).first;
            ++i;
        }
        if (c.degree() > 0) absorb_char_part(c);
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        const int c = Polynomial::compare(a.first, b.first);
        return c != 0 ? c < 0 : a.second < b.second;
    });
    return out;
}

std::vector<std::pair<std::uint64_t, Polynomial>> distinct_degree(const Polynomial& f) {
    if (f.is_zero() || f.degree() < 1 || !f.is_monic())
        throw NotSquarefree("expected a monic nonconstant polynomial");
    const Polynomial deriv = f.derivative();
    if (deriv.is_zero() || gcd(f, deriv).degree() > 0)
        throw NotSquarefree("input has repeated factors");

    const std::uint64_t q = f.field()->level_size(f.level());
    std::vector<std::pair<std::uint64_t, Polynomial>> out;
    Polynomial rest = f;
    Polynomial h = identity_x(f.field(), f.level());
    std::uint64_t d = 0;
    while (rest.degree() >= 2 * static_cast<std::int64_t>(d + 1)) {
        ++d;
        h = powmod(std::move(h), q, rest);
        const Polynomial g = gcd(h - identity_x(f.field(), f.level()), rest);
        if (g.degree() > 0) {
            out.emplace_back(d, g);
            rest = divmod(rest, g).first;
            h = divmod(h, rest).second;
        }
    }
    if (rest.degree() > 0) out.emplace_back(static_cast<std::uint64_t>(rest.degree()), rest);
    return out;
}

std::vector<Polynomial> equal_degree_split(const Polynomial& f, std::uint64_t d,
                                           std::uint64_t seed) {
    if (f.field()->level_size(f.level()) % 2 == 0)
        throw EvenCharacteristicUnsupported("equal-degree splitting needs an odd field size");
    if (d < 1 || f.degree() < 1 || !f.is_monic() ||
        static_cast<std::uint64_t>(f.degree()) % d != 0)
        throw NotEqualDegree("degree is not a multiple of d");
    const Polynomial deriv = f.derivative();
    if (deriv.is_zero() || gcd(f, deriv).degree() > 0)
        throw NotEqualDegree("input has repeated factors");

    std::vector<Polynomial> out;
    std::mt19937_64 rng(seed);
    equal_degree_recurse(f, d, rng, out);
    std::sort(out.begin(), out.end(),
              [](const Polynomial& a, const Polynomial& b) { return Polynomial::compare(a, b) < 0; });
    return out;
}

Factorization factor(const Polynomial& f, std::uint64_t seed) {
    if (f.is_zero()) throw ZeroPolynomial("cannot factor the zero polynomial");
    if (f.field()->level_size(f.level()) % 2 == 0)
        throw EvenCharacteristicUnsupported("factorization is supported for odd field sizes only");

    Factorization out(f.field(), f.level(), f.leading());
    if (f.degree() == 0) return out;
    for (const auto& [g, m] : squarefree_decompose(f))
        for (const auto& [d, h] : distinct_degree(g))
            for (const auto& irred : equal_degree_split(h, d, seed)) out.insert(irred, m);
    return out;
}

bool is_irreducible(const Polynomial& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const Polynomial fm = f.monic();
    const Polynomial deriv = fm.derivative();
    if (deriv.is_zero() || gcd(fm, deriv).degree() > 0) return false;

    const std::uint64_t q = fm.field()->level_size(fm.level());
    const std::uint64_t m = static_cast<std::uint64_t>(fm.degree());
    const Polynomial x = identity_x(fm.field(), fm.level());
    auto frobenius_iterate = [&](std::uint64_t count) {
        Polynomial t = x;
        for (std::uint64_t i = 0; i < count; ++i) t = powmod(std::move(t), q, fm);
        return t;
    };
    for (const auto& [s, e] : factor_integer(m)) {
        (void)e;
        if (gcd(frobenius_iterate(m / s) - x, fm).degree() > 0) return false;
    }
    return frobenius_iterate(m) == x;
}

}  // namespace trisparse
