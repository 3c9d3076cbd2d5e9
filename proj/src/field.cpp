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

#include "trisparse/field.hpp"

#include <algorithm>
#include <map>

#include "trisparse/intutil.hpp"

namespace trisparse {

namespace {

// Extension fields with at most this many elements get add/mul/inv lookup
// tables (two q^2 uint32 tables; 8 MiB at the limit).
constexpr std::uint64_t kTableLimit = 1024;

constexpr std::uint64_t kSizeLimit = std::uint64_t{1} << 31;

// Dense polynomials over F_r (digit vectors, low to high, no trailing
// zeros).  Used for modulus validation, the default-modulus scan, and the
// table-free extension arithmetic.
using Digits = std::vector<std::uint64_t>;

Digits trim(Digits v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t r) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t rem = static_cast<std::int64_t>(r), new_rem = static_cast<std::int64_t>(a % r);
    while (new_rem != 0) {
        const std::int64_t quot = rem / new_rem;
        t = std::exchange(new_t, t - quot * new_t);
        rem = std::exchange(new_rem, rem - quot * new_rem);
    }
    if (rem != 1) throw DivisionByZero("element has no inverse");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(r) : t);
}

Digits zp_mul(const Digits& a, const Digits& b, std::uint64_t r) {
    if (a.empty() || b.empty()) return {};
    Digits out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % r;
    }
    return trim(std::move(out));
}

// m monic, deg m >= 1
Digits zp_mod(Digits a, const Digits& m, std::uint64_t r) {
    a = trim(std::move(a));
    const std::size_t md = m.size() - 1;
    while (a.size() > md) {
        const std::uint64_t c = a.back();
        const std::size_t shift = a.size() - 1 - md;
        if (c != 0)
            for (std::size_t i = 0; i < md; ++i)
                a[shift + i] = (a[shift + i] + (r - 1) * c % r * m[i]) % r;
        a.pop_back();
        a = trim(std::move(a));
    }
    return a;
}

Digits zp_powmod(Digits base, std::uint64_t e, const Digits& m, std::uint64_t r) {
    Digits out{1};
    base = zp_mod(std::move(base), m, r);
    while (e > 0) {
        if (e & 1) out = zp_mod(zp_mul(out, base, r), m, r);
        base = zp_mod(zp_mul(base, base, r), m, r);
        e >>= 1;
    }
    return out;
}

Digits zp_gcd(Digits a, Digits b, std::uint64_t r) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        // reduce a mod b after making b monic
        const std::uint64_t lead_inv = inv_mod_prime(b.back(), r);
        for (auto& c : b) c = c * lead_inv % r;
        a = zp_mod(std::move(a), b, r);
        std::swap(a, b);
    }
    return a;
}

// Rabin's test: h (monic, degree k >= 1) is irreducible over F_r iff
// Y^(r^k) = Y mod h and gcd(Y^(r^(k/s)) - Y, h) = 1 for every prime s | k.
bool zp_irreducible(const Digits& h, std::uint64_t r) {
    const std::size_t k = h.size() - 1;
    if (k == 1) return true;
    const Digits y{0, 1};
    auto frobenius_iterate = [&](std::size_t count) {
        Digits t = y;
        for (std::size_t i = 0; i < count; ++i) t = zp_powmod(std::move(t), r, h, r);
        return t;
    };
    auto minus_y = [&](Digits t) {
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (t[1] + r - 1) % r;
        return trim(std::move(t));
    };
    for (const auto& [s, e] : factor_integer(k)) {
        (void)e;
        if (zp_gcd(minus_y(frobenius_iterate(k / s)), h, r).size() > 1) return false;
    }
    return frobenius_iterate(k) == y;
}

}  // namespace

FieldPtr Field::make(std::uint64_t characteristic, std::uint32_t degree,
                     std::optional<std::vector<std::uint64_t>> modulus) {
    if (!is_prime(characteristic))
        throw InvalidCharacteristic("characteristic must be prime, got " +
                                    std::to_string(characteristic));
    if (degree < 1) throw InvalidModulus("extension degree must be >= 1");

    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < degree; ++i) {
        if (q > kSizeLimit / characteristic)
            throw Error("field size exceeds the supported bound 2^31");
        q *= characteristic;
    }

    auto field = std::shared_ptr<Field>(new Field());
    Field& f = *field;
    f.r_ = characteristic;
    f.k_ = degree;
    f.q_ = q;

    if (modulus) {
        auto& m = *modulus;
        if (m.size() != static_cast<std::size_t>(degree) + 1)
            throw InvalidModulus("modulus must have k+1 coefficients");
        for (auto c : m)
            if (c >= characteristic) throw InvalidModulus("modulus digit out of range");
        if (m.back() != 1) throw InvalidModulus("modulus must be monic");
        if (!zp_irreducible(m, characteristic))
            throw InvalidModulus("modulus is reducible over the prime field");
        f.modulus_ = std::move(m);
    } else {
        // scan monic candidates in encoding order of the lower coefficients
        for (std::uint64_t enc = 0;; ++enc) {
            if (enc >= q) throw InvalidModulus("no irreducible modulus found");
            Digits h(degree + 1, 0);
            std::uint64_t rest = enc;
            for (std::uint32_t i = 0; i < degree; ++i) {
                h[i] = rest % characteristic;
                rest /= characteristic;
            }
            h[degree] = 1;
            if (zp_irreducible(h, characteristic)) {
                f.modulus_ = std::move(h);
                break;
            }
        }
    }

    if (f.k_ >= 2 && f.q_ <= kTableLimit) {
        f.add_tab_.resize(f.q_ * f.q_);
        f.mul_tab_.resize(f.q_ * f.q_);
        f.inv_tab_.assign(f.q_, 0);
        for (std::uint64_t a = 0; a < f.q_; ++a) {
            const Digits da = f.base_digits(a);
            for (std::uint64_t b = 0; b < f.q_; ++b) {
                const Digits db = f.base_digits(b);
                Digits sum(f.k_, 0);
                for (std::uint32_t i = 0; i < f.k_; ++i) sum[i] = (da[i] + db[i]) % f.r_;
                f.add_tab_[a * f.q_ + b] = static_cast<std::uint32_t>(f.compose(sum));
                f.mul_tab_[a * f.q_ + b] =
                    static_cast<std::uint32_t>(f.compose(zp_mod(zp_mul(da, db, f.r_), f.modulus_, f.r_)));
            }
        }
        f.tables_ = true;
        for (std::uint64_t a = 1; a < f.q_; ++a)
            f.inv_tab_[a] = static_cast<std::uint32_t>(f.base_pow(a, f.q_ - 2));
    }

    f.base_order_factors_ = factor_integer(f.q_ - 1);

    if (f.odd_characteristic()) {
        // least non-square in encoding order; exists since q is odd
        for (std::uint64_t c = 1; c < f.q_; ++c) {
            if (f.base_pow(c, (f.q_ - 1) / 2) != 1) {
                f.nonsquare_ = c;
                break;
            }
        }
        f.has_tower_ = true;
        // q^2 - 1 = (q-1)(q+1): factor the halves so trial division stays
        // below sqrt(q) instead of q
        std::map<std::uint64_t, std::uint32_t> merged;
        for (const auto& [p, e] : f.base_order_factors_) merged[p] += e;
        for (const auto& [p, e] : factor_integer(f.q_ + 1)) merged[p] += e;
        f.tower_order_factors_.assign(merged.begin(), merged.end());
    }

    return field;
}

Element Field::tower_nonsquare() const {
    require_tower();
    return {Level::base, nonsquare_};
}

bool Field::same_field(const Field& other) const noexcept {
    return r_ == other.r_ && k_ == other.k_ && modulus_ == other.modulus_;
}

Element Field::from_code(std::uint64_t code, Level lv) const {
    if (lv == Level::tower) require_tower();
    if (code >= level_size(lv)) throw Error("element code out of range");
    return {lv, code};
}

Element Field::from_int(std::int64_t value, Level lv) const noexcept {
    const std::int64_t r = static_cast<std::int64_t>(r_);
    return {lv, static_cast<std::uint64_t>(((value % r) + r) % r)};
}

Element Field::from_digits(const std::vector<std::uint64_t>& digits, Level lv) const {
    if (lv == Level::tower) require_tower();
    const std::size_t want = lv == Level::base ? k_ : 2 * std::size_t{k_};
    if (digits.size() != want) throw Error("digit vector has the wrong length");
    std::uint64_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (digits[i] >= r_) throw Error("digit out of range");
        code = code * r_ + digits[i];
    }
    return {lv, code};
}

std::vector<std::uint64_t> Field::digits(const Element& x) const {
    if (x.level == Level::base) return base_digits(x.code);
    std::vector<std::uint64_t> out = base_digits(x.code % q_);
    const std::vector<std::uint64_t> hi = base_digits(x.code / q_);
    out.insert(out.end(), hi.begin(), hi.end());
    return out;
}

Element Field::tower_gen() const {
    require_tower();
    return {Level::tower, q_};
}

Element Field::embed(const Element& x) const {
    if (x.level == Level::tower) return x;
    require_tower();
    return {Level::tower, x.code};
}

bool Field::in_base(const Element& x) const noexcept {
    return x.level == Level::base || x.code < q_;
}

Element Field::project(const Element& x) const {
    if (x.level == Level::base) return x;
    if (!in_base(x)) throw Error("element does not lie in the base field");
    return {Level::base, x.code};
}

namespace {
void check_levels(const Element& x, const Element& y) {
    if (x.level != y.level)
        throw LevelMismatch("operands live at different levels");
}
}  // namespace

Element Field::add(const Element& x, const Element& y) const {
    check_levels(x, y);
    return {x.level, add_code(x.level, x.code, y.code)};
}

Element Field::sub(const Element& x, const Element& y) const {
    check_levels(x, y);
    return {x.level, sub_code(x.level, x.code, y.code)};
}

Element Field::mul(const Element& x, const Element& y) const {
    check_levels(x, y);
    return {x.level, mul_code(x.level, x.code, y.code)};
}

Element Field::div(const Element& x, const Element& y) const {
    check_levels(x, y);
    return {x.level, mul_code(x.level, x.code, inv_code(x.level, y.code))};
}

Element Field::neg(const Element& x) const { return {x.level, neg_code(x.level, x.code)}; }

Element Field::inv(const Element& x) const { return {x.level, inv_code(x.level, x.code)}; }

Element Field::pow(const Element& x, std::uint64_t e) const {
    return {x.level, pow_code(x.level, x.code, e)};
}

std::uint64_t Field::order(const Element& x) const {
    if (x.code == 0) throw ZeroHasNoOrder("the zero element has no multiplicative order");
    if (x.level == Level::tower) require_tower();
    const auto& factors =
        x.level == Level::base ? base_order_factors_ : tower_order_factors_;
    std::uint64_t t = group_order(x.level);
    for (const auto& [p, e] : factors) {
        (void)e;
        while (t % p == 0 && pow_code(x.level, x.code, t / p) == 1) t /= p;
    }
    return t;
}

Element Field::root_of_unity(Level lv, std::uint64_t d) const {
    if (lv == Level::tower) require_tower();
    if (d == 0) throw NoSuchRoot("root order must be >= 1");
    const std::uint64_t n = group_order(lv);
    if (n % d != 0)
        throw NoSuchRoot("no primitive root of unity of order " + std::to_string(d));
    for (std::uint64_t g = 1; g <= n; ++g) {
        const Element z{lv, pow_code(lv, g, n / d)};
        if (z.code != 0 && order(z) == d) return z;
    }
    throw NoSuchRoot("root search exhausted the group");  // unreachable
}

// --- encoding-level kernels -------------------------------------------------

std::uint64_t Field::add_code(Level lv, std::uint64_t a, std::uint64_t b) const {
    if (lv == Level::base) return base_add(a, b);
    require_tower();
    return base_add(a % q_, b % q_) + base_add(a / q_, b / q_) * q_;
}

std::uint64_t Field::sub_code(Level lv, std::uint64_t a, std::uint64_t b) const {
    if (lv == Level::base) return base_sub(a, b);
    require_tower();
    return base_sub(a % q_, b % q_) + base_sub(a / q_, b / q_) * q_;
}

std::uint64_t Field::mul_code(Level lv, std::uint64_t a, std::uint64_t b) const {
    if (lv == Level::base) return base_mul(a, b);
    require_tower();
    const std::uint64_t a0 = a % q_, a1 = a / q_, b0 = b % q_, b1 = b / q_;
    const std::uint64_t lo = base_add(base_mul(a0, b0), base_mul(nonsquare_, base_mul(a1, b1)));
    const std::uint64_t hi = base_add(base_mul(a0, b1), base_mul(a1, b0));
    return lo + hi * q_;
}

std::uint64_t Field::neg_code(Level lv, std::uint64_t a) const {
    if (lv == Level::base) return base_neg(a);
    require_tower();
    return base_neg(a % q_) + base_neg(a / q_) * q_;
}

std::uint64_t Field::inv_code(Level lv, std::uint64_t a) const {
    if (a == 0) throw DivisionByZero("division by zero");
    if (lv == Level::base) return base_inv(a);
    require_tower();
    // (a0 + a1 B)^-1 = (a0 - a1 B) / (a0^2 - c a1^2); the norm is nonzero
    // because c is a non-square
    const std::uint64_t a0 = a % q_, a1 = a / q_;
    const std::uint64_t norm =
        base_sub(base_mul(a0, a0), base_mul(nonsquare_, base_mul(a1, a1)));
    const std::uint64_t ninv = base_inv(norm);
    return base_mul(a0, ninv) + base_mul(base_neg(a1), ninv) * q_;
}

std::uint64_t Field::pow_code(Level lv, std::uint64_t a, std::uint64_t e) const {
    std::uint64_t out = 1;
    while (e > 0) {
        if (e & 1) out = mul_code(lv, out, a);
        a = mul_code(lv, a, a);
        e >>= 1;
    }
    return out;
}

void Field::addmul_codes(Level lv, std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                         std::uint64_t s) const {
    if (s == 0) return;
    if (lv == Level::base) {
        if (tables_) {
            const std::uint32_t* mul_row = mul_tab_.data() + s * q_;
            const std::uint32_t* add_tab = add_tab_.data();
            for (std::size_t i = 0; i < len; ++i)
                dst[i] = add_tab[dst[i] * q_ + mul_row[src[i]]];
            return;
        }
        if (k_ == 1) {
            const std::uint64_t r = r_;
#ifdef __SIZEOF_INT128__
            // Barrett reduction: with m = floor(2^64 / r) and x < 2^62, the
            // estimate floor(x m / 2^64) is x / r or one less, so a single
            // conditional subtract lands the remainder in [0, r)
            const std::uint64_t m = ~std::uint64_t{0} / r;
            for (std::size_t i = 0; i < len; ++i) {
                const std::uint64_t x = s * src[i];
                const std::uint64_t qhat =
                    static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * m >> 64);
                std::uint64_t rem = x - qhat * r;
                if (rem >= r) rem -= r;
                std::uint64_t t = dst[i] + rem;
                if (t >= r) t -= r;
                dst[i] = t;
            }
#else
            for (std::size_t i = 0; i < len; ++i) {
                const std::uint64_t t = dst[i] + s * src[i] % r;
                dst[i] = t >= r ? t - r : t;
            }
#endif
            return;
        }
        for (std::size_t i = 0; i < len; ++i) dst[i] = base_add(dst[i], base_mul(s, src[i]));
        return;
    }
    for (std::size_t i = 0; i < len; ++i) dst[i] = add_code(lv, dst[i], mul_code(lv, s, src[i]));
}

// --- base-level arithmetic --------------------------------------------------

std::uint64_t Field::base_add(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return (a + b) % r_;
    if (tables_) return add_tab_[a * q_ + b];
    const Digits da = base_digits(a), db = base_digits(b);
    Digits sum(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) sum[i] = (da[i] + db[i]) % r_;
    return compose(sum);
}

std::uint64_t Field::base_sub(std::uint64_t a, std::uint64_t b) const {
    return base_add(a, base_neg(b));
}

std::uint64_t Field::base_mul(std::uint64_t a, std::uint64_t b) const {
    if (k_ == 1) return a * b % r_;
    if (tables_) return mul_tab_[a * q_ + b];
    return generic_mul(a, b);
}

std::uint64_t Field::generic_mul(std::uint64_t a, std::uint64_t b) const {
    return compose(zp_mod(zp_mul(base_digits(a), base_digits(b), r_), modulus_, r_));
}

std::uint64_t Field::base_neg(std::uint64_t a) const {
    if (k_ == 1) return (r_ - a) % r_;
    Digits d = base_digits(a);
    for (auto& c : d) c = (r_ - c) % r_;
    return compose(d);
}

std::uint64_t Field::base_inv(std::uint64_t a) const {
    if (a == 0) throw DivisionByZero("division by zero");
    if (k_ == 1) return inv_mod_prime(a, r_);
    if (tables_) return inv_tab_[a];
    return base_pow(a, q_ - 2);
}

std::uint64_t Field::base_pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t out = 1;
    while (e > 0) {
        if (e & 1) out = base_mul(out, a);
        a = base_mul(a, a);
        e >>= 1;
    }
    return out;
}

std::vector<std::uint64_t> Field::base_digits(std::uint64_t code) const {
    std::vector<std::uint64_t> out(k_, 0);
    for (std::uint32_t i = 0; i < k_ && code != 0; ++i) {
        out[i] = code % r_;
        code /= r_;
    }
    return out;
}

std::uint64_t Field::compose(const std::vector<std::uint64_t>& digits) const {
    std::uint64_t code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * r_ + digits[i];
    return code;
}

void Field::require_tower() const {
    if (!has_tower_)
        throw Error("the quadratic tower is only available in odd characteristic");
}

// --- rendering --------------------------------------------------------------

std::string Field::base_to_string(std::uint64_t code) const {
    if (code == 0) return "0";
    const Digits d = base_digits(code);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += "a";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string Field::to_string(const Element& x) const {
    if (x.level == Level::base) return base_to_string(x.code);
    const std::uint64_t lo = x.code % q_, hi = x.code / q_;
    if (hi == 0) return base_to_string(lo);
    std::string out;
    const std::string hs = base_to_string(hi);
    if (hs == "1")
        out = "b";
    else if (hs.find('+') != std::string::npos)
        out = "(" + hs + ")*b";
    else
        out = hs + "*b";
    if (lo != 0) out += "+" + base_to_string(lo);
    return out;
}

}  // namespace trisparse
