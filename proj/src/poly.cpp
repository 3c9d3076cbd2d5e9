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

#include "trisparse/poly.hpp"

#include <algorithm>

namespace trisparse {

Polynomial::Polynomial(FieldPtr field, Level level) : field_(std::move(field)), level_(level) {
    if (!field_) throw Error("polynomial needs a field");
}

Polynomial Polynomial::from_codes(FieldPtr field, std::vector<std::uint64_t> coeffs, Level level) {
    Polynomial out(std::move(field), level);
    const std::uint64_t bound = out.field_->level_size(level);
    for (auto c : coeffs)
        if (c >= bound) throw Error("coefficient code out of range");
    out.coeffs_ = std::move(coeffs);
    out.normalize();
    return out;
}

Polynomial Polynomial::from_ints(FieldPtr field, std::initializer_list<std::int64_t> coeffs,
                                 Level level) {
    Polynomial out(field, level);
    out.coeffs_.reserve(coeffs.size());
    for (auto v : coeffs) out.coeffs_.push_back(field->from_int(v, level).code);
    out.normalize();
    return out;
}

Polynomial Polynomial::constant(FieldPtr field, const Element& value) {
    Polynomial out(std::move(field), value.level);
    if (value.code != 0) out.coeffs_.push_back(value.code);
    return out;
}

Polynomial Polynomial::monomial(FieldPtr field, std::uint64_t degree, const Element& coeff) {
    Polynomial out(std::move(field), coeff.level);
    if (coeff.code != 0) {
        out.coeffs_.assign(degree + 1, 0);
        out.coeffs_[degree] = coeff.code;
    }
    return out;
}

Polynomial Polynomial::x_pow_minus_one(FieldPtr field, std::uint64_t n, Level level) {
    if (n == 0) throw Error("exponent must be >= 1");
    Polynomial out(std::move(field), level);
    out.coeffs_.assign(n + 1, 0);
    out.coeffs_[0] = out.field_->neg_code(level, 1);
    out.coeffs_[n] = 1;
    return out;
}

std::size_t Polynomial::weight() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c != 0; }));
}

Element Polynomial::coeff(std::uint64_t i) const noexcept { return {level_, coeff_code(i)}; }

std::uint64_t Polynomial::coeff_code(std::uint64_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
}

Element Polynomial::leading() const noexcept {
    return {level_, coeffs_.empty() ? 0 : coeffs_.back()};
}

bool Polynomial::is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

Polynomial Polynomial::monic() const {
    if (is_zero() || is_monic()) return *this;
    const std::uint64_t scale = field_->inv_code(level_, coeffs_.back());
    Polynomial out(field_, level_);
    out.coeffs_.reserve(coeffs_.size());
    for (auto c : coeffs_) out.coeffs_.push_back(field_->mul_code(level_, c, scale));
    return out;
}

Polynomial Polynomial::derivative() const {
    Polynomial out(field_, level_);
    if (coeffs_.size() < 2) return out;
    out.coeffs_.resize(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        const std::uint64_t factor = field_->from_int(static_cast<std::int64_t>(i % field_->characteristic()), level_).code;
        out.coeffs_[i - 1] = field_->mul_code(level_, coeffs_[i], factor);
    }
    out.normalize();
    return out;
}

Polynomial Polynomial::inflate(std::uint64_t stretch) const {
    if (stretch == 0) throw Error("inflation exponent must be >= 1");
    Polynomial out(field_, level_);
    if (is_zero() || stretch == 1) {
        out.coeffs_ = coeffs_;
        return out;
    }
    out.coeffs_.assign((coeffs_.size() - 1) * stretch + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i * stretch] = coeffs_[i];
    return out;
}

Polynomial Polynomial::lift_to_tower() const {
    if (level_ == Level::tower) return *this;
    Polynomial out(field_, Level::tower);
    out.coeffs_ = coeffs_;  // base codes embed unchanged
    return out;
}

Polynomial Polynomial::project_to_base() const {
    if (level_ == Level::base) return *this;
    Polynomial out(field_, Level::base);
    out.coeffs_.reserve(coeffs_.size());
    for (auto c : coeffs_) {
        if (!field_->in_base(Element{Level::tower, c}))
            throw Error("coefficient does not lie in the base field");
        out.coeffs_.push_back(c);
    }
    return out;
}

Element Polynomial::eval(const Element& point) const {
    const Level lv = (level_ == Level::tower || point.level == Level::tower) ? Level::tower
                                                                            : Level::base;
    const std::uint64_t x = lv == point.level ? point.code : field_->embed(point).code;
    std::uint64_t acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = field_->add_code(lv, field_->mul_code(lv, acc, x), coeffs_[i]);
    return {lv, acc};
}

std::string Polynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string cs = field_->to_string({level_, coeffs_[i]});
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        if (i == 0) {
            out += cs;
            continue;
        }
        if (cs != "1") out += cs + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(field_, level_);
    out.coeffs_.reserve(coeffs_.size());
    for (auto c : coeffs_) out.coeffs_.push_back(field_->neg_code(level_, c));
    return out;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    f.require_same_context(g);
    Polynomial out(f.field_, f.level_);
    out.coeffs_.resize(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = f.field_->add_code(f.level_, f.coeff_code(i), g.coeff_code(i));
    out.normalize();
    return out;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    f.require_same_context(g);
    Polynomial out(f.field_, f.level_);
    out.coeffs_.resize(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
        out.coeffs_[i] = f.field_->sub_code(f.level_, f.coeff_code(i), g.coeff_code(i));
    out.normalize();
    return out;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.require_same_context(g);
    Polynomial out(f.field_, f.level_);
    if (f.is_zero() || g.is_zero()) return out;
    const Field& fd = *f.field_;
    const Level lv = f.level_;
    // row-wise accumulation through the bulk kernel, shorter factor outside
    const Polynomial& a = f.coeffs_.size() <= g.coeffs_.size() ? f : g;
    const Polynomial& b = f.coeffs_.size() <= g.coeffs_.size() ? g : f;
    out.coeffs_.assign(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != 0)
            fd.addmul_codes(lv, out.coeffs_.data() + i, b.coeffs_.data(), b.coeffs_.size(),
                            a.coeffs_[i]);
    out.normalize();
    return out;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.level_ == g.level_ && f.field_->same_field(*g.field_) && f.coeffs_ == g.coeffs_;
}

int Polynomial::compare(const Polynomial& f, const Polynomial& g) {
    f.require_same_context(g);
    if (f.coeffs_.size() != g.coeffs_.size())
        return f.coeffs_.size() < g.coeffs_.size() ? -1 : 1;
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i)
        if (f.coeffs_[i] != g.coeffs_[i]) return f.coeffs_[i] < g.coeffs_[i] ? -1 : 1;
    return 0;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
    f.require_same_context(g);
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    const Field& fd = *f.field_;
    const Level lv = f.level_;
    Polynomial quot(f.field_, lv);
    if (f.coeffs_.size() < g.coeffs_.size()) return {quot, f};

    const std::uint64_t lead_inv = fd.inv_code(lv, g.coeffs_.back());
    std::vector<std::uint64_t> rem = f.coeffs_;
    quot.coeffs_.assign(f.coeffs_.size() - g.coeffs_.size() + 1, 0);
    for (std::size_t i = rem.size(); i-- >= g.coeffs_.size();) {
        const std::uint64_t c = fd.mul_code(lv, rem[i], lead_inv);
        if (c != 0) {
            const std::size_t shift = i - (g.coeffs_.size() - 1);
            quot.coeffs_[shift] = c;
            fd.addmul_codes(lv, rem.data() + shift, g.coeffs_.data(), g.coeffs_.size(),
                            fd.neg_code(lv, c));
        }
    }
    Polynomial rpoly(f.field_, lv);
    rpoly.coeffs_ = std::move(rem);
    rpoly.normalize();
    quot.normalize();
    return {quot, rpoly};
}

Polynomial gcd(Polynomial f, Polynomial g) {
    f.require_same_context(g);
    if (f.is_zero() && g.is_zero()) throw UndefinedGcd("gcd(0, 0) is undefined");
    while (!g.is_zero()) {
        Polynomial r = divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Polynomial::require_same_context(const Polynomial& other) const {
    if (level_ != other.level_ || !field_->same_field(*other.field_))
        throw ContextMismatch("polynomials live in different contexts");
}

}  // namespace trisparse
