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

#ifndef TRISPARSE_POLY_HPP
#define TRISPARSE_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trisparse/field.hpp"

namespace trisparse {

/// Dense univariate polynomial over a Field at a fixed level.  Coefficients
/// are element codes, low to high, with no trailing zeros (the zero
/// polynomial stores an empty vector and reports degree -1).  Operations on
/// two polynomials require structurally equal fields and equal levels.
class Polynomial {
public:
    /// the zero polynomial
    explicit Polynomial(FieldPtr field, Level level = Level::base);

    static Polynomial from_codes(FieldPtr field, std::vector<std::uint64_t> coeffs,
                                 Level level = Level::base);
    /// convenience: integer coefficients, low to high, reduced mod r
    static Polynomial from_ints(FieldPtr field, std::initializer_list<std::int64_t> coeffs,
                                Level level = Level::base);
    static Polynomial constant(FieldPtr field, const Element& value);
    static Polynomial monomial(FieldPtr field, std::uint64_t degree, const Element& coeff);
    /// X^n - 1
    static Polynomial x_pow_minus_one(FieldPtr field, std::uint64_t n,
                                      Level level = Level::base);

    const FieldPtr& field() const noexcept { return field_; }
    Level level() const noexcept { return level_; }
    const std::vector<std::uint64_t>& codes() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    /// -1 for the zero polynomial
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    /// number of nonzero coefficients
    std::size_t weight() const noexcept;
    Element coeff(std::uint64_t i) const noexcept;
    std::uint64_t coeff_code(std::uint64_t i) const noexcept;
    Element leading() const noexcept;
    bool is_monic() const noexcept;

    Polynomial monic() const;
    Polynomial derivative() const;
    /// f(X^stretch); stretch >= 1.  Preserves the weight.
    Polynomial inflate(std::uint64_t stretch) const;
    Polynomial lift_to_tower() const;
    /// All coefficients must lie in the base field.
    Polynomial project_to_base() const;
    /// Horner evaluation; a base polynomial may be evaluated at a tower
    /// point (coefficients are embedded on the fly) and vice versa.
    Element eval(const Element& point) const;

    /// Descending powers, e.g. "X^4 + 2*X + 1"; composite coefficients are
    /// parenthesized: "X^2 + (a+2)*X + 1".
    std::string to_string(std::string_view var = "X") const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

    /// true only for structurally equal contexts with equal coefficients
    friend bool operator==(const Polynomial& f, const Polynomial& g);

    /// canonical order: by degree, then by coefficient encodings from the
    /// constant term up; requires equal contexts
    static int compare(const Polynomial& f, const Polynomial& g);

    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);
    friend Polynomial gcd(Polynomial f, Polynomial g);

private:
    void normalize();
    void require_same_context(const Polynomial& other) const;

    FieldPtr field_;
    Level level_ = Level::base;
    std::vector<std::uint64_t> coeffs_;
};

/// quotient and remainder; divisor must be nonzero
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);

/// monic gcd; gcd(0, 0) is undefined
Polynomial gcd(Polynomial f, Polynomial g);

}  // namespace trisparse

#endif
