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

#ifndef TRISPARSE_FIELD_HPP
#define TRISPARSE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trisparse/errors.hpp"

namespace trisparse {

/// Which algebra an element lives in: the field F_q itself (base) or its
/// quadratic extension F_{q^2} (tower).  The tower exists so that roots of
/// unity whose order divides q^2 - 1 but not q - 1 are reachable without
/// rebuilding a larger field.
enum class Level : std::uint8_t { base = 0, tower = 1 };

/// An element of F_q or F_{q^2}, stored as the canonical encoding
/// sum_i c_i r^i of its coefficient vector (base-r digits, low to high;
/// length k at base level, 2k at tower level).  The encoding is a bijection
/// onto [0, q) resp. [0, q^2), and integer comparison of codes is the
/// canonical element ordering used everywhere (root searches, default
/// modulus selection, factor ordering).
struct Element {
    Level level = Level::base;
    std::uint64_t code = 0;

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable description of F_q = F_r[Y]/(h) with r prime and h monic
/// irreducible of degree k, plus (for odd q) the quadratic tower
/// F_{q^2} = F_q[B]/(B^2 - c) where c is the least non-square of F_q in
/// encoding order.
///
/// Constructed via Field::make and shared by pointer; every method is const
/// and pure, so a Field may be used concurrently without synchronization.
/// Small extension fields transparently use lookup tables; prime fields use
/// direct modular arithmetic; everything else falls back to digit-vector
/// arithmetic.  The represented results are identical across paths.
class Field {
public:
    /// Builds F_{r^k}.  When no modulus is given, the monic irreducible of
    /// degree k over F_r with the smallest coefficient encoding is selected
    /// (a deterministic choice: two calls yield structurally equal fields).
    /// A supplied modulus must hold k+1 digits in [0, r), low to high, be
    /// monic, and be irreducible over F_r.
    static FieldPtr make(std::uint64_t characteristic, std::uint32_t degree,
                         std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

    std::uint64_t characteristic() const noexcept { return r_; }
    std::uint32_t extension_degree() const noexcept { return k_; }
    /// q = r^k.
    std::uint64_t size() const noexcept { return q_; }
    bool odd_characteristic() const noexcept { return (r_ & 1) == 1; }
    /// k+1 digits, low to high, monic.
    const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

    /// The non-square c defining the tower; odd q only.
    Element tower_nonsquare() const;

    std::uint64_t level_size(Level lv) const noexcept { return lv == Level::base ? q_ : q_ * q_; }
    std::uint64_t group_order(Level lv) const noexcept { return level_size(lv) - 1; }

    /// Structural equality: same characteristic, degree and modulus.  The
    /// tower non-square is derived deterministically, so it needs no check.
    bool same_field(const Field& other) const noexcept;

    // --- element construction and inspection -------------------------------

    Element zero(Level lv = Level::base) const noexcept { return {lv, 0}; }
    Element one(Level lv = Level::base) const noexcept { return {lv, 1}; }
    Element from_code(std::uint64_t code, Level lv = Level::base) const;
    /// Scalar embedding of an integer (reduced mod r, negatives allowed).
    Element from_int(std::int64_t value, Level lv = Level::base) const noexcept;
    Element from_digits(const std::vector<std::uint64_t>& digits, Level lv = Level::base) const;
    /// Base-r digits, low to high; length k (base) or 2k (tower).
    std::vector<std::uint64_t> digits(const Element& x) const;
    /// The residue of Y, i.e. the adjoined root of the modulus (rendered "a").
    Element gen() const noexcept { return {Level::base, k_ >= 2 ? r_ : 0}; }
    /// The tower generator B with B^2 = tower_nonsquare() (rendered "b").
    Element tower_gen() const;

    Element embed(const Element& x) const;
    /// True when a tower element has zero B-coordinate (base elements: always).
    bool in_base(const Element& x) const noexcept;
    /// Inverse of embed; requires in_base(x).
    Element project(const Element& x) const;

    // --- arithmetic (operands must share a level) --------------------------

    Element add(const Element& x, const Element& y) const;
    Element sub(const Element& x, const Element& y) const;
    Element mul(const Element& x, const Element& y) const;
    Element div(const Element& x, const Element& y) const;
    Element neg(const Element& x) const;
    Element inv(const Element& x) const;
    /// x^e with 0^0 = 1.
    Element pow(const Element& x, std::uint64_t e) const;

    /// Least t >= 1 with x^t = 1, computed via the factored group order.
    std::uint64_t order(const Element& x) const;

    /// Deterministic primitive d-th root of unity at the given level: scans
    /// elements g in encoding order and returns the first g^(N/d) of exact
    /// order d, N being the group order.  Requires d | N.
    Element root_of_unity(Level lv, std::uint64_t d) const;

    /// Text form "c1*a+c0" style, e.g. "2*a+1"; tower parts append "*b".
    std::string to_string(const Element& x) const;

    // --- encoding-level kernels --------------------------------------------
    // The representation the Element API wraps.  The polynomial layer works
    // on raw codes to keep inner loops free of per-coefficient objects.

    std::uint64_t add_code(Level lv, std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub_code(Level lv, std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul_code(Level lv, std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg_code(Level lv, std::uint64_t a) const;
    std::uint64_t inv_code(Level lv, std::uint64_t a) const;
    std::uint64_t pow_code(Level lv, std::uint64_t a, std::uint64_t e) const;

    /// dst[i] <- dst[i] + s * src[i] for i < len, on raw codes.  The bulk
    /// kernel behind polynomial multiplication and reduction: it resolves
    /// the representation (tables / prime field / generic) once per call
    /// instead of once per coefficient.
    void addmul_codes(Level lv, std::uint64_t* dst, const std::uint64_t* src, std::size_t len,
                      std::uint64_t s) const;

private:
    Field() = default;

    std::uint64_t base_add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t base_sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t base_mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t base_neg(std::uint64_t a) const;
    std::uint64_t base_inv(std::uint64_t a) const;
    std::uint64_t base_pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t generic_mul(std::uint64_t a, std::uint64_t b) const;

    std::vector<std::uint64_t> base_digits(std::uint64_t code) const;
    std::uint64_t compose(const std::vector<std::uint64_t>& digits) const;
    void require_tower() const;
    std::string base_to_string(std::uint64_t code) const;

    std::uint64_t r_ = 0;
    std::uint32_t k_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> modulus_;
    std::uint64_t nonsquare_ = 0;
    bool has_tower_ = false;

    bool tables_ = false;
    std::vector<std::uint32_t> add_tab_;
    std::vector<std::uint32_t> mul_tab_;
    std::vector<std::uint32_t> inv_tab_;

    // factored group orders, prepared once so Field::order is cheap
    std::vector<std::pair<std::uint64_t, std::uint32_t>> base_order_factors_;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> tower_order_factors_;
};

}  // namespace trisparse

#endif
