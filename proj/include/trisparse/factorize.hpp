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

#ifndef TRISPARSE_FACTORIZE_HPP
#define TRISPARSE_FACTORIZE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "trisparse/poly.hpp"

namespace trisparse {

struct FactorEntry {
    Polynomial poly;
    std::uint64_t multiplicity;
};

/// unit * prod(poly^multiplicity) with monic factors held in canonical
/// order (degree, then coefficient encodings from the constant term up).
/// Equal factors inserted twice merge by adding multiplicities, so two
/// Factorizations of the same polynomial compare equal with ==.
class Factorization {
public:
    Factorization(FieldPtr field, Level level, Element unit);

    const FieldPtr& field() const noexcept { return field_; }
    Level level() const noexcept { return level_; }
    const Element& unit() const noexcept { return unit_; }
    const std::vector<FactorEntry>& entries() const noexcept { return entries_; }

    void insert(Polynomial factor, std::uint64_t multiplicity);
    /// multiply everything back together
    Polynomial expand() const;
    /// largest factor weight; 0 when there are no factors
    std::size_t max_weight() const noexcept;

    friend bool operator==(const Factorization& a, const Factorization& b);

private:
    FieldPtr field_;
    Level level_;
    Element unit_;
    std::vector<FactorEntry> entries_;
};

/// Multiplicity-grouped squarefree decomposition of a nonzero polynomial
/// (characteristic-aware: multiplicities divisible by r are recovered by
/// taking r-th roots of f when f' vanishes).  Factors are monic, pairwise
/// coprime and squarefree; the leading unit is dropped.
std::vector<std::pair<Polynomial, std::uint64_t>> squarefree_decompose(const Polynomial& f);

/// Splits a squarefree monic nonconstant f into products of irreducibles of
/// equal degree: returns (d, product) pairs with ascending d, omitting
/// trivial degrees.
std::vector<std::pair<std::uint64_t, Polynomial>> distinct_degree(const Polynomial& f);

/// Splits a monic squarefree product of irreducibles of common degree d
/// into those irreducibles, sorted canonically.  Randomized with a seeded
/// generator: identical (f, d, seed) give identical output.  Odd field
/// sizes only.
std::vector<Polynomial> equal_degree_split(const Polynomial& f, std::uint64_t d,
                                           std::uint64_t seed);

/// Full factorization of a nonzero polynomial over an odd-size field,
/// deterministic for a fixed seed.
Factorization factor(const Polynomial& f, std::uint64_t seed = 0);

bool is_irreducible(const Polynomial& f);

}  // namespace trisparse

#endif
