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

#ifndef TRISPARSE_SPARSITY_HPP
#define TRISPARSE_SPARSITY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "trisparse/factorize.hpp"
#include "trisparse/poly.hpp"

namespace trisparse {

// X^n - 1 over F_q (odd q, gcd(n, r) = 1) splits into irreducible factors
// of weight at most 3 exactly when every prime factor of n divides q^2 - 1.
// This module decides that criterion, produces the structured factorization
// it promises (binomials and trinomials obtained by inflating root-of-unity
// factors), and produces an explicit heavy factor when the criterion fails.

/// Result of the closed-form sparsity decision for X^n - 1 over F_q.
struct SparsityReport {
    std::uint64_t q = 0;
    std::uint64_t n = 0;
    bool sparse = false;
    /// primes of q^2 - 1 with their exponents
    std::map<std::uint64_t, std::uint32_t> base_primes;
    /// smallest prime of n outside base_primes, when not sparse
    std::optional<std::uint64_t> offending_prime;
    /// valuation of n at the characteristic (always 0 for accepted inputs;
    /// rejected inputs carry it in CharacteristicDividesN instead)
    std::uint32_t char_valuation = 0;
};

/// Factorization plan for one divisor d of n: d splits as capped * inflation
/// where capped = prod p^min(v_p(d), v_p(q^2-1)) collects as much of d as
/// the root-of-unity stage can absorb, and the rest becomes an inflation
/// exponent.  root_degree = ord_capped(q), always 1 or 2 in the sparse
/// family, and ord_d(q) = root_degree * inflation.
struct DivisorPlan {
    std::uint64_t divisor = 0;
    std::uint64_t capped = 0;
    std::uint32_t root_degree = 0;
    std::uint64_t inflation = 0;
};

/// Prime factorization of q^2 - 1 for odd prime-power q.  Note 2 always
/// belongs to it.
std::map<std::uint64_t, std::uint32_t> prime_base(std::uint64_t q);

/// The closed-form decision; rejects n divisible by the characteristic.
SparsityReport is_sparse_theorem(const FieldPtr& field, std::uint64_t n);

/// Independent decision: factor X^n - 1 outright with the generic
/// factorizer and inspect factor weights.
bool is_sparse_oracle(const FieldPtr& field, std::uint64_t n, std::uint64_t seed = 0);

/// Plan for a divisor whose primes all divide q^2 - 1.
DivisorPlan plan_divisor(const FieldPtr& field, std::uint64_t d);

/// The cyclotomic slice of index d of the structured factorization: linear
/// or quadratic root-of-unity factors inflated by the plan's exponent.
/// Every emitted factor is monic irreducible of weight <= 3.
Factorization factor_cyclotomic_structured(const FieldPtr& field, std::uint64_t d);

/// Structured factorization of X^n - 1 for n in the sparse family: the
/// union of the cyclotomic slices over all divisors of n.
Factorization factor_xn1_structured(const FieldPtr& field, std::uint64_t n);

/// Divisibility test: X^m - a divides X^n - 1 exactly when m * ord(a)
/// divides n.  a must be a nonzero base-level element.
bool binomial_divides(const FieldPtr& field, std::uint64_t m, const Element& a,
                      std::uint64_t n);

/// Characteristic polynomial of (the multiplication action of) the t-th
/// power of a root of the monic irreducible f: with f minimal for xi, the
/// returned degree-deg(f) polynomial is min_poly(xi^t) raised to the
/// cofactor power.  Satisfies g(X^t) = +-prod_j f(w_j X) over the t-th
/// roots of unity w_j.
Polynomial char_poly_power(const Polynomial& f, std::uint64_t t);

/// For an odd prime p not dividing q^2 - 1: a monic irreducible factor of
/// the p-th cyclotomic polynomial with weight >= 4, witnessing that X^p - 1
/// is not 3-sparse.  Raises NoWitnessExists when p | q^2 - 1.
Polynomial witness_nonsparse(const FieldPtr& field, std::uint64_t p, std::uint64_t seed = 0);

/// Ascending n <= bound with every prime factor dividing q^2 - 1 (all such
/// n are automatically coprime to the characteristic).
std::vector<std::uint64_t> enumerate_sparse(const FieldPtr& field, std::uint64_t bound);

}  // namespace trisparse

#endif
