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

#include "trisparse/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "trisparse/intutil.hpp"

namespace trisparse {

namespace {

// key: (characteristic, modulus encoding, index); the modulus encoding
// determines (r, k, h) uniquely, so structurally equal fields share entries
using CacheKey = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

std::uint64_t modulus_encoding(const Field& f) {
    std::uint64_t code = 0;
    const auto& m = f.modulus();
    for (std::size_t i = m.size(); i-- > 0;) code = code * f.characteristic() + m[i];
    return code;
}

std::mutex cache_mutex;
std::map<CacheKey, Polynomial>& cache() {
    static std::map<CacheKey, Polynomial> instance;
    return instance;
}

}  // namespace

Polynomial cyclotomic_poly(const FieldPtr& field, std::uint64_t d) {
    if (d == 0) throw Error("cyclotomic index must be >= 1");
    if (d % field->characteristic() == 0)
        throw CharacteristicDividesIndex("cyclotomic index divisible by the characteristic");

    const std::uint64_t mod_enc = modulus_encoding(*field);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache().find({field->characteristic(), mod_enc, d});
        if (it != cache().end()) return it->second;
    }

    // fill bottom-up over the divisors so each exact division sees cached
    // lower indices
    Polynomial result(field);
    for (const std::uint64_t e : divisors(d)) {
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            auto it = cache().find({field->characteristic(), mod_enc, e});
            if (it != cache().end()) {
                if (e == d) result = it->second;
                continue;
            }
        }
        Polynomial num = Polynomial::x_pow_minus_one(field, e);
        for (const std::uint64_t e2 : divisors(e)) {
            if (e2 == e) continue;
            Polynomial lower(field);
            {
                std::lock_guard<std::mutex> lock(cache_mutex);
                lower = cache().at({field->characteristic(), mod_enc, e2});
            }
            auto [quot, rem] = divmod(num, lower);
            if (!rem.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
            num = std::move(quot);
        }
        {
            std::lock_guard<std::mutex> lock(cache_mutex);
            cache().emplace(CacheKey{field->characteristic(), mod_enc, e}, num);
        }
        if (e == d) result = std::move(num);
    }
    return result;
}

bool cyclotomic_inflation_check(const FieldPtr& field, std::uint64_t m, std::uint64_t p,
                                std::uint32_t e) {
    if (m == 0 || e == 0) throw Error("inflation check needs m >= 1 and e >= 1");
    if (!is_prime(p)) throw Error("inflation check needs a prime p");
    const Polynomial lhs = cyclotomic_poly(field, m * checked_pow(p, e));
    const Polynomial rhs = cyclotomic_poly(field, m * p).inflate(checked_pow(p, e - 1));
    return lhs == rhs;
}

}  // namespace trisparse
