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

#ifndef TRISPARSE_JSON_IO_HPP
#define TRISPARSE_JSON_IO_HPP

#include <json.hpp>

#include "trisparse/factorize.hpp"
#include "trisparse/poly.hpp"

namespace trisparse {

// JSON forms: an element is its digit vector (base-r digits, low to high;
// length k at base level, 2k at tower level); a polynomial is the array of
// its coefficient elements, low to high.

nlohmann::json element_to_json(const Field& field, const Element& x);
nlohmann::json poly_to_json(const Polynomial& f);
Polynomial poly_from_json(const FieldPtr& field, const nlohmann::json& j,
                          Level level = Level::base);

/// array of {"coeffs", "multiplicity", "weight", "degree"} in canonical order
nlohmann::json factor_entries_to_json(const Factorization& fac);

/// shared document header: {"q", "r", "k", "modulus"}
nlohmann::json field_header_json(const Field& field);

}  // namespace trisparse

#endif
