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

#include "trisparse/json_io.hpp"

namespace trisparse {

nlohmann::json element_to_json(const Field& field, const Element& x) {
    return nlohmann::json(field.digits(x));
}

nlohmann::json poly_to_json(const Polynomial& f) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < f.codes().size(); ++i)
        out.push_back(element_to_json(*f.field(), f.coeff(i)));
    return out;
}

Polynomial poly_from_json(const FieldPtr& field, const nlohmann::json& j, Level level) {
    if (!j.is_array()) throw Error("polynomial JSON must be an array");
    std::vector<std::uint64_t> codes;
    codes.reserve(j.size());
    for (const auto& cj : j) {
        if (!cj.is_array()) throw Error("element JSON must be an array of digits");
        const std::vector<std::uint64_t> digits = cj.get<std::vector<std::uint64_t>>();
        codes.push_back(field->from_digits(digits, level).code);
    }
    return Polynomial::from_codes(field, std::move(codes), level);
}

nlohmann::json factor_entries_to_json(const Factorization& fac) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& entry : fac.entries()) {
        nlohmann::json e;
        e["coeffs"] = poly_to_json(entry.poly);
        e["multiplicity"] = entry.multiplicity;
        e["weight"] = entry.poly.weight();
        e["degree"] = entry.poly.degree();
        out.push_back(std::move(e));
    }
    return out;
}

nlohmann::json field_header_json(const Field& field) {
    nlohmann::json out;
    out["q"] = field.size();
    out["r"] = field.characteristic();
    out["k"] = field.extension_degree();
    out["modulus"] = field.modulus();
    return out;
}

}  // namespace trisparse
