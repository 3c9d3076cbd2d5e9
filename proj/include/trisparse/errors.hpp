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

#ifndef TRISPARSE_ERRORS_HPP
#define TRISPARSE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trisparse {

/// Base class of every domain error thrown by this library.  Anything else
/// escaping (std::logic_error in particular) indicates an internal bug, not
/// a rejected input.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TRISPARSE_ERROR_TYPE(Name)                                            \
    struct Name : Error {                                                     \
        explicit Name(const std::string& msg) : Error(msg) {}                 \
    }

TRISPARSE_ERROR_TYPE(InvalidCharacteristic);
TRISPARSE_ERROR_TYPE(InvalidModulus);
TRISPARSE_ERROR_TYPE(DivisionByZero);
TRISPARSE_ERROR_TYPE(LevelMismatch);
TRISPARSE_ERROR_TYPE(ZeroHasNoOrder);
TRISPARSE_ERROR_TYPE(NoSuchRoot);
TRISPARSE_ERROR_TYPE(ContextMismatch);
TRISPARSE_ERROR_TYPE(UndefinedGcd);
TRISPARSE_ERROR_TYPE(ZeroPolynomial);
TRISPARSE_ERROR_TYPE(NotSquarefree);
TRISPARSE_ERROR_TYPE(NotEqualDegree);
TRISPARSE_ERROR_TYPE(EvenCharacteristicUnsupported);
TRISPARSE_ERROR_TYPE(CharacteristicDividesIndex);
TRISPARSE_ERROR_TYPE(LtePreconditionFailed);
TRISPARSE_ERROR_TYPE(NotCoprime);
TRISPARSE_ERROR_TYPE(NotInSparseFamily);
TRISPARSE_ERROR_TYPE(NotIrreducible);
TRISPARSE_ERROR_TYPE(NoWitnessExists);

#undef TRISPARSE_ERROR_TYPE

/// Thrown when the field characteristic r divides an input n that a
/// theorem-level operation requires to be coprime to r.  Carries the
/// decomposition n = coprime_part * r^valuation for diagnostics.
struct CharacteristicDividesN : Error {
    std::uint64_t characteristic;
    std::uint32_t valuation;
    std::uint64_t coprime_part;

    CharacteristicDividesN(std::uint64_t r, std::uint32_t v, std::uint64_t m)
        : Error("characteristic " + std::to_string(r) + " divides n; coprime part " +
                std::to_string(m)),
          characteristic(r),
          valuation(v),
          coprime_part(m) {}
};

}  // namespace trisparse

#endif
