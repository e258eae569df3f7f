/*
   Copyright 2026 mdsconv contributors

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

#ifndef MDSCONV_ERRORS_HPP
#define MDSCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mdsconv {

struct Error : std::runtime_error {
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind(std::move(kind)) {}
    std::string kind;
};

#define MDSCONV_ERROR_KIND(Name)                                    \
    struct Name : Error {                                           \
        explicit Name(const std::string& msg) : Error(#Name, msg) {} \
    }

MDSCONV_ERROR_KIND(NonPrimeCharacteristic);
MDSCONV_ERROR_KIND(SizeLimitExceeded);
MDSCONV_ERROR_KIND(DivisionByZero);
MDSCONV_ERROR_KIND(FieldMismatch);
MDSCONV_ERROR_KIND(NoSuchRoot);
MDSCONV_ERROR_KIND(NotCoprime);
MDSCONV_ERROR_KIND(CoefficientNotInBaseField);
MDSCONV_ERROR_KIND(RankDeficient);
MDSCONV_ERROR_KIND(NotBasic);
MDSCONV_ERROR_KIND(RankConditionViolated);
MDSCONV_ERROR_KIND(NotReducedBasic);
MDSCONV_ERROR_KIND(FieldNotQuadratic);
MDSCONV_ERROR_KIND(UncertifiedDistance);
MDSCONV_ERROR_KIND(BudgetExceeded);
MDSCONV_ERROR_KIND(CatastrophicEncoder);
MDSCONV_ERROR_KIND(InvalidCheckMatrix);
MDSCONV_ERROR_KIND(NotCosetClosed);
MDSCONV_ERROR_KIND(NotHermitianSelfOrthogonal);
MDSCONV_ERROR_KIND(SymplecticCheckFailed);
MDSCONV_ERROR_KIND(ParityViolation);
MDSCONV_ERROR_KIND(IndexOutOfRange);
MDSCONV_ERROR_KIND(ParityMismatch);
MDSCONV_ERROR_KIND(InternalError);

#undef MDSCONV_ERROR_KIND

}  // namespace mdsconv

#endif
