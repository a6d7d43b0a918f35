// Copyright 2026 The g7hecke Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace g7hecke {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define G7HECKE_DEFINE_ERROR(Name)              \
    class Name : public Error {                 \
    public:                                     \
        using Error::Error;                     \
    }

G7HECKE_DEFINE_ERROR(SingularMatrix);
G7HECKE_DEFINE_ERROR(DivisionByZero);
G7HECKE_DEFINE_ERROR(InconsistentRootImage);
G7HECKE_DEFINE_ERROR(DenominatorVanishes);
G7HECKE_DEFINE_ERROR(InvalidParams);
G7HECKE_DEFINE_ERROR(DegenerateRegime);
G7HECKE_DEFINE_ERROR(ConditionNotSatisfied);
G7HECKE_DEFINE_ERROR(ContradictoryCase);
G7HECKE_DEFINE_ERROR(ParseError);

#undef G7HECKE_DEFINE_ERROR

}  // namespace g7hecke
