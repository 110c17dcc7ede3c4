// Copyright 2026 The qlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlogic/error.hpp"

namespace qlogic {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "dimension mismatch";
        case ErrorCode::NotNormalized: return "not normalized";
        case ErrorCode::IndexOutOfRange: return "index out of range";
        case ErrorCode::NoMatchingEigenvalue: return "no matching eigenvalue";
        case ErrorCode::MixedBases: return "mixed bases";
        case ErrorCode::OverlappingStatements: return "overlapping statements";
        case ErrorCode::NonCommuting: return "noncommuting observables";
        case ErrorCode::ImpossibleOutcome: return "impossible outcome";
        case ErrorCode::UnknownStage: return "unknown stage";
        case ErrorCode::InvalidArgument: return "invalid argument";
        case ErrorCode::Syntax: return "syntax error";
        case ErrorCode::UnknownScenario: return "unknown scenario";
        case ErrorCode::Io: return "i/o error";
    }
    return "unknown error";
}

}  // namespace qlogic
