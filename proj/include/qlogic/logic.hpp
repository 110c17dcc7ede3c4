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

// Propositions "K is one of {k_l : l in S}" represented by their truth
// operators, the projectors sum_{l in S} |k_l><k_l|.

#pragma once

#include <memory>
#include <set>
#include <span>
#include <vector>

#include "qlogic/hilbert.hpp"

namespace qlogic {

/// Amplitude magnitude above which an eigenvector counts as present in a
/// superposition.
inline constexpr double kSupportEpsilon = 1e-9;

/// Width of the True/False bands around expectation 1 and 0.
inline constexpr double kTruthBand = 1e-9;

using BasisRef = std::shared_ptr<const ObservableBasis>;

inline BasisRef share(ObservableBasis basis) {
    return std::make_shared<const ObservableBasis>(std::move(basis));
}

class Statement {
public:
    /// Projector onto span{|k_l> : l in indices}. An empty index set is the
    /// explicit contradiction with zero projector.
    Statement(BasisRef basis, std::set<std::size_t> indices);

    const ObservableBasis& basis() const noexcept { return *basis_; }
    const BasisRef& basis_ref() const noexcept { return basis_; }
    const std::set<std::size_t>& indices() const noexcept { return indices_; }
    const ComplexMatrix& projector() const noexcept { return projector_; }

    bool is_contradiction() const noexcept { return indices_.empty(); }
    bool is_tautology() const noexcept { return indices_.size() == basis_->dim(); }

private:
    BasisRef basis_;
    std::set<std::size_t> indices_;
    ComplexMatrix projector_;
};

enum class Truth { True, False, Indeterminate };

const char* to_string(Truth t);

struct TruthValue {
    Truth truth;
    double expectation;
};

/// "K = k_l".
Statement elementary(const BasisRef& basis, std::size_t l);

/// "K = k", pooling every index whose eigenvalue matches k within kTolerance.
Statement by_eigenvalue(const BasisRef& basis, double k);

/// Disjunction of pairwise exclusive statements on one basis.
Statement disjunction(std::span<const Statement> parts);

Statement negation(const Statement& s);

/// Conjunction. On one basis this is index-set intersection. Statements on
/// different bases are combined only when the two observables commute and the
/// product of projectors is diagonal in the first statement's basis.
Statement conjunction(const Statement& a, const Statement& b);

/// The disjunction of every elementary statement of the basis.
Statement tautology(const BasisRef& basis);

/// Disjunction of the elementary statements whose eigenvectors appear in psi
/// with |<k_l|psi>| > eps.
Statement support_statement(const StateVector& psi, const BasisRef& basis,
                            double eps = kSupportEpsilon);

TruthValue truth_value(const Statement& s, const StateVector& psi);

/// True iff psi is spread over more than one K-eigenvector and every
/// elementary statement about those eigenvectors is Indeterminate on psi.
/// Elementary statements outside the support are False and are not consulted.
bool theorem2_witness(const StateVector& psi, const BasisRef& basis_k,
                      double eps = kSupportEpsilon);

}  // namespace qlogic
