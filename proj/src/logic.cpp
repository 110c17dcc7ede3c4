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

#include "qlogic/logic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

ComplexMatrix projector_for(const ObservableBasis& basis, const std::set<std::size_t>& indices) {
    ComplexMatrix p(basis.dim(), basis.dim());
    for (std::size_t l : indices) {
        const auto& k = basis.eigenvector(l);
        p = p + outer(k, k);
    }
    return p;
}

bool same_basis(const Statement& a, const Statement& b) {
    return a.basis_ref() == b.basis_ref() || a.basis().same_as(b.basis());
}

void require_dim(const Statement& s, const StateVector& psi) {
    if (s.basis().dim() != psi.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "statement dimension " + std::to_string(s.basis().dim()) + " vs state dimension " +
                        std::to_string(psi.dim()));
    }
}

}  // namespace

Statement::Statement(BasisRef basis, std::set<std::size_t> indices)
    : basis_(std::move(basis)),
      indices_(std::move(indices)),
      projector_(basis_ ? basis_->dim() : 1, basis_ ? basis_->dim() : 1) {
    if (!basis_) throw Error(ErrorCode::InvalidArgument, "statement needs a basis");
    for (std::size_t l : indices_) {
        if (l >= basis_->dim()) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "eigen-index " + std::to_string(l) + " >= dim " + std::to_string(basis_->dim()));
        }
    }
    projector_ = projector_for(*basis_, indices_);
}

const char* to_string(Truth t) {
    switch (t) {
        case Truth::True: return "true";
        case Truth::False: return "false";
        case Truth::Indeterminate: return "indeterminate";
    }
    return "?";
}

Statement elementary(const BasisRef& basis, std::size_t l) { return Statement(basis, {l}); }

Statement by_eigenvalue(const BasisRef& basis, double k) {
    for (const auto& g : basis->groups()) {
        if (std::abs(g.eigenvalue - k) <= kTolerance) {
            return Statement(basis, std::set<std::size_t>(g.indices.begin(), g.indices.end()));
        }
    }
    throw Error(ErrorCode::NoMatchingEigenvalue, "no eigenvalue equals " + std::to_string(k));
}

Statement disjunction(std::span<const Statement> parts) {
    if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "disjunction of nothing");
    std::set<std::size_t> all;
    for (const auto& s : parts) {
        if (!same_basis(s, parts.front())) {
            throw Error(ErrorCode::MixedBases, "disjunction constituents use different bases");
        }
        for (std::size_t l : s.indices()) {
            if (!all.insert(l).second) {
                throw Error(ErrorCode::OverlappingStatements,
                            "constituents are not mutually exclusive (index " + std::to_string(l) + ")");
            }
        }
    }
    Statement out(parts.front().basis_ref(), std::move(all));
    if (!is_idempotent(out.projector())) {
        throw Error(ErrorCode::InvalidArgument, "disjunction projector is not idempotent");
    }
    return out;
}

Statement negation(const Statement& s) {
    std::set<std::size_t> rest;
    for (std::size_t l = 0; l < s.basis().dim(); ++l) {
        if (!s.indices().contains(l)) rest.insert(l);
    }
    return Statement(s.basis_ref(), std::move(rest));
}

Statement conjunction(const Statement& a, const Statement& b) {
    if (same_basis(a, b)) {
        std::set<std::size_t> both;
        std::set_intersection(a.indices().begin(), a.indices().end(), b.indices().begin(),
                              b.indices().end(), std::inserter(both, both.end()));
        return Statement(a.basis_ref(), std::move(both));
    }
    if (a.basis().dim() != b.basis().dim()) {
        throw Error(ErrorCode::DimensionMismatch, "conjunction of statements on different spaces");
    }
    if (!commutes(a.basis().observable(), b.basis().observable())) {
        throw Error(ErrorCode::NonCommuting, "conjunction across noncommuting observables");
    }
    const ComplexMatrix product = a.projector() * b.projector();
    std::set<std::size_t> kept;
    for (std::size_t l : a.indices()) {
        const auto& k = a.basis().eigenvector(l);
        if (std::abs(inner(k.amplitudes(), apply(b.projector(), k)) - 1.0) <= kTolerance) kept.insert(l);
    }
    Statement out(a.basis_ref(), std::move(kept));
    if (max_abs_diff(out.projector(), product) > kTolerance) {
        throw Error(ErrorCode::MixedBases,
                    "conjunction is not expressible in the first statement's eigenbasis");
    }
    return out;
}

Statement tautology(const BasisRef& basis) {
    std::set<std::size_t> all;
    for (std::size_t l = 0; l < basis->dim(); ++l) all.insert(l);
    return Statement(basis, std::move(all));
}

Statement support_statement(const StateVector& psi, const BasisRef& basis, double eps) {
    if (psi.dim() != basis->dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "state dimension " + std::to_string(psi.dim()) + " vs basis dimension " +
                        std::to_string(basis->dim()));
    }
    if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "support threshold must be positive");
    std::set<std::size_t> present;
    for (std::size_t l = 0; l < basis->dim(); ++l) {
        if (std::abs(inner(basis->eigenvector(l), psi)) > eps) present.insert(l);
    }
    return Statement(basis, std::move(present));
}

TruthValue truth_value(const Statement& s, const StateVector& psi) {
    require_dim(s, psi);
    const double e = inner(psi.amplitudes(), apply(s.projector(), psi)).real();
    const double expectation = std::clamp(e, 0.0, 1.0);
    Truth t = Truth::Indeterminate;
    if (expectation > 1.0 - kTruthBand) {
        t = Truth::True;
    } else if (expectation < kTruthBand) {
        t = Truth::False;
    }
    return {t, expectation};
}

bool theorem2_witness(const StateVector& psi, const BasisRef& basis_k, double eps) {
    const Statement support = support_statement(psi, basis_k, eps);
    if (support.indices().size() <= 1) return false;
    return std::all_of(support.indices().begin(), support.indices().end(), [&](std::size_t l) {
        return truth_value(elementary(basis_k, l), psi).truth == Truth::Indeterminate;
    });
}

}  // namespace qlogic
