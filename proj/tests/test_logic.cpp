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

#include <gtest/gtest.h>

#include <cmath>

#include "qlogic/error.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace qlogic;
using namespace qlogic::testing;

namespace {

template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected qlogic::Error";
    return ErrorCode::InvalidArgument;
}

double max_diff(const ComplexMatrix& m, const oracle::Dense& d) {
    double worst = 0.0;
    for (std::size_t r = 0; r < d.n; ++r) {
        for (std::size_t c = 0; c < d.n; ++c) worst = std::max(worst, std::abs(m(r, c) - d.at(r, c)));
    }
    return worst;
}

}  // namespace

TEST(Statement, ProjectorMatchesOracle) {
    Rng rng(21);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = random_dim(rng, 1, 8);
        const BasisRef b = share(random_basis(rng, d));
        const auto idx = random_subset(rng, d);
        const Statement s(b, idx);
        EXPECT_LE(max_diff(s.projector(), oracle::projector(vectors_of(*b), idx)), 1e-12);
    }
}

TEST(Statement, EmptyIsContradictionAndFullIsTautology) {
    const BasisRef b = share(computational_basis(3));
    const Statement none(b, {});
    EXPECT_TRUE(none.is_contradiction());
    EXPECT_EQ(max_abs_entry(none.projector()), 0.0);
    const Statement all = tautology(b);
    EXPECT_TRUE(all.is_tautology());
    EXPECT_LE(max_abs_diff(all.projector(), ComplexMatrix::identity(3)), 1e-12);
}

TEST(Statement, IndexOutOfRange) {
    const BasisRef b = share(computational_basis(2));
    EXPECT_EQ(code_of([&] { Statement(b, {2}); }), ErrorCode::IndexOutOfRange);
}

TEST(ByEigenvalue, PoolsDegenerateIndices) {
    const BasisRef b = share(ObservableBasis(
        {StateVector::basis_state(3, 0), StateVector::basis_state(3, 1), StateVector::basis_state(3, 2)},
        {1.0, 0.0, 1.0}));
    EXPECT_EQ(by_eigenvalue(b, 1.0).indices(), (std::set<std::size_t>{0, 2}));
    EXPECT_EQ(code_of([&] { by_eigenvalue(b, 0.5); }), ErrorCode::NoMatchingEigenvalue);
}

TEST(Disjunction, RequiresExclusiveSameBasis) {
    const BasisRef b = share(computational_basis(3));
    const BasisRef other = share(qubit_basis(0.2));
    const std::vector<Statement> overlap{Statement(b, {0, 1}), Statement(b, {1})};
    EXPECT_EQ(code_of([&] { disjunction(overlap); }), ErrorCode::OverlappingStatements);

    const BasisRef b2 = share(computational_basis(2));
    const std::vector<Statement> mixed{elementary(b2, 0), elementary(other, 1)};
    EXPECT_EQ(code_of([&] { disjunction(mixed); }), ErrorCode::MixedBases);

    const std::vector<Statement> ok{elementary(b, 0), elementary(b, 2)};
    EXPECT_EQ(disjunction(ok).indices(), (std::set<std::size_t>{0, 2}));
}

TEST(Disjunction, AcceptsStructurallyEqualBases) {
    const BasisRef a = share(qubit_basis(0.4));
    const BasisRef b = share(qubit_basis(0.4));
    const std::vector<Statement> parts{elementary(a, 0), elementary(b, 1)};
    EXPECT_TRUE(disjunction(parts).is_tautology());
}

TEST(Negation, EqualsDisjunctionOfTheRest) {
    Rng rng(22);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d = random_dim(rng, 2, 8);
        const BasisRef b = share(random_basis(rng, d));
        for (std::size_t l = 0; l < d; ++l) {
            std::vector<Statement> rest;
            for (std::size_t m = 0; m < d; ++m) {
                if (m != l) rest.push_back(elementary(b, m));
            }
            EXPECT_LE(max_abs_diff(negation(elementary(b, l)).projector(), disjunction(rest).projector()), 1e-10);
        }
    }
}

TEST(Negation, ComplementsProjector) {
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = random_dim(rng, 1, 6);
        const BasisRef b = share(random_basis(rng, d));
        const Statement s(b, random_subset(rng, d));
        EXPECT_LE(max_abs_diff(s.projector() + negation(s).projector(), ComplexMatrix::identity(d)), 1e-10);
        EXPECT_EQ(negation(negation(s)).indices(), s.indices());
    }
}

TEST(Conjunction, SameBasisIntersects) {
    const BasisRef b = share(computational_basis(4));
    const Statement c = conjunction(Statement(b, {0, 1, 2}), Statement(b, {1, 2, 3}));
    EXPECT_EQ(c.indices(), (std::set<std::size_t>{1, 2}));
}

TEST(Conjunction, CommutingDifferentBases) {
    // Same eigenvectors, different eigenvalue labels: the observables commute.
    const BasisRef k = share(computational_basis(3));
    const BasisRef l = share(ObservableBasis(
        {StateVector::basis_state(3, 0), StateVector::basis_state(3, 1), StateVector::basis_state(3, 2)},
        {7.0, 7.0, -2.0}));
    const Statement c = conjunction(Statement(k, {0, 2}), by_eigenvalue(l, 7.0));
    EXPECT_EQ(c.indices(), (std::set<std::size_t>{0}));
    EXPECT_LE(max_abs_diff(c.projector(), Statement(k, {0, 2}).projector() * by_eigenvalue(l, 7.0).projector()),
              1e-12);
}

TEST(Conjunction, NoncommutingRejected) {
    const BasisRef k = share(qubit_basis(0.0));
    const BasisRef l = share(qubit_basis(0.5));
    EXPECT_EQ(code_of([&] { conjunction(elementary(k, 0), elementary(l, 0)); }), ErrorCode::NonCommuting);
}

TEST(TruthValue, ThreeBands) {
    const BasisRef b = share(computational_basis(2));
    const StateVector up = StateVector::basis_state(2, 0);
    EXPECT_EQ(truth_value(elementary(b, 0), up).truth, Truth::True);
    EXPECT_EQ(truth_value(elementary(b, 1), up).truth, Truth::False);
    const StateVector plus({std::sqrt(0.5), std::sqrt(0.5)});
    const TruthValue tv = truth_value(elementary(b, 0), plus);
    EXPECT_EQ(tv.truth, Truth::Indeterminate);
    EXPECT_NEAR(tv.expectation, 0.5, 1e-15);
}

TEST(TruthValue, ExpectationMatchesOracle) {
    Rng rng(24);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = random_dim(rng, 1, 8);
        const BasisRef b = share(random_basis(rng, d));
        const StateVector psi = random_state(rng, d);
        const auto idx = random_subset(rng, d);
        const double want = oracle::born(vectors_of(*b), idx, amplitudes_of(psi));
        EXPECT_NEAR(truth_value(Statement(b, idx), psi).expectation, want, 1e-12);
    }
}

TEST(TruthValue, PartitionOfElementaryStatements) {
    // Exactly one of s and not-s is True whenever s is not Indeterminate.
    Rng rng(25);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = random_dim(rng, 1, 6);
        const BasisRef b = share(random_basis(rng, d));
        const StateVector psi = (t % 3 == 0) ? b->eigenvector(t % d) : random_state(rng, d);
        const Statement s(b, random_subset(rng, d));
        const TruthValue a = truth_value(s, psi);
        const TruthValue n = truth_value(negation(s), psi);
        EXPECT_NEAR(a.expectation + n.expectation, 1.0, 1e-10);
        if (a.truth == Truth::True) EXPECT_EQ(n.truth, Truth::False);
        if (a.truth == Truth::False) EXPECT_EQ(n.truth, Truth::True);
        if (a.truth == Truth::Indeterminate) EXPECT_EQ(n.truth, Truth::Indeterminate);
    }
}

TEST(TruthValue, DimensionMismatch) {
    const BasisRef b = share(computational_basis(3));
    EXPECT_EQ(code_of([&] { truth_value(elementary(b, 0), StateVector::basis_state(2, 0)); }),
              ErrorCode::DimensionMismatch);
}

TEST(Support, IdentityMinimalityAndTruth) {
    Rng rng(26);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = random_dim(rng, 1, 8);
        const BasisRef b = share(random_basis(rng, d));
        // Build psi in the K basis with a known support.
        const StateVector coeffs = random_state_with_support(rng, d, random_dim(rng, 1, d));
        ComplexVector psi_v(d);
        std::set<std::size_t> want;
        for (std::size_t l = 0; l < d; ++l) {
            if (std::abs(coeffs[l]) > 0.0) want.insert(l);
            for (std::size_t i = 0; i < d; ++i) psi_v[i] += coeffs[l] * b->eigenvector(l)[i];
        }
        const StateVector psi = normalize(psi_v);
        const Statement s = support_statement(psi, b);
        EXPECT_EQ(s.indices(), want);
        const ComplexVector image = apply(s.projector(), psi);
        for (std::size_t i = 0; i < d; ++i) EXPECT_LE(std::abs(image[i] - psi[i]), 1e-9);
        EXPECT_EQ(truth_value(s, psi).truth, Truth::True);
        for (std::size_t l : want) {
            auto fewer = want;
            fewer.erase(l);
            EXPECT_NE(truth_value(Statement(b, fewer), psi).truth, Truth::True);
        }
    }
}

TEST(Support, RejectsNonPositiveThreshold) {
    const BasisRef b = share(computational_basis(2));
    EXPECT_EQ(code_of([&] { support_statement(StateVector::basis_state(2, 0), b, 0.0); }),
              ErrorCode::InvalidArgument);
}

TEST(Witness, SuperpositionVersusEigenstate) {
    Rng rng(27);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = random_dim(rng, 2, 6);
        const BasisRef b = share(random_basis(rng, d));
        EXPECT_FALSE(theorem2_witness(b->eigenvector(t % d), b));
        ComplexVector v(d);
        for (std::size_t i = 0; i < d; ++i) v[i] = b->eigenvector(0)[i] + b->eigenvector(1)[i];
        EXPECT_TRUE(theorem2_witness(normalize(v), b));
    }
}
