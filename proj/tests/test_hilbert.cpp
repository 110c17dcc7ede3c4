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

#include "qlogic/hilbert.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "qlogic/error.hpp"
#include "support/random.hpp"

using namespace qlogic;
using namespace qlogic::testing;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "expected qlogic::Error";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(ComplexMatrix, ShapeAndProduct) {
    ComplexMatrix a(2, 3, {1, 2, 3, 4, 5, 6});
    ComplexMatrix b(3, 1, {1, 0, Complex(0, 1)});
    const ComplexMatrix c = a * b;
    ASSERT_EQ(c.rows(), 2u);
    ASSERT_EQ(c.cols(), 1u);
    EXPECT_EQ(c(0, 0), Complex(1, 3));
    EXPECT_EQ(c(1, 0), Complex(4, 6));
    EXPECT_EQ(code_of([&] { (void)(b * a * b * a); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([] { ComplexMatrix(2, 2, {1, 2, 3}); }), ErrorCode::DimensionMismatch);
}

TEST(ComplexMatrix, AdjointConjugatesAndTransposes) {
    ComplexMatrix a(2, 2, {Complex(1, 1), Complex(2, -1), Complex(0, 3), 4});
    const ComplexMatrix h = a.adjoint();
    EXPECT_EQ(h(0, 1), Complex(0, -3));
    EXPECT_EQ(h(1, 0), Complex(2, 1));
    EXPECT_FALSE(is_hermitian(a));
    EXPECT_TRUE(is_hermitian(a + h));
}

TEST(StateVector, RejectsUnnormalized) {
    EXPECT_EQ(code_of([] { StateVector({1.0, 1.0}); }), ErrorCode::NotNormalized);
    EXPECT_NO_THROW(StateVector({0.6, Complex(0, 0.8)}));
    EXPECT_EQ(code_of([] { StateVector::basis_state(3, 3); }), ErrorCode::IndexOutOfRange);
}

TEST(StateVector, NormalizeZeroThrows) {
    const ComplexVector z(3);
    EXPECT_EQ(code_of([&] { normalize(z); }), ErrorCode::NotNormalized);
}

TEST(StateVector, CanonicalPhaseMakesLargestAmplitudeRealPositive) {
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        const StateVector v = random_state(rng, random_dim(rng, 1, 6));
        const StateVector c = canonical_phase(v);
        std::size_t best = 0;
        for (std::size_t i = 1; i < c.dim(); ++i) {
            if (std::abs(c[i]) > std::abs(c[best]) + 1e-12) best = i;
        }
        EXPECT_NEAR(c[best].imag(), 0.0, 1e-15);
        EXPECT_GT(c[best].real(), 0.0);
        EXPECT_NEAR(std::abs(inner(v, c)), 1.0, 1e-12);
    }
}

TEST(Inner, CauchySchwarz) {
    Rng rng(1);
    for (int t = 0; t < 500; ++t) {
        const std::size_t d = random_dim(rng, 1, 8);
        const ComplexVector u = gaussian_vector(rng, d);
        const ComplexVector v = gaussian_vector(rng, d);
        const double lhs = std::abs(inner(u, v));
        const double rhs = std::sqrt(squared_norm(u) * squared_norm(v));
        EXPECT_LE(lhs, rhs * (1 + 1e-12));
        EXPECT_NEAR(std::abs(inner(u, v) - std::conj(inner(v, u))), 0.0, 1e-12);
    }
}

TEST(Inner, DimensionMismatchThrows) {
    const ComplexVector u(2), v(3);
    EXPECT_EQ(code_of([&] { inner(u, v); }), ErrorCode::DimensionMismatch);
}

TEST(Commutator, Antisymmetric) {
    Rng rng(2);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = random_dim(rng, 1, 6);
        const ComplexMatrix a(d, d, gaussian_vector(rng, d * d));
        const ComplexMatrix b(d, d, gaussian_vector(rng, d * d));
        EXPECT_LE(max_abs_entry(commutator(a, b) + commutator(b, a)), 1e-12);
        EXPECT_TRUE(commutes(a, a));
    }
}

TEST(Kron, InnerProductFactorizes) {
    Rng rng(3);
    for (int t = 0; t < 200; ++t) {
        const std::size_t d1 = random_dim(rng, 1, 4);
        const std::size_t d2 = random_dim(rng, 1, 4);
        const StateVector a = random_state(rng, d1), b = random_state(rng, d2);
        const StateVector c = random_state(rng, d1), d = random_state(rng, d2);
        const Complex lhs = inner(tensor_state(a, b), tensor_state(c, d));
        const Complex rhs = inner(a, c) * inner(b, d);
        EXPECT_LE(std::abs(lhs - rhs), 1e-12);
    }
}

TEST(Kron, IndexConvention) {
    const ComplexVector u{1, 2};
    const ComplexVector v{3, 5, 7};
    const ComplexVector w = kron(u, v);
    ASSERT_EQ(w.size(), 6u);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(w[i * 3 + j], u[i] * v[j]);
    }
    const ComplexMatrix m = kron(ComplexMatrix(2, 2, {1, 2, 3, 4}), ComplexMatrix::identity(2));
    EXPECT_EQ(m(1, 3), Complex(2));
    EXPECT_EQ(m(2, 0), Complex(3));
    EXPECT_EQ(m(2, 1), Complex(0));
}

TEST(ObservableBasis, RejectsNonOrthogonal) {
    std::vector<StateVector> v{StateVector({1.0, 0.0}), StateVector({std::sqrt(0.5), std::sqrt(0.5)})};
    EXPECT_EQ(code_of([&] { ObservableBasis(v, {0.0, 1.0}); }), ErrorCode::InvalidArgument);
}

TEST(ObservableBasis, RejectsWrongCounts) {
    std::vector<StateVector> v{StateVector({1.0, 0.0}), StateVector({0.0, 1.0})};
    EXPECT_EQ(code_of([&] { ObservableBasis(v, {0.0}); }), ErrorCode::DimensionMismatch);
    std::vector<StateVector> short_set{StateVector({1.0, 0.0})};
    EXPECT_EQ(code_of([&] { ObservableBasis(short_set, {0.0}); }), ErrorCode::DimensionMismatch);
}

TEST(ObservableBasis, GroupsFollowFirstAppearance) {
    const ObservableBasis b({StateVector::basis_state(3, 0), StateVector::basis_state(3, 1),
                             StateVector::basis_state(3, 2)},
                            {5.0, -1.0, 5.0});
    ASSERT_EQ(b.groups().size(), 2u);
    EXPECT_EQ(b.groups()[0].eigenvalue, 5.0);
    EXPECT_EQ(b.groups()[0].indices, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(b.group_of(1), 1u);
    EXPECT_EQ(b.group_of(2), 0u);
}

TEST(ObservableBasis, ObservableIsHermitianWithEigenpairs) {
    Rng rng(4);
    for (int t = 0; t < 100; ++t) {
        const ObservableBasis b = random_basis(rng, random_dim(rng, 1, 6), t % 2 == 0);
        const ComplexMatrix k = b.observable();
        EXPECT_TRUE(is_hermitian(k));
        for (std::size_t l = 0; l < b.dim(); ++l) {
            const ComplexVector kv = apply(k, b.eigenvector(l));
            for (std::size_t i = 0; i < b.dim(); ++i) {
                EXPECT_LE(std::abs(kv[i] - b.eigenvalue(l) * b.eigenvector(l)[i]), 1e-10);
            }
        }
    }
}

TEST(ObservableBasis, QubitAnalyzer) {
    const ObservableBasis b = qubit_basis(0.3);
    EXPECT_NEAR(b.eigenvector(0)[0].real(), std::cos(0.3), 1e-15);
    EXPECT_NEAR(b.eigenvector(1)[0].real(), -std::sin(0.3), 1e-15);
    EXPECT_EQ(b.eigenvalue(0), 1.0);
    EXPECT_EQ(b.eigenvalue(1), -1.0);
    EXPECT_TRUE(b.same_as(qubit_basis(0.3)));
    EXPECT_FALSE(b.same_as(qubit_basis(0.31)));
}

TEST(CompleteBasis, ExtendsToOrthonormal) {
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = random_dim(rng, 1, 8);
        const std::vector<StateVector> seeds{random_state(rng, d)};
        const auto full = complete_basis(seeds, d);
        ASSERT_EQ(full.size(), d);
        EXPECT_LE(std::abs(inner(full[0], seeds[0]) - Complex(1.0)), 1e-12);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                EXPECT_LE(std::abs(inner(full[i], full[j]) - Complex(i == j ? 1.0 : 0.0)), 1e-10);
            }
        }
    }
}
