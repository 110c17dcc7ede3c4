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

// Dense complex linear algebra for the small spaces used throughout the
// library. Everything here is a value type; nothing is mutated after
// construction except through the explicit builders.
//
// Tensor products use the composite index (i * d2 + j), channel 1 major.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qlogic {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Absolute tolerance on unit-scale quantities (amplitudes, projector entries).
inline constexpr double kTolerance = 1e-10;

class ComplexMatrix {
public:
    /// Zero matrix. Both extents must be at least 1.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Row-major entries; entries.size() must equal rows * cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexVector row(std::size_t r) const;
    ComplexVector col(std::size_t c) const;

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& m);

private:
    std::size_t rows_;
    std::size_t cols_;
    ComplexVector entries_;
};

/// Largest |entry| of a - b; the matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double max_abs_entry(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kTolerance);
bool is_idempotent(const ComplexMatrix& m, double tol = kTolerance);

/// A normalized amplitude vector. Construction validates the norm and never
/// rescales; use normalize() for intermediate results.
class StateVector {
public:
    explicit StateVector(ComplexVector amplitudes, double tol = kTolerance);

    /// |index> in dimension dim.
    static StateVector basis_state(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept { return amplitudes_.size(); }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }

private:
    ComplexVector amplitudes_;
};

double squared_norm(std::span<const Complex> v);

/// Rescales v to unit norm. Throws NotNormalized if v is (numerically) zero.
StateVector normalize(std::span<const Complex> v);

/// Multiplies by a global phase so the largest-magnitude amplitude is real and
/// positive. The first index within 1e-12 of the maximum magnitude wins.
StateVector canonical_phase(const StateVector& v);

Complex inner(std::span<const Complex> u, std::span<const Complex> v);
Complex inner(const StateVector& u, const StateVector& v);

/// |u><v|, i.e. result(i, j) = u_i * conj(v_j).
ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);
ComplexMatrix outer(const StateVector& u, const StateVector& v);

ComplexVector apply(const ComplexMatrix& m, std::span<const Complex> v);
ComplexVector apply(const ComplexMatrix& m, const StateVector& v);

/// a*b - b*a.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
bool commutes(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kTolerance);

ComplexVector kron(std::span<const Complex> u, std::span<const Complex> v);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
StateVector tensor_state(const StateVector& u, const StateVector& v);

/// Orthonormal eigenvectors with real eigenvalues; eigenvalues may repeat.
class ObservableBasis {
public:
    struct EigenGroup {
        double eigenvalue;
        std::vector<std::size_t> indices;
    };

    ObservableBasis(std::vector<StateVector> eigenvectors, std::vector<double> eigenvalues);

    std::size_t dim() const noexcept { return eigenvectors_.size(); }
    const StateVector& eigenvector(std::size_t l) const { return eigenvectors_.at(l); }
    double eigenvalue(std::size_t l) const { return eigenvalues_.at(l); }
    std::span<const StateVector> eigenvectors() const noexcept { return eigenvectors_; }
    std::span<const double> eigenvalues() const noexcept { return eigenvalues_; }

    /// Distinct eigenvalues (within kTolerance) in order of first appearance.
    std::span<const EigenGroup> groups() const noexcept { return groups_; }
    std::size_t group_of(std::size_t index) const { return group_of_.at(index); }

    /// sum_l k_l |k_l><k_l|
    ComplexMatrix observable() const;

    /// Entrywise comparison of vectors and eigenvalues within tol.
    bool same_as(const ObservableBasis& other, double tol = kTolerance) const;

private:
    std::vector<StateVector> eigenvectors_;
    std::vector<double> eigenvalues_;
    std::vector<EigenGroup> groups_;
    std::vector<std::size_t> group_of_;
};

ObservableBasis computational_basis(std::size_t dim);

/// Dimension-2 analyzer at `angle` radians: (cos, sin) -> +1, (-sin, cos) -> -1.
ObservableBasis qubit_basis(double angle);

/// Extends `seed_vectors` (orthonormal, fewer than dim) to a full orthonormal
/// basis by modified Gram-Schmidt over the computational vectors |0>, |1>, ...
/// in order. The given vectors come first in the result.
std::vector<StateVector> complete_basis(std::span<const StateVector> seed_vectors,
                                        std::size_t dim);

}  // namespace qlogic
