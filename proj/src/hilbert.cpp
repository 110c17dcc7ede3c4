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

#include <algorithm>
#include <cmath>
#include <string>

#include "qlogic/error.hpp"

namespace qlogic {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                        std::to_string(b.cols()));
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, ComplexVector(rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
        throw Error(ErrorCode::InvalidArgument, "matrix extents must be at least 1");
    }
    if (entries_.size() != rows * cols) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix entry count " + std::to_string(entries_.size()) + " != " +
                        std::to_string(rows) + "x" + std::to_string(cols));
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
}

ComplexVector ComplexMatrix::row(std::size_t r) const {
    if (r >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(r));
    return ComplexVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                         entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ComplexVector ComplexMatrix::col(std::size_t c) const {
    if (c >= cols_) throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(c));
    ComplexVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "matrix sum");
    ComplexMatrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "matrix difference");
    ComplexMatrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
    return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.cols(), b.rows(), "matrix product");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& m) {
    ComplexMatrix out = m;
    for (auto& e : out.entries_) e *= s;
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "matrix comparison");
    double worst = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return worst;
}

double max_abs_entry(const ComplexMatrix& m) {
    double worst = 0.0;
    for (const auto& e : m.entries()) worst = std::max(worst, std::abs(e));
    return worst;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    return m.is_square() && max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_idempotent(const ComplexMatrix& m, double tol) {
    return m.is_square() && max_abs_diff(m * m, m) <= tol;
}

// ---------------------------------------------------------------------------
// StateVector

double squared_norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& a : v) s += std::norm(a);
    return s;
}

StateVector::StateVector(ComplexVector amplitudes, double tol) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw Error(ErrorCode::InvalidArgument, "state dimension must be at least 1");
    }
    const double n2 = squared_norm(amplitudes_);
    if (!(std::abs(n2 - 1.0) <= tol)) {
        throw Error(ErrorCode::NotNormalized,
                    "state not normalized (squared norm " + std::to_string(n2) + ")");
    }
}

StateVector StateVector::basis_state(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "basis index " + std::to_string(index) + " >= dim " + std::to_string(dim));
    }
    ComplexVector amps(dim);
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

StateVector normalize(std::span<const Complex> v) {
    const double n = std::sqrt(squared_norm(v));
    if (!(n > 1e-300)) throw Error(ErrorCode::NotNormalized, "cannot normalize a zero vector");
    ComplexVector out(v.begin(), v.end());
    for (auto& a : out) a /= n;
    return StateVector(std::move(out));
}

StateVector canonical_phase(const StateVector& v) {
    double biggest = 0.0;
    for (const auto& a : v.amplitudes()) biggest = std::max(biggest, std::abs(a));
    std::size_t pick = 0;
    while (std::abs(v[pick]) < biggest - 1e-12) ++pick;
    const Complex phase = std::conj(v[pick]) / std::abs(v[pick]);
    ComplexVector out(v.amplitudes().begin(), v.amplitudes().end());
    for (auto& a : out) a *= phase;
    out[pick] = std::abs(v[pick]);
    return StateVector(std::move(out));
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
    require_same_dim(u.size(), v.size(), "inner product");
    Complex s{};
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

Complex inner(const StateVector& u, const StateVector& v) { return inner(u.amplitudes(), v.amplitudes()); }

ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
    ComplexMatrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
    }
    return m;
}

ComplexMatrix outer(const StateVector& u, const StateVector& v) { return outer(u.amplitudes(), v.amplitudes()); }

ComplexVector apply(const ComplexMatrix& m, std::span<const Complex> v) {
    require_same_dim(m.cols(), v.size(), "matrix-vector product");
    ComplexVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex s{};
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

ComplexVector apply(const ComplexMatrix& m, const StateVector& v) { return apply(m, v.amplitudes()); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.is_square() || !b.is_square()) {
        throw Error(ErrorCode::DimensionMismatch, "commutator needs square matrices");
    }
    require_same_dim(a.rows(), b.rows(), "commutator");
    return a * b - b * a;
}

bool commutes(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    return max_abs_entry(commutator(a, b)) < tol;
}

ComplexVector kron(std::span<const Complex> u, std::span<const Complex> v) {
    ComplexVector out(u.size() * v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) out[i * v.size() + j] = u[i] * v[j];
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < b.rows(); ++j) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + j, k * b.cols() + l) = aik * b(j, l);
                }
            }
        }
    }
    return out;
}

StateVector tensor_state(const StateVector& u, const StateVector& v) {
    return StateVector(kron(u.amplitudes(), v.amplitudes()));
}

// ---------------------------------------------------------------------------
// ObservableBasis

ObservableBasis::ObservableBasis(std::vector<StateVector> eigenvectors, std::vector<double> eigenvalues)
    : eigenvectors_(std::move(eigenvectors)), eigenvalues_(std::move(eigenvalues)) {
    const std::size_t d = eigenvectors_.size();
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "basis needs at least one eigenvector");
    require_same_dim(eigenvalues_.size(), d, "eigenvalue count vs eigenvector count");
    for (const auto& v : eigenvectors_) require_same_dim(v.dim(), d, "eigenvector dimension vs basis size");
    for (double k : eigenvalues_) {
        if (!std::isfinite(k)) throw Error(ErrorCode::InvalidArgument, "eigenvalues must be finite");
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a; b < d; ++b) {
            const Complex ip = inner(eigenvectors_[a], eigenvectors_[b]);
            const double expected = a == b ? 1.0 : 0.0;
            if (std::abs(ip - expected) > kTolerance) {
                throw Error(ErrorCode::InvalidArgument,
                            "eigenvectors " + std::to_string(a) + " and " + std::to_string(b) +
                                " are not orthonormal");
            }
        }
    }
    if (!is_hermitian(observable())) {
        throw Error(ErrorCode::InvalidArgument, "reconstructed observable is not Hermitian");
    }

    group_of_.resize(d);
    for (std::size_t l = 0; l < d; ++l) {
        auto it = std::find_if(groups_.begin(), groups_.end(), [&](const EigenGroup& g) {
            return std::abs(g.eigenvalue - eigenvalues_[l]) <= kTolerance;
        });
        if (it == groups_.end()) {
            groups_.push_back({eigenvalues_[l], {l}});
            group_of_[l] = groups_.size() - 1;
        } else {
            it->indices.push_back(l);
            group_of_[l] = static_cast<std::size_t>(it - groups_.begin());
        }
    }
}

ComplexMatrix ObservableBasis::observable() const {
    ComplexMatrix k(dim(), dim());
    for (std::size_t l = 0; l < dim(); ++l) {
        k = k + Complex(eigenvalues_[l]) * outer(eigenvectors_[l], eigenvectors_[l]);
    }
    return k;
}

bool ObservableBasis::same_as(const ObservableBasis& other, double tol) const {
    if (this == &other) return true;
    if (dim() != other.dim()) return false;
    for (std::size_t l = 0; l < dim(); ++l) {
        if (std::abs(eigenvalues_[l] - other.eigenvalues_[l]) > tol) return false;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (std::abs(eigenvectors_[l][i] - other.eigenvectors_[l][i]) > tol) return false;
        }
    }
    return true;
}

ObservableBasis computational_basis(std::size_t dim) {
    std::vector<StateVector> vecs;
    std::vector<double> values;
    for (std::size_t l = 0; l < dim; ++l) {
        vecs.push_back(StateVector::basis_state(dim, l));
        values.push_back(static_cast<double>(l));
    }
    return ObservableBasis(std::move(vecs), std::move(values));
}

ObservableBasis qubit_basis(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return ObservableBasis({StateVector({c, s}), StateVector({-s, c})}, {1.0, -1.0});
}

std::vector<StateVector> complete_basis(std::span<const StateVector> seed_vectors, std::size_t dim) {
    if (seed_vectors.size() > dim) {
        throw Error(ErrorCode::InvalidArgument, "more seed vectors than dimensions");
    }
    std::vector<StateVector> out;
    for (const auto& v : seed_vectors) {
        require_same_dim(v.dim(), dim, "seed vector dimension");
        for (const auto& prev : out) {
            if (std::abs(inner(prev, v)) > kTolerance) {
                throw Error(ErrorCode::InvalidArgument, "seed vectors are not orthogonal");
            }
        }
        out.push_back(v);
    }
    for (std::size_t c = 0; c < dim && out.size() < dim; ++c) {
        ComplexVector w(dim);
        w[c] = 1.0;
        // Two passes of modified Gram-Schmidt keep the result orthogonal to
        // ~1e-16 even when the candidate is nearly in the span.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& prev : out) {
                const Complex proj = inner(prev.amplitudes(), w);
                for (std::size_t i = 0; i < dim; ++i) w[i] -= proj * prev[i];
            }
        }
        // A full basis always remains reachable: candidates skipped below this
        // threshold carry less than a quarter of the remaining residual weight.
        if (std::sqrt(squared_norm(w)) > 0.5 / std::sqrt(static_cast<double>(dim))) {
            out.push_back(normalize(w));
        }
    }
    return out;
}

}  // namespace qlogic
