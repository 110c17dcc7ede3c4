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

// Reference computations written directly from the definitions with plain
// loops. They deliberately avoid ComplexMatrix and the library's products so
// that a bug in the library cannot cancel out in a comparison.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <set>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;

/// Square matrix, row-major.
struct Dense {
    std::size_t n = 0;
    std::vector<C> a;
    C at(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

/// sum_{l in idx} |v_l><v_l|
inline Dense projector(const std::vector<Vec>& vectors, const std::set<std::size_t>& idx) {
    const std::size_t n = vectors.empty() ? 0 : vectors[0].size();
    Dense p{n, std::vector<C>(n * n)};
    for (std::size_t l : idx) {
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) p.a[r * n + c] += vectors[l][r] * std::conj(vectors[l][c]);
        }
    }
    return p;
}

inline Dense multiply(const Dense& x, const Dense& y) {
    Dense z{x.n, std::vector<C>(x.n * x.n)};
    for (std::size_t r = 0; r < x.n; ++r) {
        for (std::size_t k = 0; k < x.n; ++k) {
            for (std::size_t c = 0; c < x.n; ++c) z.a[r * x.n + c] += x.at(r, k) * y.at(k, c);
        }
    }
    return z;
}

/// <psi| P |psi>
inline double expectation(const Dense& p, const Vec& psi) {
    C s{};
    for (std::size_t r = 0; r < p.n; ++r) {
        for (std::size_t c = 0; c < p.n; ++c) s += std::conj(psi[r]) * p.at(r, c) * psi[c];
    }
    return s.real();
}

inline C dot(const Vec& u, const Vec& v) {
    C s{};
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

/// Born weight of the set of eigenvectors `idx`: sum |<v_l|psi>|^2.
inline double born(const std::vector<Vec>& vectors, const std::set<std::size_t>& idx, const Vec& psi) {
    double w = 0.0;
    for (std::size_t l : idx) w += std::norm(dot(vectors[l], psi));
    return w;
}

/// sum_ij a_ij k_i (x) l_j in product coordinates (p * d2 + q).
inline Vec flatten(const std::vector<C>& a, const std::vector<Vec>& k, const std::vector<Vec>& l) {
    const std::size_t d1 = k.size();
    const std::size_t d2 = l.size();
    Vec out(d1 * d2);
    for (std::size_t i = 0; i < d1; ++i) {
        for (std::size_t j = 0; j < d2; ++j) {
            for (std::size_t p = 0; p < d1; ++p) {
                for (std::size_t q = 0; q < d2; ++q) out[p * d2 + q] += a[i * d2 + j] * k[i][p] * l[j][q];
            }
        }
    }
    return out;
}

/// <Psi| (|k_n><k_n| (x) |l_j><l_j|) |Psi>, with the product operator built
/// entry by entry.
inline double joint_expectation(const Vec& psi, const Vec& kn, const Vec& lj) {
    const std::size_t d1 = kn.size();
    const std::size_t d2 = lj.size();
    const std::size_t n = d1 * d2;
    Dense op{n, std::vector<C>(n * n)};
    for (std::size_t p = 0; p < d1; ++p) {
        for (std::size_t q = 0; q < d2; ++q) {
            for (std::size_t r = 0; r < d1; ++r) {
                for (std::size_t s = 0; s < d2; ++s) {
                    op.a[(p * d2 + q) * n + (r * d2 + s)] = kn[p] * std::conj(kn[r]) * lj[q] * std::conj(lj[s]);
                }
            }
        }
    }
    return expectation(op, psi);
}

/// Channel-2 marginal of eigen-index j when channel 1 is measured in an
/// arbitrary basis k and the outcome discarded: sum_n <Psi|P_n (x) P_j|Psi>.
inline double marginal2(const Vec& psi, const std::vector<Vec>& k, const Vec& lj) {
    double w = 0.0;
    for (const auto& kn : k) w += joint_expectation(psi, kn, lj);
    return w;
}

}  // namespace oracle
