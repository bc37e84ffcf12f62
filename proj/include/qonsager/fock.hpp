// Copyright 2026 The qonsager Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Truncated Fock-space operators for bosonic modes. `dim` is the matrix
// dimension, i.e. a cutoff at N quanta gives dim = N + 1. Multimode operators
// use mode ordering a_1 (x) a_2 (x) ... with mode 1 as the leftmost factor.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qonsager/operator_core.hpp"
#include "qonsager/types.hpp"

namespace qonsager::fock {

inline Matrix annihilation(Index dim) {
    if (dim <= 0) throw std::invalid_argument("annihilation: dim must be positive");
    Matrix a = Matrix::Zero(dim, dim);
    for (Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

inline Matrix creation(Index dim) { return annihilation(dim).adjoint(); }

inline Matrix number_op(Index dim) {
    Matrix n = Matrix::Zero(dim, dim);
    for (Index k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

// q = (a + a^dag)/sqrt(2), p = -i (a - a^dag)/sqrt(2), so [q, p] = i.
// In the Fock basis q has real entries and p purely imaginary entries.
inline Matrix position(Index dim) {
    Matrix a = annihilation(dim);
    return (a + a.adjoint()) / std::sqrt(2.0);
}

inline Matrix momentum(Index dim) {
    Matrix a = annihilation(dim);
    return -kI * (a - a.adjoint()) / std::sqrt(2.0);
}

// Embeds a single-mode operator on mode j (0-based) of s modes.
inline Matrix mode_op(int s, int j, const Matrix& op) {
    if (j < 0 || j >= s) throw std::invalid_argument("mode_op: mode index out of range");
    const Index dim = op.rows();
    Matrix out = (j == 0) ? op : Matrix(Matrix::Identity(dim, dim));
    Index left = dim;
    for (int m = 1; m < s; ++m) {
        const Matrix& factor = (m == j) ? op : Matrix(Matrix::Identity(dim, dim));
        out = kron(out, factor);
        left *= dim;
    }
    return out;
}

inline Matrix mode_annihilation(int s, int j, Index dim) { return mode_op(s, j, annihilation(dim)); }

// Canonical observables Q = (q_1 ... q_s p_1 ... p_s)^T.
inline std::vector<Matrix> quadratures(int s, Index dim) {
    std::vector<Matrix> Q;
    Q.reserve(2 * s);
    for (int j = 0; j < s; ++j) Q.push_back(mode_op(s, j, position(dim)));
    for (int j = 0; j < s; ++j) Q.push_back(mode_op(s, j, momentum(dim)));
    return Q;
}

// Truncated single-mode thermal state with mean occupation nbar, renormalized
// on the kept levels. For nbar = 0 this is the ground-state projector, which
// is not strictly positive; callers needing a DensityOperator must keep
// nbar > 0.
inline Matrix thermal_state(double nbar, Index dim) {
    if (nbar < 0.0) throw std::invalid_argument("thermal_state: nbar must be nonnegative");
    Matrix rho = Matrix::Zero(dim, dim);
    if (nbar == 0.0) {
        rho(0, 0) = 1.0;
        return rho;
    }
    const double z = nbar / (nbar + 1.0);
    double w = 1.0, total = 0.0;
    for (Index n = 0; n < dim; ++n) {
        rho(n, n) = w;
        total += w;
        w *= z;
    }
    rho /= total;
    return rho;
}

inline Matrix thermal_state_modes(int s, double nbar, Index dim) {
    Matrix rho = thermal_state(nbar, dim);
    Matrix out = rho;
    for (int m = 1; m < s; ++m) out = kron(out, rho);
    return out;
}

}  // namespace qonsager::fock
