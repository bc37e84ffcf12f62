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

// Dense complex-matrix algebra: Hilbert-Schmidt inner products, spectral
// calculus, superoperator construction, matrix exponentials, and steady-state
// extraction from generator kernels.

#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qonsager/types.hpp"

namespace qonsager {

// --------------------------- Basic algebra ---------------------------------

inline Complex hs_inner(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) {
        throw std::invalid_argument("hs_inner: dimension mismatch");
    }
    return (A.adjoint() * B).trace();
}

inline Matrix commutator(const Matrix& A, const Matrix& B) { return A * B - B * A; }
inline Matrix anticommutator(const Matrix& A, const Matrix& B) { return A * B + B * A; }

inline Matrix kron(const Matrix& A, const Matrix& B) {
    Matrix K(A.rows() * B.rows(), A.cols() * B.cols());
    K = Eigen::kroneckerProduct(A, B);
    return K;
}

inline double fro_norm(const Matrix& A) { return A.norm(); }

inline Matrix pauli_x() { Matrix m(2, 2); m << 0, 1, 1, 0; return m; }
inline Matrix pauli_y() { Matrix m(2, 2); m << 0, -kI, kI, 0; return m; }
inline Matrix pauli_z() { Matrix m(2, 2); m << 1, 0, 0, -1; return m; }

// --------------------------- Vectorization ---------------------------------
// Column-stacking convention throughout: vec(X)[i + j*d] = X(i, j), so that
// vec(B X C) = (C^T (x) B) vec(X).

inline Vector vectorize(const Matrix& A) {
    return Eigen::Map<const Vector>(A.data(), A.size());
}

inline Matrix devectorize(const Vector& v, Index d) {
    if (v.size() != d * d) throw std::invalid_argument("devectorize: size mismatch");
    return Eigen::Map<const Matrix>(v.data(), d, d);
}

inline Matrix Superoperator::apply(const Matrix& X) const {
    if (X.rows() != dim || X.cols() != dim) {
        throw std::invalid_argument("Superoperator::apply: dimension mismatch");
    }
    return devectorize(mat * vectorize(X), dim);
}

// --------------------------- Spectral calculus ------------------------------

// U f(D) U^dag from the eigendecomposition A = U D U^dag. Throws if f is not
// finite on the spectrum.
inline HermitianOperator apply_hermitian_fn(const HermitianOperator& A,
                                            const std::function<double(double)>& f) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(A.mat());
    if (es.info() != Eigen::Success) throw std::runtime_error("apply_hermitian_fn: eigensolve failed");
    RealVector d = es.eigenvalues();
    for (Index i = 0; i < d.size(); ++i) {
        const double fd = f(d(i));
        if (!std::isfinite(fd)) {
            throw std::invalid_argument("apply_hermitian_fn: function not finite at eigenvalue " +
                                        std::to_string(d(i)));
        }
        d(i) = fd;
    }
    Matrix out = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
    return HermitianOperator(hermitize(out));
}

inline Matrix hermitian_exp(const Matrix& A) {
    return apply_hermitian_fn(HermitianOperator(A), [](double x) { return std::exp(x); }).mat();
}

inline Matrix hermitian_log(const Matrix& A) {
    return apply_hermitian_fn(HermitianOperator(A), [](double x) { return std::log(x); }).mat();
}

inline Matrix hermitian_sqrt(const Matrix& A) {
    // Eigenvalues of a PSD matrix may round slightly negative.
    return apply_hermitian_fn(HermitianOperator(A),
                              [](double x) { return std::sqrt(std::max(x, 0.0)); })
        .mat();
}

inline Matrix hermitian_power(const Matrix& A, double alpha) {
    return apply_hermitian_fn(HermitianOperator(A), [alpha](double x) { return std::pow(x, alpha); })
        .mat();
}

// exp(-i M) for Hermitian M.
inline Matrix unitary_from_generator(const Matrix& M) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(M));
    if (es.info() != Eigen::Success) throw std::runtime_error("unitary_from_generator: eigensolve failed");
    Vector phases(es.eigenvalues().size());
    for (Index i = 0; i < phases.size(); ++i) phases(i) = std::exp(-kI * es.eigenvalues()(i));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// --------------------------- Superoperator builders -------------------------

enum class SuperopKind { LeftMult, RightMult, Sandwich, Transpose };

// LeftMult(B):   X -> B X            = I (x) B
// RightMult(B):  X -> X B            = B^T (x) I
// Sandwich(B,C): X -> B X C^dag      = conj(C) (x) B
// Transpose:     X -> X^T            (commutation matrix; pass B for the dim)
inline Superoperator build_superop(SuperopKind kind, const Matrix& B, const Matrix& C = Matrix()) {
    if (!is_square(B) || B.rows() == 0) throw std::invalid_argument("build_superop: B must be square");
    const Index d = B.rows();
    const Matrix id = Matrix::Identity(d, d);
    switch (kind) {
        case SuperopKind::LeftMult:
            return Superoperator(d, kron(id, B));
        case SuperopKind::RightMult:
            return Superoperator(d, kron(B.transpose(), id));
        case SuperopKind::Sandwich: {
            const Matrix& c = (C.size() == 0) ? B : C;
            if (c.rows() != d || c.cols() != d) throw std::invalid_argument("build_superop: dimension mismatch");
            return Superoperator(d, kron(c.conjugate(), B));
        }
        case SuperopKind::Transpose: {
            Matrix K = Matrix::Zero(d * d, d * d);
            for (Index i = 0; i < d; ++i)
                for (Index j = 0; j < d; ++j) K(i + j * d, j + i * d) = 1.0;
            return Superoperator(d, std::move(K));
        }
    }
    throw std::invalid_argument("build_superop: unknown kind");
}

// --------------------------- Matrix exponential -----------------------------

// Superoperators are non-normal, so scaling-and-squaring (Eigen's Pade
// implementation) rather than eigendecomposition.
inline Superoperator superop_exp(const Superoperator& S, double t) {
    Matrix e = (S.mat * t).exp();
    if (!e.allFinite()) throw std::runtime_error("superop_exp: non-finite entries");
    return Superoperator(S.dim, std::move(e));
}

// --------------------------- Steady state -----------------------------------

// Steady state from the kernel of a generator: smallest-singular-value vector,
// Hermitized and trace-normalized. Rejects degenerate kernels (second-smallest
// singular value below 1e-6 of the largest) and non-positive kernel elements.
inline DensityOperator nullspace_state(const Superoperator& S) {
    const Index d = S.dim;
    if (d == 1) {
        if (max_abs(S.mat) > 1e-12) throw std::invalid_argument("nullspace_state: no kernel on d=1");
        Matrix one = Matrix::Identity(1, 1);
        return DensityOperator(one);
    }
    Eigen::BDCSVD<Matrix> svd(S.mat, Eigen::ComputeThinV);
    const RealVector& sv = svd.singularValues();
    const double smax = sv(0);
    const double s_small = sv(sv.size() - 1);
    const double s_next = sv(sv.size() - 2);
    if (smax <= 0.0 || s_next < 1e-6 * smax) {
        throw std::invalid_argument("nullspace_state: degenerate kernel, singular values " +
                                    std::to_string(s_small) + ", " + std::to_string(s_next));
    }
    if (s_small > 1e-9 * smax) {
        throw std::invalid_argument("nullspace_state: kernel residual too large: " +
                                    std::to_string(s_small / smax));
    }
    Matrix X = devectorize(svd.matrixV().col(d * d - 1), d);
    X = hermitize(X);
    Complex tr = X.trace();
    if (std::abs(tr) < 1e-12) throw std::invalid_argument("nullspace_state: traceless kernel element");
    X /= tr;
    Eigen::SelfAdjointEigenSolver<Matrix> es(X, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= 0.0) {
        throw std::invalid_argument("nullspace_state: kernel element not positive, min eigenvalue = " +
                                    std::to_string(es.eigenvalues().minCoeff()));
    }
    return DensityOperator(X);
}

// --------------------------- Partial trace ----------------------------------

// rho acts on H_A (x) H_B with dim(H_A) = dA, dim(H_B) = dB and index
// ordering (a, b) -> a*dB + b.
inline Matrix partial_trace_second(const Matrix& rho, Index dA, Index dB) {
    if (rho.rows() != dA * dB || rho.cols() != dA * dB) {
        throw std::invalid_argument("partial_trace_second: dimension mismatch");
    }
    Matrix out = Matrix::Zero(dA, dA);
    for (Index a = 0; a < dA; ++a)
        for (Index c = 0; c < dA; ++c)
            for (Index b = 0; b < dB; ++b) out(a, c) += rho(a * dB + b, c * dB + b);
    return out;
}

inline Matrix partial_trace_first(const Matrix& rho, Index dA, Index dB) {
    if (rho.rows() != dA * dB || rho.cols() != dA * dB) {
        throw std::invalid_argument("partial_trace_first: dimension mismatch");
    }
    Matrix out = Matrix::Zero(dB, dB);
    for (Index b = 0; b < dB; ++b)
        for (Index c = 0; c < dB; ++c)
            for (Index a = 0; a < dA; ++a) out(b, c) += rho(a * dB + b, a * dB + c);
    return out;
}

// --------------------------- Distances --------------------------------------

inline double trace_distance(const Matrix& rho, const Matrix& sigma) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(rho - sigma), Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace qonsager
