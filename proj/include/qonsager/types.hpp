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

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace qonsager {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

// Tolerances used by the type invariants.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

template <typename Derived>
inline double max_abs(const Eigen::MatrixBase<Derived>& A) {
    if (A.size() == 0) return 0.0;
    return A.cwiseAbs().maxCoeff();
}

inline bool is_square(const Matrix& A) { return A.rows() == A.cols(); }

inline bool is_finite(const Matrix& A) { return A.allFinite(); }

inline bool is_hermitian(const Matrix& A, double tol = kHermitianTol) {
    if (!is_square(A)) return false;
    return max_abs(A - A.adjoint()) <= tol;
}

inline bool is_unitary(const Matrix& A, double tol = kUnitaryTol) {
    if (!is_square(A)) return false;
    Matrix r = A.adjoint() * A;
    r -= Matrix::Identity(A.rows(), A.cols());
    return max_abs(r) <= tol;
}

inline Matrix hermitize(const Matrix& A) { return 0.5 * (A + A.adjoint()); }

// A = A† within kHermitianTol, checked at construction.
class HermitianOperator {
public:
    explicit HermitianOperator(Matrix m) : mat_(std::move(m)) {
        if (!is_square(mat_)) throw std::invalid_argument("HermitianOperator: matrix must be square");
        if (!is_finite(mat_)) throw std::invalid_argument("HermitianOperator: non-finite entries");
        const double dev = max_abs(mat_ - mat_.adjoint());
        if (dev > kHermitianTol) {
            throw std::invalid_argument("HermitianOperator: not Hermitian, max |A - A^dag| = " +
                                        std::to_string(dev));
        }
        mat_ = hermitize(mat_);
    }

    const Matrix& mat() const { return mat_; }
    Index dim() const { return mat_.rows(); }

private:
    Matrix mat_;
};

// Trace one within kTraceTol and strictly positive-definite.
class DensityOperator {
public:
    explicit DensityOperator(const Matrix& m) : herm_(m) {
        const double tr_dev = std::abs(herm_.mat().trace() - Complex(1.0, 0.0));
        if (tr_dev > kTraceTol) {
            throw std::invalid_argument("DensityOperator: trace deviates from 1 by " +
                                        std::to_string(tr_dev));
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(herm_.mat(), Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success) throw std::runtime_error("DensityOperator: eigensolve failed");
        min_eigenvalue_ = es.eigenvalues().minCoeff();
        if (!(min_eigenvalue_ > 0.0)) {
            throw std::invalid_argument("DensityOperator: not positive-definite, min eigenvalue = " +
                                        std::to_string(min_eigenvalue_));
        }
    }

    const Matrix& mat() const { return herm_.mat(); }
    Index dim() const { return herm_.dim(); }
    double min_eigenvalue() const { return min_eigenvalue_; }

private:
    HermitianOperator herm_;
    double min_eigenvalue_ = 0.0;
};

// Linear map on operators, stored as a d^2 x d^2 matrix acting on
// column-stacked vectorized operators.
struct Superoperator {
    Index dim = 0;   // Hilbert-space dimension d
    Matrix mat;      // d^2 x d^2

    Superoperator() = default;
    Superoperator(Index d, Matrix m) : dim(d), mat(std::move(m)) {
        if (mat.rows() != dim * dim || mat.cols() != dim * dim) {
            throw std::invalid_argument("Superoperator: matrix must be d^2 x d^2");
        }
    }

    static Superoperator zero(Index d) { return Superoperator(d, Matrix::Zero(d * d, d * d)); }
    static Superoperator identity(Index d) { return Superoperator(d, Matrix::Identity(d * d, d * d)); }

    Matrix apply(const Matrix& X) const;
    Superoperator adjoint() const { return Superoperator(dim, mat.adjoint()); }
    Superoperator compose(const Superoperator& rhs) const {
        if (dim != rhs.dim) throw std::invalid_argument("Superoperator::compose: dimension mismatch");
        return Superoperator(dim, mat * rhs.mat);
    }
};

}  // namespace qonsager
