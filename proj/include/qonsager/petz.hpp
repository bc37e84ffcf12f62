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

// Petz-class density maps E_sigma = R_sigma phi(Delta_sigma) built from a
// steady state sigma and an operator-monotone scalar function phi. In the
// eigenbasis of sigma with eigenvalues p_i, the map multiplies entry (i, j)
// by phi(p_i / p_j) * p_j.

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qonsager/operator_core.hpp"
#include "qonsager/types.hpp"

namespace qonsager {

enum class PetzKind { Helstrom, KMB, Connes, RightProduct, Custom };

inline const char* petz_kind_name(PetzKind k) {
    switch (k) {
        case PetzKind::Helstrom: return "helstrom";
        case PetzKind::KMB: return "kmb";
        case PetzKind::Connes: return "connes";
        case PetzKind::RightProduct: return "right-product";
        case PetzKind::Custom: return "custom";
    }
    return "?";
}

// (u - 1)/ln u with a series evaluation near the removable singularity u = 1.
inline double kmb_phi(double u) {
    const double x = u - 1.0;
    if (std::abs(x) < 1e-6) return 1.0 + x / 2.0 - x * x / 12.0;
    return x / std::log(u);
}

class PetzFunction {
public:
    static PetzFunction helstrom() {
        return PetzFunction(PetzKind::Helstrom, [](double u) { return 0.5 * (1.0 + u); }, true);
    }
    static PetzFunction kmb() { return PetzFunction(PetzKind::KMB, kmb_phi, true); }
    static PetzFunction connes() {
        return PetzFunction(PetzKind::Connes, [](double u) { return std::sqrt(u); }, true);
    }
    // phi(u) = 1 gives E_sigma A = A sigma (the Agarwal choice). Not symmetric;
    // admitted for detailed-balance checks and commuting models only.
    static PetzFunction right_product() {
        return PetzFunction(PetzKind::RightProduct, [](double) { return 1.0; }, false);
    }

    // Custom phi must be normalized (phi(1) = 1) and symmetric
    // (phi(u) = u phi(1/u)); both are checked on a log-spaced grid.
    // Operator monotonicity is not decidable from point samples and is left to
    // the empirical monotonicity tests.
    static PetzFunction custom(std::function<double(double)> phi) {
        if (std::abs(phi(1.0) - 1.0) > 1e-10) {
            throw std::invalid_argument("PetzFunction: phi(1) must equal 1");
        }
        for (int k = 0; k <= 60; ++k) {
            const double u = std::pow(10.0, -3.0 + 0.1 * k);
            const double lhs = phi(u);
            const double rhs = u * phi(1.0 / u);
            if (!std::isfinite(lhs) || std::abs(lhs - rhs) > 1e-10 * std::max(1.0, std::abs(lhs))) {
                throw std::invalid_argument("PetzFunction: phi(u) = u phi(1/u) fails at u = " +
                                            std::to_string(u));
            }
        }
        return PetzFunction(PetzKind::Custom, std::move(phi), true);
    }

    double operator()(double u) const {
        if (!(u > 0.0)) throw std::invalid_argument("PetzFunction: argument must be positive");
        return phi_(u);
    }

    PetzKind kind() const { return kind_; }
    bool symmetric() const { return symmetric_; }
    const char* name() const { return petz_kind_name(kind_); }

private:
    PetzFunction(PetzKind kind, std::function<double(double)> phi, bool symmetric)
        : kind_(kind), phi_(std::move(phi)), symmetric_(symmetric) {}

    PetzKind kind_;
    std::function<double(double)> phi_;
    bool symmetric_;
};

inline double phi_eval(const PetzFunction& phi, double u) { return phi(u); }

class PetzDensityMap {
public:
    PetzDensityMap(const DensityOperator& sigma, PetzFunction phi)
        : sigma_(sigma.mat()), phi_(std::move(phi)) {
        const Index d = sigma_.rows();
        // Fast path: sigma already diagonal in the computational basis keeps
        // V = I and the superoperator diagonal.
        Matrix off = sigma_;
        off.diagonal().setZero();
        diagonal_ = (max_abs(off) <= 1e-14);
        if (diagonal_) {
            eigvecs_ = Matrix::Identity(d, d);
            eigvals_ = sigma_.diagonal().real();
        } else {
            Eigen::SelfAdjointEigenSolver<Matrix> es(sigma_);
            if (es.info() != Eigen::Success) throw std::runtime_error("PetzDensityMap: eigensolve failed");
            eigvecs_ = es.eigenvectors();
            eigvals_ = es.eigenvalues();
        }
        if (eigvals_.minCoeff() <= 0.0) {
            throw std::invalid_argument("PetzDensityMap: sigma eigenvalue not positive");
        }
        weights_.resize(d, d);
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j) weights_(i, j) = phi_(eigvals_(i) / eigvals_(j)) * eigvals_(j);
    }

    const Matrix& sigma() const { return sigma_; }
    const PetzFunction& phi() const { return phi_; }
    Index dim() const { return sigma_.rows(); }
    const RealVector& eigenvalues() const { return eigvals_; }
    const Matrix& eigenvectors() const { return eigvecs_; }
    const RealMatrix& weights() const { return weights_; }
    bool diagonal_fast_path() const { return diagonal_; }

    Matrix to_eigenbasis(const Matrix& A) const {
        return diagonal_ ? A : Matrix(eigvecs_.adjoint() * A * eigvecs_);
    }
    Matrix from_eigenbasis(const Matrix& A) const {
        return diagonal_ ? A : Matrix(eigvecs_ * A * eigvecs_.adjoint());
    }

    // E_sigma A: entrywise weights in the eigenbasis of sigma.
    Matrix apply(const Matrix& A) const {
        check_dim(A);
        Matrix Ap = to_eigenbasis(A);
        Ap = Ap.cwiseProduct(weights_.cast<Complex>());
        return from_eigenbasis(Ap);
    }

    // E_sigma^{-1} A. A weight may legitimately be tiny when sigma has tiny
    // eigenvalues (deep Fock tails); the inversion is rejected only when a
    // non-negligible component of A sits on an untrustworthy weight.
    Matrix apply_inverse(const Matrix& A) const {
        check_dim(A);
        Matrix Ap = to_eigenbasis(A);
        const double wfloor = 1e-14 * weights_.maxCoeff();
        const double afloor = 1e-10 * max_abs(Ap);
        const Index d = dim();
        for (Index j = 0; j < d; ++j) {
            for (Index i = 0; i < d; ++i) {
                const double w = weights_(i, j);
                if (w < wfloor && std::abs(Ap(i, j)) > afloor) {
                    throw std::runtime_error(
                        "PetzDensityMap: inverse ill-conditioned, weight " + std::to_string(w) +
                        " at significant component; sigma is near-singular");
                }
                Ap(i, j) /= w;
            }
        }
        return from_eigenbasis(Ap);
    }

    // <A, B>_sigma = tr(A^dag E_sigma B).
    Complex weighted_inner_c(const Matrix& A, const Matrix& B) const {
        check_dim(A);
        check_dim(B);
        Matrix Ap = to_eigenbasis(A);
        Matrix Bp = to_eigenbasis(B);
        Complex acc = 0.0;
        const Index d = dim();
        for (Index j = 0; j < d; ++j)
            for (Index i = 0; i < d; ++i) acc += std::conj(Ap(i, j)) * weights_(i, j) * Bp(i, j);
        return acc;
    }

    double weighted_inner(const Matrix& A, const Matrix& B) const {
        return weighted_inner_c(A, B).real();
    }

    // Explicit d^2 x d^2 representation (needed for retrodiction algebra).
    Superoperator superop() const { return weight_superop(false); }
    Superoperator inverse_superop() const { return weight_superop(true); }

private:
    void check_dim(const Matrix& A) const {
        if (A.rows() != dim() || A.cols() != dim()) {
            throw std::invalid_argument("PetzDensityMap: operator dimension mismatch");
        }
    }

    Superoperator weight_superop(bool inverse) const {
        const Index d = dim();
        Vector diag(d * d);
        for (Index j = 0; j < d; ++j)
            for (Index i = 0; i < d; ++i)
                diag(i + j * d) = inverse ? 1.0 / weights_(i, j) : weights_(i, j);
        if (diagonal_) {
            Matrix m = Matrix::Zero(d * d, d * d);
            m.diagonal() = diag;
            return Superoperator(d, std::move(m));
        }
        // E = P diag(w) P^dag with P = conj(V) (x) V mapping eigenbasis
        // components back to the computational basis.
        Matrix P = kron(eigvecs_.conjugate(), eigvecs_);
        Matrix m = P * diag.asDiagonal() * P.adjoint();
        return Superoperator(d, std::move(m));
    }

    Matrix sigma_;
    PetzFunction phi_;
    bool diagonal_ = false;
    Matrix eigvecs_;
    RealVector eigvals_;
    RealMatrix weights_;
};

// The sandwich inequalities between quadratic forms of inverse density maps:
// tr A E_Hel^{-1} A  <=  tr A E_phi^{-1} A  <=  tr A sigma^{-1} A.
struct PetzBounds {
    double helstrom = 0.0;
    double phi = 0.0;
    double inverse_sigma = 0.0;
    bool ordered = false;
};

inline PetzBounds petz_bounds_check(const DensityOperator& sigma, const PetzFunction& phi,
                                    const HermitianOperator& A, double slack = 1e-10) {
    if (!phi.symmetric()) {
        throw std::invalid_argument("petz_bounds_check: requires a symmetric normalized phi");
    }
    PetzDensityMap e_phi(sigma, phi);
    PetzDensityMap e_hel(sigma, PetzFunction::helstrom());
    const Matrix Ap = e_phi.to_eigenbasis(A.mat());
    const RealVector& p = e_phi.eigenvalues();
    const Index d = p.size();
    PetzBounds out;
    for (Index j = 0; j < d; ++j) {
        for (Index i = 0; i < d; ++i) {
            const double a2 = std::norm(Ap(i, j));
            out.helstrom += a2 / e_hel.weights()(i, j);
            out.phi += a2 / e_phi.weights()(i, j);
            out.inverse_sigma += a2 / p(j);
        }
    }
    const double scale = std::max(1.0, std::abs(out.inverse_sigma));
    out.ordered = (out.helstrom <= out.phi + slack * scale) &&
                  (out.phi <= out.inverse_sigma + slack * scale);
    return out;
}

}  // namespace qonsager
