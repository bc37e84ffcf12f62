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

// GKSL generators, their Hilbert-Schmidt adjoints, state propagation, and the
// passively-coupled damped-oscillator model.

#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qonsager/fock.hpp"
#include "qonsager/operator_core.hpp"
#include "qonsager/types.hpp"

namespace qonsager {

struct JumpOperator {
    Matrix op;
    double rate = 1.0;
};

class GkslModel {
public:
    GkslModel(HermitianOperator hamiltonian, std::vector<JumpOperator> jumps)
        : hamiltonian_(std::move(hamiltonian)), jumps_(std::move(jumps)) {
        for (const auto& j : jumps_) {
            if (j.op.rows() != dim() || j.op.cols() != dim()) {
                throw std::invalid_argument("GkslModel: jump operator dimension mismatch");
            }
            if (j.rate < 0.0) throw std::invalid_argument("GkslModel: negative rate");
        }
    }

    Index dim() const { return hamiltonian_.dim(); }
    const HermitianOperator& hamiltonian() const { return hamiltonian_; }
    const std::vector<JumpOperator>& jumps() const { return jumps_; }

    // L rho = -i[H, rho] + sum_k rate_k (A_k rho A_k^dag - {A_k^dag A_k, rho}/2)
    Matrix apply(const Matrix& rho) const {
        Matrix out = -kI * commutator(hamiltonian_.mat(), rho);
        for (const auto& j : jumps_) {
            const Matrix AdA = j.op.adjoint() * j.op;
            out += j.rate * (j.op * rho * j.op.adjoint() - 0.5 * anticommutator(AdA, rho));
        }
        return out;
    }

    // L* A = +i[H, A] + sum_k rate_k (A_k^dag A A_k - {A_k^dag A_k, A}/2)
    Matrix apply_adjoint(const Matrix& A) const {
        Matrix out = kI * commutator(hamiltonian_.mat(), A);
        for (const auto& j : jumps_) {
            const Matrix AdA = j.op.adjoint() * j.op;
            out += j.rate * (j.op.adjoint() * A * j.op - 0.5 * anticommutator(AdA, A));
        }
        return out;
    }

private:
    HermitianOperator hamiltonian_;
    std::vector<JumpOperator> jumps_;
};

inline Superoperator generator(const GkslModel& model) {
    const Index d = model.dim();
    const Matrix id = Matrix::Identity(d, d);
    const Matrix& H = model.hamiltonian().mat();
    Matrix L = -kI * (kron(id, H) - kron(H.transpose(), id));
    for (const auto& j : model.jumps()) {
        const Matrix AdA = j.op.adjoint() * j.op;
        L += j.rate * (kron(j.op.conjugate(), j.op) - 0.5 * kron(id, AdA) -
                       0.5 * kron(AdA.transpose(), id));
    }
    return Superoperator(d, std::move(L));
}

// Hilbert-Schmidt adjoint. With column stacking and tr(A^dag B) = vec(A)^dag vec(B),
// the adjoint map is the conjugate transpose of the superoperator matrix.
inline Superoperator adjoint_generator(const Superoperator& L) { return L.adjoint(); }

// F(t) rho0 = exp(L t) rho0. Trace drift and Hermiticity are checked at 1e-9;
// positivity loss beyond -1e-9 is an error (truncation too small or an
// invalid model). Round-off-scale negative eigenvalues are floored so the
// result satisfies the strict DensityOperator invariant.
inline DensityOperator propagate(const Superoperator& L, const DensityOperator& rho0, double t) {
    if (t < 0.0) throw std::invalid_argument("propagate: t must be nonnegative");
    Matrix rho = superop_exp(L, t).apply(rho0.mat());
    const double herm_dev = max_abs(rho - rho.adjoint());
    if (herm_dev > 1e-9) {
        throw std::runtime_error("propagate: Hermiticity lost, residual " + std::to_string(herm_dev));
    }
    rho = hermitize(rho);
    const double tr_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (tr_dev > 1e-9) {
        throw std::runtime_error("propagate: trace drift " + std::to_string(tr_dev));
    }
    rho /= rho.trace();
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
    const double lo = es.eigenvalues().minCoeff();
    if (lo < -1e-9) {
        throw std::runtime_error("propagate: positivity lost, min eigenvalue " + std::to_string(lo));
    }
    if (lo <= 0.0) {
        RealVector d = es.eigenvalues().cwiseMax(1e-17);
        rho = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
        rho = hermitize(rho);
        rho /= rho.trace();
    }
    return DensityOperator(rho);
}

// ---------------------- Coupled damped oscillators --------------------------

struct BosonicCoupling {
    int modes = 1;
    Matrix omega;      // s x s Hermitian
    Matrix gamma;      // s x s Hermitian PSD
    double nbar = 0.0;
    int truncation = 2;  // Fock cutoff N; per-mode dimension is N + 1

    void validate() const {
        if (modes < 1) throw std::invalid_argument("BosonicCoupling: modes must be >= 1");
        if (truncation < 2) throw std::invalid_argument("BosonicCoupling: truncation must be >= 2");
        if (nbar < 0.0) throw std::invalid_argument("BosonicCoupling: nbar must be nonnegative");
        if (omega.rows() != modes || omega.cols() != modes || !is_hermitian(omega)) {
            throw std::invalid_argument("BosonicCoupling: omega must be s x s Hermitian");
        }
        if (gamma.rows() != modes || gamma.cols() != modes || !is_hermitian(gamma)) {
            throw std::invalid_argument("BosonicCoupling: gamma must be s x s Hermitian");
        }
        Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(gamma), Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10) {
            throw std::invalid_argument("BosonicCoupling: gamma not PSD, min eigenvalue = " +
                                        std::to_string(es.eigenvalues().minCoeff()));
        }
    }
};

// GKSL model on dimension (N+1)^s implementing
//   L rho = -i omega_jk [a_j^dag a_k, rho]
//           + (nbar+1)/2 gamma_jk (2 a_k rho a_j^dag - a_j^dag a_k rho - rho a_j^dag a_k)
//           + nbar/2 gamma_jk (2 a_j^dag rho a_k - a_k a_j^dag rho - rho a_k a_j^dag).
// The gamma dissipator is factorized through collective modes: with
// gamma = sum_m g_m u_m u_m^dag, b_m = sum_j conj(u_m)_j a_j, the jumps are
// sqrt((nbar+1) g_m) b_m and sqrt(nbar g_m) b_m^dag. Any square root of gamma
// gives the same generator.
inline GkslModel bosonic_model(const BosonicCoupling& c) {
    c.validate();
    const int s = c.modes;
    const Index dim1 = c.truncation + 1;
    std::vector<Matrix> a(s);
    for (int j = 0; j < s; ++j) a[j] = fock::mode_annihilation(s, j, dim1);

    const Index d = a[0].rows();
    Matrix H = Matrix::Zero(d, d);
    for (int j = 0; j < s; ++j)
        for (int k = 0; k < s; ++k) H += c.omega(j, k) * a[j].adjoint() * a[k];

    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(c.gamma));
    std::vector<JumpOperator> jumps;
    for (int m = 0; m < s; ++m) {
        const double g = std::max(es.eigenvalues()(m), 0.0);
        if (g <= 1e-14) continue;
        Matrix b = Matrix::Zero(d, d);
        for (int j = 0; j < s; ++j) b += std::conj(es.eigenvectors()(j, m)) * a[j];
        jumps.push_back({b, (c.nbar + 1.0) * g});
        if (c.nbar > 0.0) jumps.push_back({b.adjoint(), c.nbar * g});
    }
    return GkslModel(HermitianOperator(hermitize(H)), std::move(jumps));
}

inline Matrix bosonic_thermal_state(const BosonicCoupling& c) {
    return fock::thermal_state_modes(c.modes, c.nbar, c.truncation + 1);
}

}  // namespace qonsager
