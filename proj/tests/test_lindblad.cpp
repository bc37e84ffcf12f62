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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qonsager/fock.hpp"
#include "qonsager/lindblad.hpp"
#include "qonsager/operator_core.hpp"
#include "qonsager/random.hpp"
#include "support/helpers.hpp"

using namespace qonsager;
using Catch::Matchers::WithinAbs;

namespace {

// Damped-coupled-oscillator generator written out term by term, kept
// independent of bosonic_model's jump factorization.
Matrix oscillator_rhs(const Matrix& omega, const Matrix& gamma, double nbar, int s, Index dim1,
                      const Matrix& rho) {
    std::vector<Matrix> a(s);
    for (int j = 0; j < s; ++j) a[j] = fock::mode_annihilation(s, j, dim1);
    Matrix out = Matrix::Zero(rho.rows(), rho.cols());
    for (int j = 0; j < s; ++j) {
        for (int k = 0; k < s; ++k) {
            out += -kI * omega(j, k) * commutator(a[j].adjoint() * a[k], rho);
            out += 0.5 * (nbar + 1.0) * gamma(j, k) *
                   (2.0 * a[k] * rho * a[j].adjoint() - a[j].adjoint() * a[k] * rho -
                    rho * a[j].adjoint() * a[k]);
            out += 0.5 * nbar * gamma(j, k) *
                   (2.0 * a[j].adjoint() * rho * a[k] - a[k] * a[j].adjoint() * rho -
                    rho * a[k] * a[j].adjoint());
        }
    }
    return out;
}

}  // namespace

TEST_CASE("generator structure", "[lindblad]") {
    Rng rng(101);
    SECTION("no Hamiltonian and no jumps gives the zero superoperator") {
        GkslModel model(HermitianOperator(Matrix::Zero(3, 3)), {});
        REQUIRE(max_abs(generator(model).mat) == 0.0);
    }
    SECTION("single decay jump drains the excited population at the rate") {
        const double g = 0.37;
        Matrix a = Matrix::Zero(2, 2);
        a(0, 1) = 1.0;
        GkslModel model(HermitianOperator(Matrix::Zero(2, 2)), {{a, g}});
        Matrix rho = Matrix::Zero(2, 2);
        rho(1, 1) = 1.0;
        Matrix drho = model.apply(rho);
        REQUIRE_THAT(drho(1, 1).real(), WithinAbs(-g, 1e-14));
        REQUIRE_THAT(drho(0, 0).real(), WithinAbs(g, 1e-14));
    }
    SECTION("generator is trace-annihilating on random states") {
        GkslModel model = testing::random_gksl(rng, 4, 3);
        Superoperator L = generator(model);
        for (int k = 0; k < 5; ++k) {
            Matrix rho = random_density(rng, 4).mat();
            REQUIRE(std::abs(L.apply(rho).trace()) < 1e-12);
            REQUIRE(max_abs(L.apply(rho) - model.apply(rho)) < 1e-12);
        }
    }
    SECTION("superoperator preserves Hermiticity adjoints") {
        GkslModel model = testing::random_gksl(rng, 3, 2);
        Superoperator L = generator(model);
        for (int k = 0; k < 5; ++k) {
            Matrix A = random_matrix(rng, 3);
            REQUIRE(max_abs(L.apply(A.adjoint()) - L.apply(A).adjoint()) < 1e-12);
        }
    }
}

TEST_CASE("adjoint generator", "[lindblad]") {
    Rng rng(111);
    SECTION("unitary part flips the commutator sign") {
        Matrix H = random_hermitian(rng, 3);
        GkslModel model(HermitianOperator(H), {});
        Superoperator Lstar = adjoint_generator(generator(model));
        for (int k = 0; k < 5; ++k) {
            Matrix A = random_matrix(rng, 3);
            REQUIRE(max_abs(Lstar.apply(A) - kI * commutator(H, A)) < 1e-12);
        }
    }
    SECTION("Hilbert-Schmidt adjoint identity on random pairs") {
        GkslModel model = testing::random_gksl(rng, 4, 2);
        Superoperator L = generator(model);
        Superoperator Lstar = adjoint_generator(L);
        for (int k = 0; k < 20; ++k) {
            Matrix A = random_matrix(rng, 4), B = random_matrix(rng, 4);
            Complex lhs = hs_inner(A, L.apply(B));
            Complex rhs = hs_inner(Lstar.apply(A), B);
            REQUIRE(std::abs(lhs - rhs) < 1e-10);
        }
        REQUIRE(max_abs(Lstar.apply(Matrix::Identity(4, 4))) < 1e-10);
    }
    SECTION("operator-level adjoint matches the superoperator adjoint") {
        GkslModel model = testing::random_gksl(rng, 4, 2);
        Superoperator Lstar = adjoint_generator(generator(model));
        for (int k = 0; k < 5; ++k) {
            Matrix A = random_matrix(rng, 4);
            REQUIRE(max_abs(Lstar.apply(A) - model.apply_adjoint(A)) < 1e-11);
        }
    }
    SECTION("single-mode adjoint action on quadratic observables by hand") {
        // L* A = +i w [n, A] + (nbar+1) g (a^dag A a - {n, A}/2) + nbar g (a A a^dag - {a a^dag, A}/2)
        const double w = 0.9, g = 0.5, nbar = 0.8;
        const Index dim = 12;
        BosonicCoupling c{1, Matrix::Constant(1, 1, w), Matrix::Constant(1, 1, g), nbar,
                          static_cast<int>(dim - 1)};
        GkslModel model = bosonic_model(c);
        Matrix a = fock::annihilation(dim);
        Matrix n = a.adjoint() * a;
        auto adjoint_by_hand = [&](const Matrix& A) {
            Matrix out = kI * w * commutator(n, A);
            out += (nbar + 1.0) * g * (a.adjoint() * A * a - 0.5 * anticommutator(n, A));
            out += nbar * g * (a * A * a.adjoint() - 0.5 * anticommutator(a * a.adjoint(), A));
            return out;
        };
        for (const Matrix& A : {n, Matrix(a + a.adjoint()), Matrix(a * a + (a * a).adjoint())}) {
            REQUIRE(max_abs(model.apply_adjoint(A) - adjoint_by_hand(A)) < 1e-11);
        }
    }
}

TEST_CASE("propagate", "[lindblad]") {
    Rng rng(121);
    GkslModel model = testing::random_gksl(rng, 4, 2);
    Superoperator L = generator(model);
    DensityOperator rho0 = random_density(rng, 4);

    SECTION("zero time is the identity") {
        REQUIRE(max_abs(propagate(L, rho0, 0.0).mat() - rho0.mat()) < 1e-13);
    }
    SECTION("steady state is invariant") {
        DensityOperator sigma = nullspace_state(L);
        for (double t : {0.3, 1.7, 6.0}) {
            REQUIRE(max_abs(propagate(L, sigma, t).mat() - sigma.mat()) < 1e-9);
        }
    }
    SECTION("semigroup property") {
        Matrix one = propagate(L, propagate(L, rho0, 0.6), 1.1).mat();
        Matrix two = propagate(L, rho0, 1.7).mat();
        REQUIRE(max_abs(one - two) < 1e-8);
    }
    SECTION("trace and positivity over long horizons") {
        for (double t : {0.1, 1.0, 5.0, 10.0}) {
            DensityOperator rho = propagate(L, rho0, t);
            REQUIRE_THAT(rho.mat().trace().real(), WithinAbs(1.0, 1e-9));
            REQUIRE(rho.min_eigenvalue() > 0.0);
        }
    }
    SECTION("negative time is rejected") {
        REQUIRE_THROWS_AS(propagate(L, rho0, -0.1), std::invalid_argument);
    }
}

TEST_CASE("damped oscillator mean field", "[lindblad]") {
    const double w = 1.1, g = 0.6, nbar = 0.3, alpha = 0.4;
    const int N = 19;
    const Index dim = N + 1;
    BosonicCoupling c{1, Matrix::Constant(1, 1, w), Matrix::Constant(1, 1, g), nbar, N};
    GkslModel model = bosonic_model(c);
    Superoperator L = generator(model);

    Matrix a = fock::annihilation(dim);
    Matrix disp_gen = kI * (alpha * a.adjoint() - alpha * a);  // Hermitian for real alpha
    Matrix D = unitary_from_generator(disp_gen);
    Matrix rho0 = D * fock::thermal_state(nbar, dim) * D.adjoint();
    rho0 = hermitize(rho0);
    rho0 /= rho0.trace();

    const Complex lambda(-0.5 * g, -w);  // -i w - g/2
    Complex abar0 = (a * rho0).trace();
    REQUIRE(std::abs(abar0 - alpha) < 1e-6);
    for (double t : {0.2, 0.8, 1.5}) {
        Matrix rho = propagate(L, DensityOperator(rho0), t).mat();
        Complex abar = (a * rho).trace();
        REQUIRE(std::abs(abar - std::exp(lambda * t) * abar0) < 1e-8);
    }
}

TEST_CASE("bosonic model construction", "[lindblad]") {
    Rng rng(131);
    SECTION("matches the term-by-term coupled-oscillator form") {
        const int s = 2, N = 3;
        Matrix omega = random_hermitian(rng, s);
        Matrix g = random_matrix(rng, s);
        Matrix gamma = g * g.adjoint();  // Hermitian PSD
        const double nbar = 0.6;
        BosonicCoupling c{s, omega, gamma, nbar, N};
        GkslModel model = bosonic_model(c);
        for (int k = 0; k < 3; ++k) {
            Matrix rho = random_density(rng, 16).mat();
            Matrix direct = oscillator_rhs(omega, gamma, nbar, s, N + 1, rho);
            REQUIRE(max_abs(model.apply(rho) - direct) < 1e-11);
        }
    }
    SECTION("zero temperature decays to the ground state") {
        BosonicCoupling c{1, Matrix::Zero(1, 1), Matrix::Constant(1, 1, 0.8), 0.0, 10};
        GkslModel model = bosonic_model(c);
        Matrix ground = Matrix::Zero(11, 11);
        ground(0, 0) = 1.0;
        REQUIRE(max_abs(model.apply(ground)) < 1e-14);
        // The ground-state projector is not strictly positive, so the kernel
        // extraction must reject it rather than return it.
        REQUIRE_THROWS(nullspace_state(generator(model)));
        Matrix rho0 = Matrix::Zero(11, 11);
        rho0(3, 3) = 1.0;
        Matrix rho = propagate(generator(model), DensityOperator((rho0 + 1e-11 * Matrix::Identity(11, 11)) /
                                                                 (1.0 + 11e-11)),
                               40.0)
                         .mat();
        REQUIRE(max_abs(rho - ground) < 1e-6);
    }
    SECTION("kernel of the single-mode generator is the truncated thermal state") {
        BosonicCoupling c{1, Matrix::Constant(1, 1, 1.0), Matrix::Constant(1, 1, 0.5), 1.0, 30};
        DensityOperator sigma = nullspace_state(generator(bosonic_model(c)));
        REQUIRE(trace_distance(sigma.mat(), bosonic_thermal_state(c)) < 1e-8);
    }
    SECTION("two-mode generator annihilates the thermal state") {
        const int s = 2, N = 17;
        Matrix omega = random_hermitian(rng, s);
        Matrix g = random_matrix(rng, s);
        Matrix gamma = g * g.adjoint();
        gamma /= max_abs(gamma);
        BosonicCoupling c{s, omega, gamma, 0.5, N};
        GkslModel model = bosonic_model(c);
        Matrix sigma = bosonic_thermal_state(c);
        REQUIRE(max_abs(model.apply(sigma)) < 1e-8);
    }
    SECTION("gamma that is not PSD is rejected") {
        Matrix gamma(1, 1);
        gamma << -0.1;
        BosonicCoupling c{1, Matrix::Zero(1, 1), gamma, 0.5, 5};
        REQUIRE_THROWS_AS(bosonic_model(c), std::invalid_argument);
    }
}

TEST_CASE("dual pair identity", "[lindblad]") {
    Rng rng(141);
    GkslModel model = testing::random_gksl(rng, 5, 2);
    for (int k = 0; k < 20; ++k) {
        Matrix A = random_hermitian(rng, 5);
        Matrix rho = random_density(rng, 5).mat();
        Complex lhs = (model.apply_adjoint(A) * rho).trace();
        Complex rhs = (A * model.apply(rho)).trace();
        REQUIRE(std::abs(lhs - rhs) < 1e-11);
    }
}
