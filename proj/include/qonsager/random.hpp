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

// Seeded random generators for operators, states, models, and chains. Used by
// the property checks; every randomized run records its seed.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qonsager/operator_core.hpp"
#include "qonsager/types.hpp"

namespace qonsager {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
    Complex cnormal() { return {normal(), normal()}; }
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

inline Matrix random_matrix(Rng& rng, Index d) {
    Matrix m(d, d);
    for (Index j = 0; j < d; ++j)
        for (Index i = 0; i < d; ++i) m(i, j) = rng.cnormal();
    return m;
}

inline Matrix random_hermitian(Rng& rng, Index d) { return hermitize(random_matrix(rng, d)); }

inline Matrix random_traceless_hermitian(Rng& rng, Index d) {
    Matrix h = random_hermitian(rng, d);
    h -= (h.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
    return h;
}

// Full-rank density operator: G G^dag / tr + floor * I, renormalized.
inline DensityOperator random_density(Rng& rng, Index d, double floor = 0.05) {
    Matrix g = random_matrix(rng, d);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    rho = (1.0 - floor) * rho + (floor / static_cast<double>(d)) * Matrix::Identity(d, d);
    rho /= rho.trace();
    return DensityOperator(hermitize(rho));
}

inline Matrix random_unitary(Rng& rng, Index d) {
    Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, d));
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index i = 0; i < d; ++i) {
        const Complex rii = r(i, i);
        if (std::abs(rii) > 0) q.col(i) *= rii / std::abs(rii);
    }
    return q;
}

inline RealVector random_unit_vector(Rng& rng, int p) {
    RealVector v(p);
    for (int i = 0; i < p; ++i) v(i) = rng.normal();
    const double n = v.norm();
    return (n > 0) ? RealVector(v / n) : v;
}

}  // namespace qonsager
