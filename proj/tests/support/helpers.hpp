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

// Test-only oracles, kept independent of the library code paths they check.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qonsager/lindblad.hpp"
#include "qonsager/random.hpp"
#include "qonsager/types.hpp"

namespace qonsager::testing {

// Gauss-Legendre nodes/weights on [0, 1] via Newton iteration on P_n.
inline void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));  // initial guess on [-1, 1]
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = 0.5 * (x + 1.0);
        weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);  // already halved by mapping to [0, 1]
    }
}

// Brute-force KMB map: int_0^1 sigma^l A sigma^(1-l) dl by 64-point quadrature.
inline Matrix kmb_map_quadrature(const Matrix& sigma, const Matrix& A) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
    const Matrix V = es.eigenvectors();
    const RealVector p = es.eigenvalues();
    std::vector<double> x, w;
    gauss_legendre_01(64, x, w);
    Matrix acc = Matrix::Zero(sigma.rows(), sigma.cols());
    for (int k = 0; k < 64; ++k) {
        RealVector pl(p.size()), pr(p.size());
        for (Index i = 0; i < p.size(); ++i) {
            pl(i) = std::pow(p(i), x[k]);
            pr(i) = std::pow(p(i), 1.0 - x[k]);
        }
        const Matrix sl = V * pl.asDiagonal() * V.adjoint();
        const Matrix sr = V * pr.asDiagonal() * V.adjoint();
        acc += w[k] * sl * A * sr;
    }
    return acc;
}

// Random GKSL model with a generically unique full-rank steady state.
inline GkslModel random_gksl(Rng& rng, Index d, int njumps = 2) {
    std::vector<JumpOperator> jumps;
    for (int k = 0; k < njumps; ++k) {
        jumps.push_back({random_matrix(rng, d), rng.uniform(0.2, 1.0)});
    }
    return GkslModel(HermitianOperator(random_hermitian(rng, d)), std::move(jumps));
}

// 5-point central first-derivative stencil on a uniform grid (interior only).
inline double stencil5(double fm2, double fm1, double fp1, double fp2, double h) {
    return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
}

}  // namespace qonsager::testing
