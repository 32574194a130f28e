// Copyright 2026 The gaussprobe Authors
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

// Seeded generators shared by the unit and acceptance suites.

#pragma once

#include "gaussprobe/symplectic.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <random>

namespace gaussprobe::testing {

using Rng = std::mt19937_64;

inline Matrix random_matrix(Rng& rng, int rows, int cols, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = u(rng);
    return m;
}

inline Matrix random_symmetric(Rng& rng, int dim, double lo = -1.0, double hi = 1.0) {
    Matrix m = random_matrix(rng, dim, dim, lo, hi);
    return 0.5 * (m + m.transpose());
}

/// exp(ΔH) with H symmetric: symplectic because ΔH is Hamiltonian.
inline Matrix random_symplectic(Rng& rng, int n, double scale = 0.5) {
    const Matrix h = scale * random_symmetric(rng, 2 * n);
    return Matrix((delta(n) * h).exp());
}

/// S·(⊕ νᵢ𝟙₂)·Sᵀ with νᵢ ∈ [nu_lo, nu_hi].
inline Matrix random_valid_covariance(Rng& rng, int n, double nu_lo = 1.0, double nu_hi = 3.0,
                                      double scale = 0.5) {
    std::uniform_real_distribution<double> u(nu_lo, nu_hi);
    Vector d(2 * n);
    for (int j = 0; j < n; ++j) d(2 * j) = d(2 * j + 1) = u(rng);
    const Matrix s = random_symplectic(rng, n, scale);
    Matrix sigma = s * d.asDiagonal() * s.transpose();
    return 0.5 * (sigma + sigma.transpose());
}

inline Matrix random_psd(Rng& rng, int dim, double scale = 1.0) {
    const Matrix b = random_matrix(rng, dim, dim, -scale, scale);
    return b * b.transpose();
}

/// Symmetric with entries in [lo, hi], rejection-sampled until PSD.
inline Matrix random_psd_bounded(Rng& rng, int dim, double lo, double hi) {
    while (true) {
        Matrix m = random_symmetric(rng, dim, lo, hi);
        for (int i = 0; i < dim; ++i) m(i, i) = std::abs(m(i, i));
        Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
        if (es.eigenvalues()(0) >= 0.0) return m;
    }
}

inline CVector random_cvector(Rng& rng, int dim) {
    std::normal_distribution<double> g;
    CVector w(dim);
    for (int i = 0; i < dim; ++i) w(i) = Complex(g(rng), g(rng));
    return w;
}

}  // namespace gaussprobe::testing
