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

// Symplectic linear algebra on the interleaved quadrature ordering
// (Q1, P1, Q2, P2, ...). Covariance matrices follow the normalization in
// which the vacuum has covariance equal to the identity.

#pragma once

#include "gaussprobe/types.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <vector>

namespace gaussprobe {

/// The standard symplectic form: a direct sum of n copies of [[0, 1], [-1, 0]].
class SymplecticForm {
public:
    explicit SymplecticForm(int n) : n_(n) {
        if (n < 1) throw DimensionError("mode count must be positive, got " + std::to_string(n));
        matrix_ = Matrix::Zero(2 * n, 2 * n);
        for (int j = 0; j < n; ++j) {
            matrix_(2 * j, 2 * j + 1) = 1.0;
            matrix_(2 * j + 1, 2 * j) = -1.0;
        }
    }

    int modes() const { return n_; }
    const Matrix& matrix() const { return matrix_; }
    operator const Matrix&() const { return matrix_; }

private:
    int n_;
    Matrix matrix_;
};

inline SymplecticForm standard_form(int n) { return SymplecticForm(n); }

inline Matrix delta(int n) { return SymplecticForm(n).matrix(); }

/// Full transposition T = diag(1, -1, 1, -1, ...): flips the sign of every momentum.
inline Matrix transposition_matrix(int n) {
    Vector d(2 * n);
    for (int j = 0; j < n; ++j) {
        d(2 * j) = 1.0;
        d(2 * j + 1) = -1.0;
    }
    return d.asDiagonal();
}

/// A real symmetric 2n x 2n matrix. Physical validity is a query, not an invariant.
class CovarianceMatrix {
public:
    explicit CovarianceMatrix(Matrix m, double tol = kDefaultTol) : m_(std::move(m)) {
        require_even_square(m_, "covariance matrix");
        if (!is_symmetric(m_, tol)) throw NotSymmetricError("covariance matrix is not symmetric");
        m_ = 0.5 * (m_ + m_.transpose());
    }

    int modes() const { return static_cast<int>(m_.rows() / 2); }
    const Matrix& matrix() const { return m_; }

private:
    Matrix m_;
};

struct WilliamsonDecomposition {
    Matrix S;
    std::vector<double> nu;  // ascending
};

namespace detail {

// Eigendecomposition of a symmetric matrix with a PSD check scaled to its norm.
inline Eigen::SelfAdjointEigenSolver<Matrix> psd_eigen(const Matrix& sigma, double tol) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
    const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    if (es.eigenvalues()(0) < -tol * scale) {
        throw IndefiniteError("matrix has a negative direction, eigenvalue " +
                              std::to_string(es.eigenvalues()(0)));
    }
    return es;
}

}  // namespace detail

/// True iff max|S Δ Sᵀ − Δ| ≤ tol · max|Δ|.
inline bool is_symplectic(const Matrix& S, double tol = kDefaultTol) {
    require_even_square(S, "symplectic candidate");
    const Matrix d = delta(static_cast<int>(S.rows() / 2));
    return max_abs(S * d * S.transpose() - d) <= tol * max_abs(d);
}

/// The n nonnegative values ν with ±ν the spectrum of iσΔ⁻¹, ascending.
///
/// iσΔ⁻¹ shares its spectrum with the Hermitian matrix −iσ^{1/2}Δσ^{1/2},
/// which stays well defined for singular σ; zero symplectic eigenvalues are
/// returned as zeros.
inline std::vector<double> symplectic_eigenvalues(const CovarianceMatrix& sigma,
                                                  double tol = kDefaultTol) {
    const int n = sigma.modes();
    const auto es = detail::psd_eigen(sigma.matrix(), tol);
    const Vector root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Matrix half = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().transpose();
    const CMatrix h = Complex(0.0, -1.0) * (half * delta(n) * half).cast<Complex>();
    Eigen::SelfAdjointEigenSolver<CMatrix> hs(h, Eigen::EigenvaluesOnly);
    std::vector<double> nu(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) nu[static_cast<std::size_t>(j)] = std::max(0.0, hs.eigenvalues()(n + j));
    std::sort(nu.begin(), nu.end());
    return nu;
}

/// Williamson normal form: S symplectic with S σ Sᵀ = ⊕ νᵢ 𝟙₂.
///
/// With A = σ^{-1/2} Δ σ^{-1/2} (antisymmetric, spectrum ±i/νⱼ), the
/// eigenvectors x + iy of iA for the positive eigenvalues give an orthogonal
/// O = √2 [y₁ x₁ y₂ x₂ ...] with OᵀAO = ⊕ (1/νⱼ)[[0,1],[−1,0]], and then
/// S = D^{1/2} Oᵀ σ^{-1/2}.
inline WilliamsonDecomposition williamson(const CovarianceMatrix& sigma, double tol = kDefaultTol) {
    const int n = sigma.modes();
    const auto es = detail::psd_eigen(sigma.matrix(), tol);
    const Vector ev = es.eigenvalues();
    if (ev(0) <= tol * std::max(1.0, ev.cwiseAbs().maxCoeff())) {
        throw SingularError("williamson requires a strictly positive definite matrix");
    }
    const Matrix inv_half =
        es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
    const Matrix a = inv_half * delta(n) * inv_half;
    const CMatrix ia = Complex(0.0, 1.0) * a.cast<Complex>();
    Eigen::SelfAdjointEigenSolver<CMatrix> hs(0.5 * (ia + ia.adjoint()));

    WilliamsonDecomposition out;
    out.nu.resize(static_cast<std::size_t>(n));
    Matrix o(2 * n, 2 * n);
    // Largest eigenvalue μ = 1/ν first, so ν comes out ascending.
    for (int j = 0; j < n; ++j) {
        const int col = 2 * n - 1 - j;
        const double mu = hs.eigenvalues()(col);
        out.nu[static_cast<std::size_t>(j)] = 1.0 / mu;
        const CVector v = hs.eigenvectors().col(col);
        o.col(2 * j) = std::sqrt(2.0) * v.imag();
        o.col(2 * j + 1) = std::sqrt(2.0) * v.real();
    }
    Vector dh(2 * n);
    for (int j = 0; j < n; ++j) {
        dh(2 * j) = dh(2 * j + 1) = std::sqrt(out.nu[static_cast<std::size_t>(j)]);
    }
    out.S = dh.asDiagonal() * o.transpose() * inv_half;
    return out;
}

/// σ ⪰ 0 and every symplectic eigenvalue ≥ 1 − tol.
inline bool is_valid_covariance(const CovarianceMatrix& sigma, double tol = kDefaultTol) {
    try {
        const auto nu = symplectic_eigenvalues(sigma, tol);
        return nu.front() >= 1.0 - tol;
    } catch (const IndefiniteError&) {
        return false;
    }
}

}  // namespace gaussprobe
