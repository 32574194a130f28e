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

// Gaussian states, linear phase-space maps (K, α, y₀), and their action on
// moments and characteristic functions.

#pragma once

#include "gaussprobe/symplectic.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gaussprobe {

/// First and second moments that need not describe a physical state.
struct Moments {
    Vector mean;
    Matrix cov;
};

class GaussianState {
public:
    GaussianState(Vector mean, CovarianceMatrix cov, double tol = kDefaultTol)
        : mean_(std::move(mean)), cov_(std::move(cov)) {
        if (mean_.size() != cov_.matrix().rows()) {
            throw DimensionError("mean length does not match covariance dimension");
        }
        if (!is_valid_covariance(cov_, tol)) {
            throw std::invalid_argument("covariance violates the uncertainty relation");
        }
    }

    GaussianState(Vector mean, Matrix cov, double tol = kDefaultTol)
        : GaussianState(std::move(mean), CovarianceMatrix(std::move(cov), tol), tol) {}

    static GaussianState vacuum(int n) {
        return GaussianState(Vector::Zero(2 * n), Matrix::Identity(2 * n, 2 * n));
    }

    int modes() const { return cov_.modes(); }
    const Vector& mean() const { return mean_; }
    const CovarianceMatrix& cov() const { return cov_; }
    Moments moments() const { return {mean_, cov_.matrix()}; }

private:
    Vector mean_;
    CovarianceMatrix cov_;
};

/// The triple (K, α, y₀). No validity is assumed; see classify.hpp.
class GaussianMap {
public:
    GaussianMap(Matrix K, Matrix alpha, Vector y0, double tol = kDefaultTol)
        : K_(std::move(K)), alpha_(std::move(alpha)), y0_(std::move(y0)) {
        require_even_square(K_, "K");
        if (alpha_.rows() != K_.rows() || alpha_.cols() != K_.cols() || y0_.size() != K_.rows()) {
            throw DimensionError("K, alpha and y0 shapes are inconsistent");
        }
        if (!is_symmetric(alpha_, tol)) throw NotSymmetricError("alpha is not symmetric");
        alpha_ = 0.5 * (alpha_ + alpha_.transpose());
    }

    GaussianMap(Matrix K, Matrix alpha)
        : GaussianMap(K, std::move(alpha), Vector::Zero(K.rows())) {}

    static GaussianMap identity(int n) {
        return GaussianMap(Matrix::Identity(2 * n, 2 * n), Matrix::Zero(2 * n, 2 * n));
    }

    int modes() const { return static_cast<int>(K_.rows() / 2); }
    const Matrix& K() const { return K_; }
    const Matrix& alpha() const { return alpha_; }
    const Vector& y0() const { return y0_; }

private:
    Matrix K_;
    Matrix alpha_;
    Vector y0_;
};

namespace detail {
inline void require_dim(Eigen::Index expected, Eigen::Index got, const char* what) {
    if (expected != got) {
        throw DimensionError(std::string(what) + ": expected length " + std::to_string(expected) +
                             ", got " + std::to_string(got));
    }
}
}  // namespace detail

/// χ(k) = exp(−¼ kᵀσk + i kᵀx).
inline Complex char_function(const GaussianState& state, const Vector& k) {
    detail::require_dim(state.mean().size(), k.size(), "char_function");
    const double quad = k.dot(state.cov().matrix() * k);
    return std::exp(Complex(-0.25 * quad, k.dot(state.mean())));
}

/// W(r) = det(πσ)^{-1/2} exp(−(r−x)ᵀσ⁻¹(r−x)).
inline double wigner_function(const GaussianState& state, const Vector& r) {
    detail::require_dim(state.mean().size(), r.size(), "wigner_function");
    const Eigen::LLT<Matrix> llt(state.cov().matrix());
    if (llt.info() != Eigen::Success) throw SingularError("wigner_function needs sigma > 0");
    const Vector d = r - state.mean();
    const double quad = d.dot(llt.solve(d));
    const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    const double log_norm = static_cast<double>(d.size()) * std::log(std::numbers::pi) + log_det;
    return std::exp(-0.5 * log_norm - quad);
}

/// Raw output moments (Kx + y₀, KσKᵀ + α); validity is left to the caller.
inline Moments apply_map(const GaussianMap& map, const Moments& in) {
    detail::require_dim(map.K().rows(), in.mean.size(), "apply_map mean");
    detail::require_dim(map.K().rows(), in.cov.rows(), "apply_map cov");
    return {map.K() * in.mean + map.y0(), map.K() * in.cov * map.K().transpose() + map.alpha()};
}

inline Moments apply_map(const GaussianMap& map, const GaussianState& state) {
    return apply_map(map, state.moments());
}

/// χ_out(k) = χ_in(Kᵀk) · exp(−¼ kᵀαk + i kᵀy₀).
template <typename CharFn>
Complex apply_map_char(const GaussianMap& map, CharFn&& chi_in, const Vector& k) {
    detail::require_dim(map.K().rows(), k.size(), "apply_map_char");
    const Vector kt = map.K().transpose() * k;
    return chi_in(kt) * std::exp(Complex(-0.25 * k.dot(map.alpha() * k), k.dot(map.y0())));
}

/// second ∘ first: apply `first`, then `second`.
inline GaussianMap compose(const GaussianMap& second, const GaussianMap& first) {
    detail::require_dim(second.K().rows(), first.K().rows(), "compose");
    const Matrix& k2 = second.K();
    return GaussianMap(k2 * first.K(), k2 * first.alpha() * k2.transpose() + second.alpha(),
                       k2 * first.y0() + second.y0());
}

/// K = λ·𝟙, α = 0, y₀ = 0.
inline GaussianMap dilatation(double lambda, int n) {
    if (lambda == 0.0) throw std::invalid_argument("dilatation parameter must be nonzero");
    if (n < 1) throw DimensionError("mode count must be positive");
    return GaussianMap(lambda * Matrix::Identity(2 * n, 2 * n), Matrix::Zero(2 * n, 2 * n));
}

/// Transposition of the listed modes (1-based); an empty list gives the identity.
inline GaussianMap transposition(int n, std::span<const int> modes) {
    if (n < 1) throw DimensionError("mode count must be positive");
    Vector d = Vector::Ones(2 * n);
    for (int mode : modes) {
        if (mode < 1 || mode > n) {
            throw std::out_of_range("mode index " + std::to_string(mode) + " outside 1.." +
                                    std::to_string(n));
        }
        d(2 * (mode - 1) + 1) = -1.0;
    }
    return GaussianMap(Matrix(d.asDiagonal()), Matrix::Zero(2 * n, 2 * n));
}

inline GaussianMap transposition(int n) {
    if (n < 1) throw DimensionError("mode count must be positive");
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) all[static_cast<std::size_t>(j)] = j + 1;
    return transposition(n, all);
}

}  // namespace gaussprobe
