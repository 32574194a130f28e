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

// Classification of linear phase-space maps (K, α, y₀):
//
//   Gaussian-to-Gaussian (g2g):  KσKᵀ + α ≥ ±iΔ for every σ ≥ ±iΔ
//   completely positive (CP):    α ≥ ±i(Δ − Δ_K),  Δ_K = KΔKᵀ
//   classical:                   α ≥ 0
//
// together with the one-mode normal form, the no-noise normal form, and the
// factoring test through a dilatation (and optional transposition).

#pragma once

#include "gaussprobe/gaussian.hpp"
#include "gaussprobe/nelder_mead.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace gaussprobe {

enum class Method {
    one_mode_determinant,
    multimode_minimization,
    cp_implies_g2g,
    homogeneous_shortcut,
    alpha_indefinite,
};

inline std::string_view to_string(Method m) {
    switch (m) {
        case Method::one_mode_determinant: return "one_mode_determinant";
        case Method::multimode_minimization: return "multimode_minimization";
        case Method::cp_implies_g2g: return "cp_implies_g2g";
        case Method::homogeneous_shortcut: return "homogeneous_shortcut";
        case Method::alpha_indefinite: return "alpha_indefinite";
    }
    return "unknown";
}

enum class Status { conclusive, inconclusive };

/// Settings for the multistart search over the unit sphere of ℂ²ⁿ.
struct OptimizationBudget {
    int restarts = 64;
    int evals_per_restart = 10000;
    std::uint64_t seed = 0;
};

/// A vector w with |w†Δ_K w| + w†αw − |w†Δw| < 0 certifies the map is not g2g.
struct Witness {
    CVector w;
    double objective = 0.0;
};

struct ClassificationReport {
    bool is_g2g = false;
    bool is_cp = false;
    bool is_classical_g2g = false;
    std::optional<Witness> witness;
    double margin = 0.0;       // smallest value of the feasibility objective found
    double lower_bound = 0.0;  // certified lower bound on that objective
    Method method = Method::one_mode_determinant;
    Status status = Status::conclusive;
};

/// Δ_K = KΔKᵀ.
inline Matrix delta_K(const GaussianMap& map) {
    const Matrix d = delta(map.modes());
    Matrix dk = map.K() * d * map.K().transpose();
    return 0.5 * (dk - dk.transpose());
}

namespace detail {

inline CMatrix hermitian(const Matrix& sym, const Matrix& antisym) {
    CMatrix h(sym.rows(), sym.cols());
    h.real() = sym;
    h.imag() = antisym;
    return h;
}

inline double min_eigenvalue(const CMatrix& h) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

inline double min_eigenvalue(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

inline double min_eigenvalue_cp(const GaussianMap& map) {
    return min_eigenvalue(hermitian(map.alpha(), delta(map.modes()) - delta_K(map)));
}

// Maximizes a unimodal function on [lo, hi] by golden-section search and
// returns {argmax, max}.
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iters = 90) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++i) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    std::pair<double, double> best{c, fc};
    if (fd > best.second) best = {d, fd};
    for (double x : {lo, hi}) {
        const double fx = f(x);
        if (fx > best.second) best = {x, fx};
    }
    return best;
}

}  // namespace detail

/// |w†Δ_K w| + w†αw − |w†Δw| for normalized w.
inline double feasibility_objective(const Matrix& dk, const Matrix& alpha, const CVector& w) {
    const Matrix d = delta(static_cast<int>(w.size() / 2));
    const CVector wn = w / w.norm();
    const Complex qk = wn.dot(dk.cast<Complex>() * wn);
    const Complex qa = wn.dot(alpha.cast<Complex>() * wn);
    const Complex qd = wn.dot(d.cast<Complex>() * wn);
    return std::abs(qk) + qa.real() - std::abs(qd);
}

struct FeasibilitySearch {
    double minimum = std::numeric_limits<double>::infinity();
    CVector argmin;
    int best_restart = -1;
    int evaluations = 0;
    bool all_converged = true;
};

/// Seeded multistart Nelder–Mead over w ∈ ℂ²ⁿ, parameterized as x ∈ ℝ⁴ⁿ with
/// w = (x[0:2n] + i·x[2n:4n]) / |x|. Restart r draws its start from a
/// generator seeded with (seed, r), so results do not depend on scheduling.
inline FeasibilitySearch minimize_feasibility(const GaussianMap& map,
                                              const OptimizationBudget& budget = {}) {
    const int n = map.modes();
    const int m = 2 * n;
    const Matrix dk = delta_K(map);
    const Matrix d = delta(n);
    const Matrix& alpha = map.alpha();

    // For w = w1 + i w2 and antisymmetric A, w†Aw = 2i·w1ᵀAw2.
    auto objective = [&](const Vector& x) {
        const auto w1 = x.head(m);
        const auto w2 = x.tail(m);
        const double nrm = x.squaredNorm();
        if (nrm == 0.0) return std::numeric_limits<double>::infinity();
        const double qa = w1.dot(alpha * w1) + w2.dot(alpha * w2);
        const double qk = 2.0 * std::abs(w1.dot(dk * w2));
        const double qd = 2.0 * std::abs(w1.dot(d * w2));
        return (qa + qk - qd) / nrm;
    };

    FeasibilitySearch out;
    const double scale = std::max({1.0, max_abs(alpha), max_abs(dk)});
    for (int r = 0; r < budget.restarts; ++r) {
        std::seed_seq seq{static_cast<std::uint32_t>(budget.seed & 0xffffffffu),
                          static_cast<std::uint32_t>(budget.seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        std::normal_distribution<double> gauss;
        Vector x0(2 * m);
        for (int i = 0; i < 2 * m; ++i) x0(i) = gauss(rng);
        x0.normalize();

        NelderMeadOptions opt;
        opt.max_evals = budget.evals_per_restart;
        opt.ftol = 1e-15 * scale;
        opt.xtol = 1e-10;
        opt.initial_step = 0.5;
        auto res = nelder_mead(objective, x0, opt);
        int used = res.evaluations;
        // One polish from the best vertex with a fresh, smaller simplex.
        if (used < budget.evals_per_restart) {
            opt.max_evals = budget.evals_per_restart - used;
            opt.initial_step = 0.05;
            auto polish = nelder_mead(objective, Vector(res.x.normalized()), opt);
            used += polish.evaluations;
            if (polish.value <= res.value) {
                polish.evaluations = used;
                res = polish;
            } else {
                res.converged = res.converged && polish.converged;
            }
        }
        out.evaluations += used;
        out.all_converged = out.all_converged && res.converged;
        if (res.value < out.minimum) {
            out.minimum = res.value;
            out.best_restart = r;
            const Vector xn = res.x.normalized();
            CVector w(m);
            w.real() = xn.head(m);
            w.imag() = xn.tail(m);
            out.argmin = w;
        }
    }
    return out;
}

/// Certified lower bound on the minimum of the feasibility objective:
///
///   min_w f = min_{s=±1} max_{t∈[−1,1]} λ_min(α − s·iΔ + t·iΔ_K).
///
/// Any t gives a lower bound. Equality holds because the joint numerical range
/// of two Hermitian forms is convex, and the inner function is concave in t.
inline double feasibility_lower_bound(const GaussianMap& map) {
    const Matrix dk = delta_K(map);
    const Matrix d = delta(map.modes());
    double bound = std::numeric_limits<double>::infinity();
    for (double s : {1.0, -1.0}) {
        auto h = [&](double t) {
            return detail::min_eigenvalue(detail::hermitian(map.alpha(), t * dk - s * d));
        };
        bound = std::min(bound, detail::golden_max(h, -1.0, 1.0).second);
    }
    return bound;
}

/// α + i(Δ − Δ_K) ⪰ 0 within tol.
inline bool is_cp(const GaussianMap& map, double tol = kDefaultTol) {
    return detail::min_eigenvalue_cp(map) >= -tol;
}

/// α ⪰ 0 within tol.
inline bool is_classical_g2g(const GaussianMap& map, double tol = kDefaultTol) {
    return detail::min_eigenvalue(map.alpha()) >= -tol * std::max(1.0, max_abs(map.alpha()));
}

/// √det α − (1 − |det K|) for one mode; nonnegative iff g2g.
inline double one_mode_determinant_margin(const GaussianMap& map) {
    const double det_a = map.alpha().determinant();
    return std::sqrt(std::max(det_a, 0.0)) - (1.0 - std::abs(map.K().determinant()));
}

namespace detail {

inline ClassificationReport g2g_one_mode(const GaussianMap& map, double tol) {
    ClassificationReport rep;
    rep.method = Method::one_mode_determinant;
    const bool alpha_psd = is_classical_g2g(map, tol);
    rep.is_g2g = alpha_psd && one_mode_determinant_margin(map) >= -tol;

    // Exact minimum of the feasibility objective: with c = 1 − |det K| the
    // objective is w†αw − c|w†Δw|, minimized by an eigenvector of α − c·iΔ.
    const double c = 1.0 - std::abs(map.K().determinant());
    const Matrix d = delta(1);
    const CMatrix h = hermitian(map.alpha(), c > 0.0 ? Matrix(-c * d) : Matrix(Matrix::Zero(2, 2)));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    rep.margin = es.eigenvalues()(0);
    rep.lower_bound = rep.margin;
    if (!rep.is_g2g) {
        Witness w{es.eigenvectors().col(0), 0.0};
        w.objective = feasibility_objective(delta_K(map), map.alpha(), w.w);
        rep.witness = w;
    }
    return rep;
}

}  // namespace detail

/// Gaussian-to-Gaussian test. One mode uses the exact determinant criterion;
/// more modes try the CP and α ⊁ 0 shortcuts, then the multistart search,
/// with the concave lower bound deciding whether "no violator found" is a
/// certified verdict or inconclusive.
inline ClassificationReport is_g2g(const GaussianMap& map, double tol = kDefaultTol,
                                   const OptimizationBudget& budget = {}) {
    if (map.modes() == 1) return detail::g2g_one_mode(map, tol);

    ClassificationReport rep;
    Eigen::SelfAdjointEigenSolver<Matrix> ea(map.alpha());
    if (ea.eigenvalues()(0) < -tol * std::max(1.0, max_abs(map.alpha()))) {
        // A real w sees neither Δ nor Δ_K, so f(w) = wᵀαw.
        rep.method = Method::alpha_indefinite;
        rep.is_g2g = false;
        rep.margin = rep.lower_bound = ea.eigenvalues()(0);
        rep.witness = Witness{ea.eigenvectors().col(0).cast<Complex>(), ea.eigenvalues()(0)};
        return rep;
    }
    if (is_cp(map, tol)) {
        rep.method = Method::cp_implies_g2g;
        rep.is_g2g = true;
        rep.margin = rep.lower_bound = feasibility_lower_bound(map);
        return rep;
    }

    rep.method = Method::multimode_minimization;
    const auto search = minimize_feasibility(map, budget);
    rep.margin = search.minimum;
    if (search.minimum < -tol) {
        rep.is_g2g = false;
        Witness w{search.argmin, 0.0};
        w.objective = feasibility_objective(delta_K(map), map.alpha(), w.w);
        rep.witness = w;
        rep.lower_bound = feasibility_lower_bound(map);
        return rep;
    }
    rep.lower_bound = feasibility_lower_bound(map);
    if (rep.lower_bound >= -tol) {
        rep.is_g2g = true;
    } else {
        rep.status = Status::inconclusive;
        rep.is_g2g = false;
    }
    return rep;
}

/// All verdicts at once; `status` is inconclusive when the g2g test is.
inline ClassificationReport classify(const GaussianMap& map, double tol = kDefaultTol,
                                     const OptimizationBudget& budget = {}) {
    ClassificationReport rep = is_g2g(map, tol, budget);
    rep.is_cp = is_cp(map, tol);
    rep.is_classical_g2g = is_classical_g2g(map, tol);
    return rep;
}

// ---------------------------------------------------------------------------
// Normal forms

enum class NormalFormKind {
    cp_only,
    dilatation_then_cp,
    transpose_then_cp,
    dilatation_transpose_then_cp,
    homogeneous,
    none,
};

inline std::string_view to_string(NormalFormKind k) {
    switch (k) {
        case NormalFormKind::cp_only: return "cp_only";
        case NormalFormKind::dilatation_then_cp: return "dilatation_then_cp";
        case NormalFormKind::transpose_then_cp: return "transpose_then_cp";
        case NormalFormKind::dilatation_transpose_then_cp: return "dilatation_transpose_then_cp";
        case NormalFormKind::homogeneous: return "homogeneous";
        case NormalFormKind::none: return "none";
    }
    return "unknown";
}

/// K = S · (T if transposed) · λ𝟙, followed by the noise α and displacement y₀.
///
/// For the dilatation kinds and `homogeneous`, S is symplectic. For `cp_only`
/// and `transpose_then_cp`, S is the linear part of the completely positive
/// residual and need not be symplectic.
struct NormalForm {
    NormalFormKind kind = NormalFormKind::none;
    double lambda = 1.0;
    bool transposed = false;
    Matrix S;
    Matrix alpha;
    Vector y0;
    std::string note;

    GaussianMap residual() const { return GaussianMap(S, alpha, y0); }
};

inline Matrix recompose(const NormalForm& nf) {
    const int n = static_cast<int>(nf.S.rows() / 2);
    Matrix k = nf.S * nf.lambda;
    if (nf.transposed) k = k * transposition_matrix(n);
    return k;
}

/// One-mode normal form by the sign and size of det K:
///   a1  0 ≤ det K ≤ 1   CP as it stands
///   a2  det K > 1       dilatation √det K, then S = K/√det K, then noise
///   b1 −1 ≤ det K < 0   transposition, then the CP map K·T
///   b2  det K < −1      dilatation √|det K|, transposition, S = K·T/√|det K|
/// Boundaries within tol resolve toward the CP side.
inline NormalForm decompose_one_mode(const GaussianMap& map, double tol = kDefaultTol) {
    if (map.modes() != 1) throw DimensionError("decompose_one_mode requires a one-mode map");
    if (!is_g2g(map, tol).is_g2g) throw NotG2GError("map is not Gaussian-to-Gaussian");

    NormalForm nf;
    nf.alpha = map.alpha();
    nf.y0 = map.y0();
    const double det = map.K().determinant();
    const Matrix t = transposition_matrix(1);
    if (det >= -tol && det <= 1.0 + tol) {
        nf.kind = NormalFormKind::cp_only;
        nf.S = map.K();
    } else if (det > 1.0 + tol) {
        nf.kind = NormalFormKind::dilatation_then_cp;
        nf.lambda = std::sqrt(det);
        nf.S = map.K() / nf.lambda;
    } else if (det >= -1.0 - tol) {
        nf.kind = NormalFormKind::transpose_then_cp;
        nf.transposed = true;
        nf.S = map.K() * t;
    } else {
        nf.kind = NormalFormKind::dilatation_transpose_then_cp;
        nf.transposed = true;
        nf.lambda = std::sqrt(-det);
        nf.S = map.K() * t / nf.lambda;
    }
    return nf;
}

/// Noise-free normal form K = S·κ𝟙 or K = S·T·κ𝟙 with κ ≥ 1, which exists
/// exactly when Δ_K = cΔ with |c| ≥ 1 (κ = √|c|, transposed iff c < 0).
inline NormalForm decompose_no_noise(const GaussianMap& map, double tol = kDefaultTol) {
    if (max_abs(map.alpha()) > tol) {
        throw std::invalid_argument("decompose_no_noise requires alpha = 0");
    }
    const int n = map.modes();
    const Matrix d = delta(n);
    const Matrix dk = delta_K(map);
    NormalForm nf;
    nf.alpha = map.alpha();
    nf.y0 = map.y0();
    nf.S = map.K();

    const double c = (dk.cwiseProduct(d)).sum() / static_cast<double>(2 * n);
    if (max_abs(dk - c * d) > tol * std::max(1.0, max_abs(dk))) {
        nf.note = "K Delta K^T is not proportional to Delta; with alpha = 0 the map is not Gaussian-to-Gaussian";
        return nf;
    }
    if (std::abs(c) < 1.0 - tol) {
        nf.note = "K Delta K^T = c Delta with |c| < 1; the map contracts and is not Gaussian-to-Gaussian";
        return nf;
    }
    nf.kind = NormalFormKind::homogeneous;
    nf.lambda = std::sqrt(std::abs(c));
    nf.transposed = c < 0.0;
    nf.S = nf.transposed ? Matrix(map.K() * transposition_matrix(n) / nf.lambda)
                         : Matrix(map.K() / nf.lambda);
    if (!is_symplectic(nf.S, std::max(tol, 1e-12))) {
        nf.kind = NormalFormKind::none;
        nf.note = "recovered factor failed the symplectic check";
    }
    return nf;
}

/// inf over valid σ of w†σw, which equals |w†Δw|.
inline double state_quadratic_infimum(const CVector& w) {
    if (w.size() == 0 || w.size() % 2 != 0) throw DimensionError("w must have even length");
    if (w.norm() == 0.0) throw std::invalid_argument("w must be nonzero");
    const Matrix d = delta(static_cast<int>(w.size() / 2));
    return std::abs(w.dot(d.cast<Complex>() * w));
}

/// (μK, α, y₀): g2g on all states iff the original is g2g on states whose
/// symplectic eigenvalues are at least μ².
inline GaussianMap rescale_domain(const GaussianMap& map, double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    return GaussianMap(mu * map.K(), map.alpha(), map.y0());
}

/// Two modes: √ν·(𝟙₂ ⊕ T₂) with vacuum noise. g2g for every ν > 0, CP for none.
inline GaussianMap partial_transpose_example(double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("nu must be positive");
    Vector d(4);
    d << 1.0, 1.0, 1.0, -1.0;
    return GaussianMap(Matrix(std::sqrt(nu) * d.asDiagonal()), Matrix::Identity(4, 4));
}

/// Two modes: exchange of Q¹ and Q² with the first momentum flipped, scaled by
/// √ν, with vacuum noise. g2g for every ν > 0, CP for none.
inline GaussianMap q_exchange_example(double nu) {
    if (!(nu > 0.0)) throw std::invalid_argument("nu must be positive");
    Matrix k = Matrix::Zero(4, 4);
    k(0, 2) = 1.0;
    k(1, 1) = -1.0;
    k(2, 0) = 1.0;
    k(3, 3) = 1.0;
    return GaussianMap(std::sqrt(nu) * k, Matrix::Identity(4, 4));
}

struct HomogeneousFactoring {
    double lambda = 1.0;
    bool transposed = false;
    GaussianMap residual;  // (K', α, y₀) with K = K'·(T)·λ𝟙
};

/// Looks for λ ≥ 1 and a transposition flag with K = K'·(T)·λ𝟙 and (K', α, y₀)
/// CP. Since Δ_{K'} = ±Δ_K/λ², the CP margin
///   h(s) = λ_min(α + iΔ ∓ s·iΔ_K),  s = 1/λ²
/// is concave in s, hence unimodal in λ². The scan covers λ² ∈ [1, λ²_max]
/// with λ²_max = max|Δ_K| / max|Δ| + 1 on 10³ grid points, refined by
/// golden-section search around the best grid point.
inline std::optional<HomogeneousFactoring> homogeneous_factoring_check(const GaussianMap& map,
                                                                       double tol = kDefaultTol) {
    const int n = map.modes();
    const Matrix d = delta(n);
    const Matrix dk = delta_K(map);
    const double l2_max = max_abs(dk) / max_abs(d) + 1.0;
    constexpr int kGrid = 1000;

    for (const bool transposed : {false, true}) {
        const double sign = transposed ? -1.0 : 1.0;
        auto margin = [&](double l2) {
            return detail::min_eigenvalue(detail::hermitian(map.alpha(), d - (sign / l2) * dk));
        };
        int best_i = 0;
        double best_v = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < kGrid; ++i) {
            const double l2 = 1.0 + (l2_max - 1.0) * i / (kGrid - 1);
            const double v = margin(l2);
            if (v > best_v) {
                best_v = v;
                best_i = i;
            }
        }
        const double step = (l2_max - 1.0) / (kGrid - 1);
        const double lo = 1.0 + step * std::max(0, best_i - 1);
        const double hi = std::min(l2_max, 1.0 + step * (best_i + 1));
        auto [l2, v] = detail::golden_max(margin, lo, hi);
        if (v >= -tol) {
            const double lambda = std::sqrt(l2);
            Matrix kp = map.K() / lambda;
            if (transposed) kp = kp * transposition_matrix(n);
            return HomogeneousFactoring{lambda, transposed, GaussianMap(kp, map.alpha(), map.y0())};
        }
    }
    return std::nullopt;
}

}  // namespace gaussprobe
