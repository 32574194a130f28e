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

// Fock-basis diagonal of a one-mode phase-space dilatation by λ applied to
// |m⟩⟨m|. With τ = (λ² − 1)/(λ² + 1) and z = e^{-iq}, the coefficients pₙ
// are generated by
//
//   g_m(z) = Σₙ pₙ zⁿ = (1 − τ) (z − τ)^m (1 − τz)^{-(m+1)}.
//
// Negative coefficients of a dilated mixture certify that the mixture is not
// in the convex hull of Gaussian states.

#pragma once

#include "gaussprobe/types.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <numeric>
#include <span>
#include <vector>

namespace gaussprobe {

inline constexpr double kDefaultEpsilon = 1e-12;

struct FockCoefficients {
    int m = 0;
    double lambda = 1.0;
    double tau = 0.0;
    std::vector<double> coeffs;  // p_0 .. p_N
    int truncation_N = 0;
    // Σ_{n>N} |p_n| plus an allowance for rounding the stored p_0..p_N to
    // double, so that |Σ coeffs − 1| ≤ tail_bound holds as computed.
    double tail_bound = 0.0;

    double sum() const {
        return static_cast<double>(std::accumulate(coeffs.begin(), coeffs.end(), 0.0L));
    }
};

enum class ProbeVerdict { certified_not_in_convex_hull, no_negativity_found };

inline const char* to_string(ProbeVerdict v) {
    return v == ProbeVerdict::certified_not_in_convex_hull ? "certified_not_in_convex_hull"
                                                           : "no_negativity_found";
}

struct ProbeResult {
    double min_coefficient = 0.0;
    std::vector<int> negative_indices;
    ProbeVerdict verdict = ProbeVerdict::no_negativity_found;
    std::vector<double> q;      // output diagonal q_0 .. q_N
    double tail_bound = 0.0;    // weighted sum of the per-state tail bounds
};

inline double tau_of(double lambda) {
    const double l2 = lambda * lambda;
    return (l2 - 1.0) / (l2 + 1.0);
}

namespace detail {

inline void check_lambda(double lambda) {
    if (lambda == 0.0 || !std::isfinite(lambda)) {
        throw std::invalid_argument("dilatation parameter must be finite and nonzero");
    }
}

// log of (1−τ)(1+|τ|)^m Σ_{k>K} C(m+k, m)|τ|^k, or +inf when the terms have
// not started to decrease at k = K+1.
inline double log_tail_bound(int m, double tau, int K) {
    const double t = std::abs(tau);
    const double k = K + 1.0;
    const double ratio = (m + k + 1.0) / (k + 1.0) * t;
    if (ratio >= 1.0) return std::numeric_limits<double>::infinity();
    const double log_term =
        std::lgamma(m + k + 1.0) - std::lgamma(m + 1.0) - std::lgamma(k + 1.0) + k * std::log(t);
    return std::log(1.0 - tau) + m * std::log1p(t) + log_term - std::log1p(-ratio);
}

}  // namespace detail

/// Analytic bound on Σ_{n>N} |pₙ| from expanding (z − τ)^m binomially against
/// the series of (1 − τz)^{-(m+1)}.
inline double tail_bound(int m, double tau, int N) {
    if (tau == 0.0) return 0.0;
    return std::exp(detail::log_tail_bound(m, tau, N - m));
}

/// Smallest N ≥ m whose tail bound is below eps.
inline int truncation_order(int m, double tau, double eps = kDefaultEpsilon) {
    if (tau == 0.0) return m;
    const double log_eps = std::log(eps);
    int K = 0;
    while (!(detail::log_tail_bound(m, tau, K) < log_eps)) ++K;
    return m + K;
}

/// Coefficients for every m in 0..m_max, each truncated at its own N.
///
/// g_m = g_{m−1}·(z − τ)/(1 − τz), so b = a·(z − τ)/(1 − τz) obeys
/// bₙ = τ bₙ₋₁ + aₙ₋₁ − τ aₙ. The recurrence is causal (bₙ needs a₀..aₙ
/// only), which lets all m share one buffer of length N(m_max) + 1.
inline std::vector<FockCoefficients> dilated_fock_coefficients_upto(int m_max, double lambda,
                                                                   double eps = kDefaultEpsilon) {
    if (m_max < 0) throw std::invalid_argument("Fock index must be nonnegative");
    detail::check_lambda(lambda);
    if (!(eps > 0.0)) throw std::invalid_argument("precision must be positive");
    const double tau = std::abs(lambda) == 1.0 ? 0.0 : tau_of(lambda);

    std::vector<FockCoefficients> out;
    out.reserve(static_cast<std::size_t>(m_max + 1));
    std::vector<int> orders(static_cast<std::size_t>(m_max + 1));
    for (int m = 0; m <= m_max; ++m) orders[static_cast<std::size_t>(m)] = truncation_order(m, tau, eps);
    const auto len = static_cast<std::size_t>(*std::max_element(orders.begin(), orders.end()) + 1);

    const long double t = tau;
    std::vector<long double> a(len), b(len);
    long double p = 1.0L - t;
    for (std::size_t k = 0; k < len; ++k, p *= t) a[k] = p;

    for (int m = 0; m <= m_max; ++m) {
        if (m > 0) {
            b[0] = -t * a[0];
            for (std::size_t k = 1; k < len; ++k) b[k] = t * b[k - 1] + a[k - 1] - t * a[k];
            a.swap(b);
        }
        FockCoefficients fc;
        fc.m = m;
        fc.lambda = lambda;
        fc.tau = tau;
        fc.truncation_N = orders[static_cast<std::size_t>(m)];
        fc.coeffs.assign(a.begin(), a.begin() + fc.truncation_N + 1);
        if (tau != 0.0) {
            long double l1 = 0.0L;
            for (double c : fc.coeffs) l1 += std::abs(c);
            fc.tail_bound = tail_bound(m, tau, fc.truncation_N) +
                            2.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(l1);
        }
        out.push_back(std::move(fc));
    }
    return out;
}

/// pₙ, n = 0..N, for the dilatation of |m⟩⟨m| by λ. λ = ±1 gives δₙₘ.
inline FockCoefficients dilated_fock_coefficients(int m, double lambda,
                                                  double eps = kDefaultEpsilon) {
    if (m < 0) throw std::invalid_argument("Fock index must be nonnegative");
    auto all = dilated_fock_coefficients_upto(m, lambda, eps);
    return std::move(all.back());
}

/// Σₙ |pₙ| over the computed range.
inline double trace_norm_sum(int m, double lambda, double eps = kDefaultEpsilon) {
    const auto fc = dilated_fock_coefficients(m, lambda, eps);
    double s = 0.0;
    for (double p : fc.coeffs) s += std::abs(p);
    return s;
}

/// Σₙ pₙ², which should equal 1/λ².
inline double hs_norm_check(int m, double lambda, double eps = kDefaultEpsilon) {
    const auto fc = dilated_fock_coefficients(m, lambda, eps);
    double s = 0.0;
    for (double p : fc.coeffs) s += p * p;
    return s;
}

/// Diagonal of the dilated mixture Σₘ cₘ|m⟩⟨m|, certified when some entry is
/// below minus the combined truncation bound.
inline ProbeResult probe_fock_mixture(std::span<const double> weights, double lambda,
                                      double eps = kDefaultEpsilon) {
    if (weights.empty()) throw std::invalid_argument("weights must be nonempty");
    double total = 0.0;
    for (double c : weights) {
        if (!(c >= 0.0)) throw std::invalid_argument("weights must be nonnegative");
        total += c;
    }
    if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("weights must sum to 1");
    if (!(std::abs(lambda) > 1.0)) throw std::invalid_argument("probe requires |lambda| > 1");

    const int m_max = static_cast<int>(weights.size()) - 1;
    const auto all = dilated_fock_coefficients_upto(m_max, lambda, eps);
    int n_max = 0;
    for (const auto& fc : all) n_max = std::max(n_max, fc.truncation_N);

    ProbeResult res;
    res.q.assign(static_cast<std::size_t>(n_max + 1), 0.0);
    std::vector<long double> acc(res.q.size(), 0.0L);
    for (int m = 0; m <= m_max; ++m) {
        const double c = weights[static_cast<std::size_t>(m)];
        if (c == 0.0) continue;
        const auto& fc = all[static_cast<std::size_t>(m)];
        for (std::size_t n = 0; n < fc.coeffs.size(); ++n) acc[n] += c * static_cast<long double>(fc.coeffs[n]);
        res.tail_bound += c * fc.tail_bound;
    }
    // Entries past a state's own truncation are within its tail bound.
    for (std::size_t n = 0; n < acc.size(); ++n) res.q[n] = static_cast<double>(acc[n]);
    res.min_coefficient = *std::min_element(res.q.begin(), res.q.end());
    for (std::size_t n = 0; n < res.q.size(); ++n) {
        if (res.q[n] < -res.tail_bound) res.negative_indices.push_back(static_cast<int>(n));
    }
    res.verdict = res.negative_indices.empty() ? ProbeVerdict::no_negativity_found
                                               : ProbeVerdict::certified_not_in_convex_hull;
    return res;
}

/// Closed form g_m(q) = Σₙ pₙ e^{-inq}.
inline Complex generating_function(int m, double tau, double q) {
    const Complex eiq = std::polar(1.0, q);
    const Complex pre = (1.0 - tau) / (1.0 - tau * std::conj(eiq));
    const Complex ratio = (1.0 - tau * eiq) / (eiq - tau);
    return pre * std::pow(ratio, m);
}

/// a_m = (1 − τ) / ∛(mτ(1 + τ)).
inline double airy_scale(int m, double tau) {
    return (1.0 - tau) / std::cbrt(m * tau * (1.0 + tau));
}

/// |g_m(a_m k)·e^{iλ²m a_m k} − e^{ik³/3}|.
///
/// The power is taken as exp(m·log(ratio·e^{iλ²q})); the argument of the log
/// stays near 1 for the small q = a_m k of interest.
inline double airy_limit_error(double k, int m, double lambda) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    if (!(lambda > 1.0)) throw std::invalid_argument("airy limit requires lambda > 1");
    const double tau = tau_of(lambda);
    const double q = airy_scale(m, tau) * k;
    const Complex eiq = std::polar(1.0, q);
    const Complex pre = (1.0 - tau) / (1.0 - tau * std::conj(eiq));
    const Complex ratio = (1.0 - tau * eiq) / (eiq - tau) * std::polar(1.0, lambda * lambda * q);
    const Complex value = pre * std::exp(static_cast<double>(m) * std::log(ratio));
    return std::abs(value - std::polar(1.0, k * k * k / 3.0));
}

}  // namespace gaussprobe
