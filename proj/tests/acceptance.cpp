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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "gaussprobe/classify.hpp"
#include "gaussprobe/fockprobe.hpp"

#include "support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

using namespace gaussprobe;
using gaussprobe::testing::Rng;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

Matrix rotation(double theta) {
    Matrix r(2, 2);
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return r;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// 1. Determinant criterion vs. the general minimization run on one mode.
Outcome one_mode_oracle() {
    Rng rng(1001);
    const OptimizationBudget budget{8, 2000, 0};
    int compared = 0, disagree = 0, first_bad = -1;
    for (int trial = 0; trial < 10000; ++trial) {
        const Matrix k = gaussprobe::testing::random_matrix(rng, 2, 2, -3, 3);
        const Matrix a = gaussprobe::testing::random_psd_bounded(rng, 2, -3, 3);
        const GaussianMap map(k, a);
        const double margin = one_mode_determinant_margin(map);
        if (std::abs(margin) <= 1e-6) continue;
        ++compared;
        const auto search = minimize_feasibility(map, {budget.restarts, budget.evals_per_restart,
                                                       static_cast<std::uint64_t>(trial)});
        bool verdict;
        if (search.minimum < -kDefaultTol) {
            verdict = false;
        } else {
            verdict = feasibility_lower_bound(map) >= -kDefaultTol;
        }
        if (verdict != (margin >= 0.0)) {
            ++disagree;
            if (first_bad < 0) first_bad = trial;
        }
    }
    return {disagree == 0, fmt("%d non-boundary instances, %d disagreements (first at %d)", compared, disagree, first_bad)};
}

// 2. CP: determinant form vs. eigenvalue form.
Outcome cp_cross_check() {
    Rng rng(1001);
    int compared = 0, disagree = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const Matrix k = gaussprobe::testing::random_matrix(rng, 2, 2, -3, 3);
        const Matrix a = gaussprobe::testing::random_psd_bounded(rng, 2, -3, 3);
        const double m = std::sqrt(std::max(0.0, a.determinant())) - std::abs(1.0 - k.determinant());
        if (std::abs(m) <= 1e-6) continue;
        ++compared;
        disagree += is_cp(GaussianMap(k, a)) != (m >= 0.0);
    }
    return {disagree == 0, fmt("%d non-boundary instances, %d disagreements", compared, disagree)};
}

// 3. One-mode normal form round trip across the four determinant ranges.
Outcome one_mode_round_trip() {
    Rng rng(1003);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int bad_recompose = 0, bad_symplectic = 0, bad_cp = 0, not_g2g = 0;
    int seen[4] = {0, 0, 0, 0};
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int range = trial % 4;
        // a1 [0, 1], a2 (1, 4], b1 [-1, 0), b2 [-4, -1)
        const double mag = (range % 2 == 0) ? 0.02 + 0.96 * u(rng) : 1.05 + 2.95 * u(rng);
        const double target = range < 2 ? mag : -mag;
        Matrix k = gaussprobe::testing::random_matrix(rng, 2, 2, -2, 2);
        if ((k.determinant() > 0) != (target > 0)) k.col(1) *= -1.0;
        k *= std::sqrt(std::abs(target / k.determinant()));

        // Noise with √det α comfortably above 1 − |det K|.
        const double need = std::max(0.0, 1.0 - std::abs(target));
        const double p = 0.1 + 2.0 * u(rng);
        const double q = (need * need * 1.1 + 0.01 * u(rng)) / p;
        Vector ev(2);
        ev << p, q;
        const Matrix r = rotation(6.283185307179586 * u(rng));
        const GaussianMap map(k, Matrix(r * ev.asDiagonal() * r.transpose()));
        if (!is_g2g(map).is_g2g) {
            ++not_g2g;
            continue;
        }
        const auto nf = decompose_one_mode(map);
        seen[static_cast<int>(nf.kind)]++;
        const double rel = max_abs(recompose(nf) - k) / max_abs(k);
        worst = std::max(worst, rel);
        bad_recompose += rel > 1e-9;
        const bool dilated = nf.kind == NormalFormKind::dilatation_then_cp ||
                             nf.kind == NormalFormKind::dilatation_transpose_then_cp;
        if (dilated) bad_symplectic += !is_symplectic(nf.S, 1e-9);
        bad_cp += !is_cp(nf.residual());
    }
    const bool all_ranges = seen[0] && seen[1] && seen[2] && seen[3];
    return {not_g2g == 0 && bad_recompose == 0 && bad_symplectic == 0 && bad_cp == 0 && all_ranges,
            fmt("cases a1/a2/b1/b2 = %d/%d/%d/%d, worst recomposition %.2e, failures: recompose %d, "
                "symplectic %d, residual CP %d, fixture not g2g %d",
                seen[0], seen[1], seen[2], seen[3], worst, bad_recompose, bad_symplectic, bad_cp, not_g2g)};
}

// 4. Noise-free normal form round trip and rejection.
Outcome no_noise_round_trip() {
    Rng rng(1004);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int bad_kappa = 0, bad_flag = 0, bad_s = 0, accepted_perturbed = 0;
    double worst_kappa = 0.0, worst_s = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + trial % 2;
        const bool flag = (trial / 2) % 2 == 1;
        const double kappa = 1.0 + 9.0 * u(rng);
        const Matrix s0 = gaussprobe::testing::random_symplectic(rng, n);
        Matrix k = kappa * s0;
        if (flag) k = k * transposition_matrix(n);
        const auto nf = decompose_no_noise(GaussianMap(k, Matrix::Zero(2 * n, 2 * n)));
        const double ek = std::abs(nf.lambda - kappa);
        worst_kappa = std::max(worst_kappa, ek);
        bad_kappa += nf.kind != NormalFormKind::homogeneous || ek > 1e-9;
        bad_flag += nf.transposed != flag;
        const double es = max_abs(nf.S - s0);
        worst_s = std::max(worst_s, es);
        bad_s += es > 1e-8;

        // Break proportionality: rescale one quadrature of the output.
        Matrix kp = k;
        kp.row(trial % (2 * n)) *= 1.0 + 0.01 + 0.2 * u(rng);
        accepted_perturbed += decompose_no_noise(GaussianMap(kp, Matrix::Zero(2 * n, 2 * n))).kind != NormalFormKind::none;
    }
    return {bad_kappa == 0 && bad_flag == 0 && bad_s == 0 && accepted_perturbed == 0,
            fmt("worst |kappa error| %.2e, worst |S error| %.2e; failures: kappa %d, flag %d, S %d, perturbed accepted %d/1000",
                worst_kappa, worst_s, bad_kappa, bad_flag, bad_s, accepted_perturbed)};
}

std::vector<double> spectrum_of_i(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(Complex(0, 1) * a.cast<Complex>(), Eigen::EigenvaluesOnly);
    return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

// 5. Counterexample spectra, verdicts, and absence of a factoring.
Outcome counterexamples() {
    bool ok = true;
    std::string detail;
    for (double nu : {0.5, 1.0, 3.0}) {
        const auto pt = partial_transpose_example(nu);
        const auto ev = spectrum_of_i(delta(2) - delta_K(pt));
        const std::vector<double> want{-(1 + nu), -std::abs(1 - nu), std::abs(1 - nu), 1 + nu};
        double err = 0;
        for (int i = 0; i < 4; ++i) err = std::max(err, std::abs(ev[i] - want[i]));
        const auto rep = classify(pt);
        const bool f = homogeneous_factoring_check(pt).has_value();
        ok = ok && err <= 1e-9 && rep.is_g2g && !rep.is_cp && !f;
        detail += fmt("pt(%.1f): spectrum err %.1e g2g=%d cp=%d fact=%d; ", nu, err, rep.is_g2g, rep.is_cp, f);

        const auto qx = q_exchange_example(nu);
        const auto eq = spectrum_of_i(delta(2) - delta_K(qx));
        const double r = std::sqrt(1 + nu * nu);
        double errq = 0;
        for (int i = 0; i < 4; ++i) errq = std::max(errq, std::abs(eq[i] - (i < 2 ? -r : r)));
        const auto repq = classify(qx);
        const bool fq = homogeneous_factoring_check(qx).has_value();
        ok = ok && errq <= 1e-9 && repq.is_g2g && !repq.is_cp && !fq;
        detail += fmt("qx(%.1f): spectrum err %.1e g2g=%d cp=%d fact=%d; ", nu, errq, repq.is_g2g, repq.is_cp, fq);
    }
    return {ok, detail};
}

// 6. Normalization and Parseval for m ≤ 500.
Outcome fock_norms() {
    int bad_sum = 0, bad_hs = 0, checked = 0;
    double worst_ratio = 0.0;
    for (double lambda : {1.2, 2.0, 3.0}) {
        const auto all = dilated_fock_coefficients_upto(500, lambda);
        for (const auto& fc : all) {
            ++checked;
            long double s2 = 0;
            for (double p : fc.coeffs) s2 += static_cast<long double>(p) * p;
            const double e1 = std::abs(fc.sum() - 1.0);
            const double e2 = std::abs(static_cast<double>(s2) - 1.0 / (lambda * lambda));
            bad_sum += e1 > fc.tail_bound;
            bad_hs += e2 > 10 * fc.tail_bound;
            worst_ratio = std::max(worst_ratio, e1 / fc.tail_bound);
        }
    }
    return {bad_sum == 0 && bad_hs == 0,
            fmt("%d (m, lambda) pairs; failures: sum %d, Parseval %d; max |sum-1|/tail_bound = %.3f", checked,
                bad_sum, bad_hs, worst_ratio)};
}

// 7. Negative vacuum entry and probe certificates.
Outcome negativity() {
    const double p0 = dilated_fock_coefficients(1, 2.0).coeffs[0];
    const double oracle = -0.6 * (1.0 - 0.6);  // -τ(1-τ) from extracting the z⁰ coefficient
    int certified = 0;
    for (int m = 1; m <= 50; ++m) {
        std::vector<double> w(static_cast<std::size_t>(m + 1), 0.0);
        w.back() = 1.0;
        certified += probe_fock_mixture(w, 2.0).verdict == ProbeVerdict::certified_not_in_convex_hull;
    }
    return {std::abs(p0 - oracle) <= 1e-12 && certified == 50,
            fmt("p0 = %.17g (|err| %.1e), certified %d/50", p0, std::abs(p0 - oracle), certified)};
}

// 8. Trace-norm growth.
Outcome trace_norm_growth() {
    const double t25 = trace_norm_sum(25, 2.0), t100 = trace_norm_sum(100, 2.0), t400 = trace_norm_sum(400, 2.0);
    return {t25 < t100 && t100 < t400,
            fmt("sum|p| = %.6f (m=25), %.6f (m=100), %.6f (m=400); exceeds 2 at m=400: %s", t25, t100, t400,
                t400 > 2.0 ? "yes" : "no")};
}

// 9. Scaled generating-function limit.
Outcome airy_limit() {
    bool ok = true;
    std::string detail;
    for (double k : {0.5, 1.0, 2.0}) {
        const double e2 = airy_limit_error(k, 100, 2.0), e3 = airy_limit_error(k, 1000, 2.0),
                     e4 = airy_limit_error(k, 10000, 2.0);
        const bool dec = e2 > e3 && e3 > e4;
        const bool small = e4 < 0.05;
        ok = ok && dec && small;
        detail += fmt("k=%.1f: %.5f > %.5f > %.5f %s, m=1e4 %s 0.05; ", k, e2, e3, e4, dec ? "ok" : "NOT decreasing",
                      small ? "<" : ">=");
    }
    return {ok, detail};
}

// 10. Contraction corollary via rescaled maps.
Outcome contraction() {
    Rng rng(1010);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int counterexamples = 0, g2g_maps = 0, non_g2g = 0, targeted = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const Matrix k = gaussprobe::testing::random_matrix(rng, 2, 2, -1.2, 1.2);
        const Matrix a = gaussprobe::testing::random_psd(rng, 2, 0.8);
        const GaussianMap map(k, a);
        for (double mu : {1.5, 2.0}) {
            const GaussianMap scaled = rescale_domain(map, mu);
            const bool g2g = is_g2g(scaled).is_g2g;
            bool any_invalid = false;
            for (int s = 0; s < 200; ++s) {
                // ν ≥ μ²: a valid σ′ scaled by μ².
                const Matrix sigma =
                    mu * mu * gaussprobe::testing::random_valid_covariance(rng, 1, 1.0, 1.0 + 2.0 * u(rng), 1.0);
                const Matrix out = k * sigma * k.transpose() + a;
                any_invalid = any_invalid || !is_valid_covariance(CovarianceMatrix(out, 1e-8), 1e-9);
            }
            if (g2g) {
                ++g2g_maps;
                counterexamples += any_invalid;
                continue;
            }
            ++non_g2g;
            // The obstruction of the rescaled map K″ = μK, lifted back to the
            // domain: σ′ = t·K″⁻¹αK″⁻ᵀ has ν(σ′) = t√det α / |det K″|, and the
            // output K″σ′K″ᵀ + α = (1 + t)α. Taking t a little above
            // |det K″|/√det α keeps σ′ valid and the output invalid.
            const Matrix kk = scaled.K();
            const double margin = one_mode_determinant_margin(scaled);
            if (std::abs(kk.determinant()) < 1e-6 || a.determinant() < 1e-10 || margin > -1e-6) continue;
            const Matrix kinv = kk.inverse();
            const double slack = std::min(1e-3, -0.5 * margin / std::abs(kk.determinant()));
            const double t = (1 + slack) * std::abs(kk.determinant()) / std::sqrt(a.determinant());
            Matrix sp = t * kinv * a * kinv.transpose();
            sp = 0.5 * (sp + sp.transpose());
            const Matrix sigma = mu * mu * sp;
            ++targeted;
            const bool domain_ok = symplectic_eigenvalues(CovarianceMatrix(sigma))[0] >= mu * mu;
            const Matrix out = k * sigma * k.transpose() + a;
            const bool output_invalid = !is_valid_covariance(CovarianceMatrix(out, 1e-8), 1e-9);
            counterexamples += !(domain_ok && output_invalid);
        }
    }
    return {counterexamples == 0,
            fmt("%d g2g rescaled maps (200 samples each), %d not g2g (%d with a lifted violating state); "
                "counterexamples %d",
                g2g_maps, non_g2g, targeted, counterexamples)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> fn;
        double limit_seconds;  // 0: none beyond the total
    };
    const std::vector<Criterion> criteria{
        {1, "one-mode determinant vs minimization", one_mode_oracle, 120},
        {2, "one-mode CP determinant vs eigenvalue test", cp_cross_check, 0},
        {3, "one-mode normal form round trip", one_mode_round_trip, 0},
        {4, "noise-free normal form round trip", no_noise_round_trip, 0},
        {5, "counterexample spectra and verdicts", counterexamples, 0},
        {6, "Fock normalization and Parseval", fock_norms, 60},
        {7, "negativity certificate", negativity, 0},
        {8, "trace-norm growth", trace_norm_growth, 0},
        {9, "scaled generating-function limit", airy_limit, 0},
        {10, "contraction corollary", contraction, 0},
    };
    int failed = 0;
    const auto start = Clock::now();
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o = c.fn();
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.pass = false;
            o.detail += fmt(" [runtime %.1fs exceeds %.0fs]", secs, c.limit_seconds);
        }
        failed += !o.pass;
        std::printf("%s criterion %2d (%s): %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    const double total = std::chrono::duration<double>(Clock::now() - start).count();
    const bool total_ok = total <= 600;
    std::printf("%s total runtime %.1fs (limit 600s)\n", total_ok ? "PASS" : "FAIL", total);
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 && total_ok ? 0 : 1;
}
