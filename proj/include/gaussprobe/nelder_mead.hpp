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

#pragma once

#include "gaussprobe/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace gaussprobe {

struct NelderMeadResult {
    Vector x;
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;
};

struct NelderMeadOptions {
    int max_evals = 10000;
    double initial_step = 0.5;
    double ftol = 1e-14;  // absolute spread of vertex values
    double xtol = 1e-10;  // simplex diameter, relative to max(1, |x_best|)
};

/// Derivative-free simplex minimization with dimension-adaptive coefficients
/// (reflection 1, expansion 1 + 2/d, contraction 3/4 − 1/(2d), shrink 1 − 1/d).
template <typename F>
NelderMeadResult nelder_mead(F&& f, const Vector& x0, const NelderMeadOptions& opt = {}) {
    const auto d = static_cast<int>(x0.size());
    const double dd = static_cast<double>(d);
    const double c_refl = 1.0;
    const double c_exp = d > 1 ? 1.0 + 2.0 / dd : 2.0;
    const double c_con = d > 1 ? 0.75 - 0.5 / dd : 0.5;
    const double c_shr = d > 1 ? 1.0 - 1.0 / dd : 0.5;

    NelderMeadResult res;
    std::vector<Vector> pts(static_cast<std::size_t>(d + 1), x0);
    std::vector<double> val(static_cast<std::size_t>(d + 1));
    for (int i = 0; i < d; ++i) pts[static_cast<std::size_t>(i + 1)](i) += opt.initial_step;
    for (std::size_t i = 0; i < pts.size(); ++i) val[i] = f(pts[i]);
    res.evaluations = d + 1;

    std::vector<std::size_t> order(pts.size());
    while (true) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return val[a] < val[b] || (val[a] == val[b] && a < b);
        });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[order.size() - 2];

        double diam = 0.0;
        for (const auto& p : pts) diam = std::max(diam, (p - pts[best]).cwiseAbs().maxCoeff());
        const double scale = std::max(1.0, pts[best].cwiseAbs().maxCoeff());
        if (val[worst] - val[best] <= opt.ftol && diam <= opt.xtol * scale) {
            res.converged = true;
            break;
        }
        if (res.evaluations >= opt.max_evals) break;

        Vector centroid = Vector::Zero(d);
        for (std::size_t i : order) {
            if (i != worst) centroid += pts[i];
        }
        centroid /= dd;

        const Vector xr = centroid + c_refl * (centroid - pts[worst]);
        const double fr = f(xr);
        ++res.evaluations;
        if (fr < val[best]) {
            const Vector xe = centroid + c_exp * (xr - centroid);
            const double fe = f(xe);
            ++res.evaluations;
            if (fe < fr) {
                pts[worst] = xe;
                val[worst] = fe;
            } else {
                pts[worst] = xr;
                val[worst] = fr;
            }
            continue;
        }
        if (fr < val[second_worst]) {
            pts[worst] = xr;
            val[worst] = fr;
            continue;
        }
        const bool outside = fr < val[worst];
        const Vector xc = outside ? Vector(centroid + c_con * (xr - centroid))
                                  : Vector(centroid + c_con * (pts[worst] - centroid));
        const double fc = f(xc);
        ++res.evaluations;
        if (fc < (outside ? fr : val[worst])) {
            pts[worst] = xc;
            val[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i == best) continue;
            pts[i] = pts[best] + c_shr * (pts[i] - pts[best]);
            val[i] = f(pts[i]);
            ++res.evaluations;
        }
    }
    const auto it = std::min_element(val.begin(), val.end());
    res.value = *it;
    res.x = pts[static_cast<std::size_t>(it - val.begin())];
    return res;
}

}  // namespace gaussprobe
