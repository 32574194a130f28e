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

// Command implementations behind the `gaussprobe` executable. Each command
// writes a short human-readable summary to `out`, diagnostics to `err`, the
// JSON report to Options::report when set, and returns the process exit code.

#pragma once

#include "gaussprobe/classify.hpp"
#include "gaussprobe/fockprobe.hpp"
#include "gaussprobe/io.hpp"

#include <chrono>
#include <ctime>
#include <ostream>
#include <string>
#include <vector>

namespace gaussprobe::cli {

using io::json;

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
    kOk = 0,
    kIoOrSchema = 1,
    kInvalid = 2,
    kInconclusive = 3,
    kNoDecomposition = 4,
};

struct Options {
    double tol = kDefaultTol;
    OptimizationBudget budget;
    double epsilon = kDefaultEpsilon;
    std::string csv;
    std::string report;
};

/// "R" or "RxE": R restarts with E evaluations each.
inline OptimizationBudget parse_budget(const std::string& text, std::uint64_t seed) {
    OptimizationBudget b;
    b.seed = seed;
    const auto x = text.find_first_of("xX");
    try {
        std::size_t used = 0;
        b.restarts = std::stoi(text.substr(0, x), &used);
        if (used != (x == std::string::npos ? text.size() : x)) throw std::invalid_argument(text);
        if (x != std::string::npos) {
            const std::string rest = text.substr(x + 1);
            b.evals_per_restart = std::stoi(rest, &used);
            if (used != rest.size()) throw std::invalid_argument(text);
        }
    } catch (const std::logic_error&) {
        throw std::invalid_argument("budget must look like 64 or 64x10000, got '" + text + "'");
    }
    if (b.restarts < 1 || b.evals_per_restart < 1) throw std::invalid_argument("budget must be positive");
    return b;
}

namespace detail {

inline std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline json report_header(const std::string& command, const Options& opt) {
    return json{{"format_version", io::kFormatVersion},
                {"tool", "gaussprobe"},
                {"version", kVersion},
                {"command", command},
                {"seed", opt.budget.seed},
                {"tol", opt.tol},
                {"budget", {{"restarts", opt.budget.restarts}, {"evals_per_restart", opt.budget.evals_per_restart}}},
                {"timestamp", utc_timestamp()}};
}

inline void emit_report(const json& report, const Options& opt) {
    if (!opt.report.empty()) io::write_text_file(opt.report, report.dump(2) + "\n");
}

inline json nu_json(const std::vector<double>& nu) {
    json a = json::array();
    for (double v : nu) a.push_back(v);
    return a;
}

inline json classification_json(const ClassificationReport& rep) {
    json j{{"is_g2g", rep.is_g2g},
           {"is_cp", rep.is_cp},
           {"is_classical_g2g", rep.is_classical_g2g},
           {"margin", rep.margin},
           {"lower_bound", rep.lower_bound},
           {"method", std::string(to_string(rep.method))},
           {"status", rep.status == Status::conclusive ? "conclusive" : "inconclusive"}};
    if (rep.witness) {
        j["witness"] = {{"w", io::complex_to_json(rep.witness->w)}, {"objective", rep.witness->objective}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

inline double relative_residual(const Matrix& approx, const Matrix& exact) {
    return max_abs(approx - exact) / std::max(max_abs(exact), std::numeric_limits<double>::min());
}

inline json normal_form_json(const NormalForm& nf, const Matrix& k) {
    json j{{"kind", std::string(to_string(nf.kind))},
           {"lambda", nf.lambda},
           {"transposed", nf.transposed},
           {"S", io::matrix_to_json(nf.S)},
           {"alpha", io::matrix_to_json(nf.alpha)},
           {"y0", io::vector_to_json(nf.y0)},
           {"S_is_symplectic", is_symplectic(nf.S)},
           {"note", nf.note}};
    if (nf.kind != NormalFormKind::none) j["recomposition_residual"] = relative_residual(recompose(nf), k);
    return j;
}

inline void write_csv(const std::string& path, const std::string& header,
                      const std::vector<std::vector<double>>& rows, std::ostream& out) {
    std::string text = header + "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) text += ',';
            text += io::format_double(row[i]);
        }
        text += '\n';
    }
    if (path.empty() || path == "-") {
        out << text;
    } else {
        io::write_text_file(path, text);
    }
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const io::SchemaError& e) {
        err << "error: " << e.what() << "\n";
        return kIoOrSchema;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kIoOrSchema;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kIoOrSchema;
    }
}

}  // namespace detail

/// Exit 0 when the state file holds a physical covariance, 2 when not.
inline int cmd_validate(const std::string& state_path, const Options& opt, std::ostream& out,
                        std::ostream& err) {
    return detail::guarded(err, [&] {
        const Moments mo = io::read_state_file(state_path);
        const CovarianceMatrix sigma(mo.cov);
        auto report = detail::report_header("validate", opt);
        bool valid = false;
        try {
            const auto nu = symplectic_eigenvalues(sigma, opt.tol);
            valid = nu.front() >= 1.0 - opt.tol;
            report["result"] = {{"valid", valid}, {"positive_semidefinite", true}, {"symplectic_eigenvalues", detail::nu_json(nu)}};
            out << "symplectic eigenvalues:";
            for (double v : nu) out << ' ' << io::format_double(v);
            out << '\n';
        } catch (const IndefiniteError&) {
            report["result"] = {{"valid", false}, {"positive_semidefinite", false}, {"symplectic_eigenvalues", nullptr}};
            out << "covariance is not positive semidefinite\n";
        }
        out << (valid ? "valid" : "invalid") << " covariance matrix\n";
        detail::emit_report(report, opt);
        return valid ? kOk : kInvalid;
    });
}

/// Exit 0 with the full verdict, 3 when the g2g search is inconclusive.
inline int cmd_classify(const std::string& map_path, const Options& opt, std::ostream& out,
                        std::ostream& err) {
    return detail::guarded(err, [&] {
        const GaussianMap map = io::read_map_file(map_path);
        const auto rep = classify(map, opt.tol, opt.budget);
        auto report = detail::report_header("classify", opt);
        report["result"] = detail::classification_json(rep);
        const auto factoring = homogeneous_factoring_check(map, opt.tol);
        if (factoring) {
            report["result"]["factoring"] = {{"lambda", factoring->lambda}, {"transposed", factoring->transposed}};
        } else {
            report["result"]["factoring"] = nullptr;
        }
        out << "g2g: " << (rep.status == Status::inconclusive ? "inconclusive" : rep.is_g2g ? "true" : "false")
            << "\ncp: " << (rep.is_cp ? "true" : "false")
            << "\nclassical: " << (rep.is_classical_g2g ? "true" : "false")
            << "\nmethod: " << to_string(rep.method) << "\nmargin: " << io::format_double(rep.margin)
            << "\nfactoring: " << (factoring ? "lambda=" + io::format_double(factoring->lambda) +
                                                    (factoring->transposed ? " transposed" : "")
                                             : std::string("none"))
            << '\n';
        detail::emit_report(report, opt);
        return rep.status == Status::inconclusive ? kInconclusive : kOk;
    });
}

/// Exit 0 with factors, 2 when not g2g, 3 inconclusive, 4 when no
/// dilatation/transposition factoring exists.
inline int cmd_decompose(const std::string& map_path, const Options& opt, std::ostream& out,
                         std::ostream& err) {
    return detail::guarded(err, [&] {
        const GaussianMap map = io::read_map_file(map_path);
        auto report = detail::report_header("decompose", opt);
        auto finish = [&](const NormalForm& nf, int code) {
            report["result"] = detail::normal_form_json(nf, map.K());
            out << "kind: " << to_string(nf.kind) << "\nlambda: " << io::format_double(nf.lambda)
                << "\ntransposed: " << (nf.transposed ? "true" : "false") << '\n';
            if (nf.kind != NormalFormKind::none) {
                out << "recomposition residual: "
                    << io::format_double(detail::relative_residual(recompose(nf), map.K())) << '\n';
            }
            if (!nf.note.empty()) out << nf.note << '\n';
            detail::emit_report(report, opt);
            return code;
        };

        if (map.modes() == 1) {
            if (!is_g2g(map, opt.tol).is_g2g) {
                NormalForm nf;
                nf.S = map.K();
                nf.alpha = map.alpha();
                nf.y0 = map.y0();
                nf.note = "map is not Gaussian-to-Gaussian";
                return finish(nf, kInvalid);
            }
            return finish(decompose_one_mode(map, opt.tol), kOk);
        }
        if (max_abs(map.alpha()) <= opt.tol) {
            const NormalForm nf = decompose_no_noise(map, opt.tol);
            return finish(nf, nf.kind == NormalFormKind::none ? kInvalid : kOk);
        }

        const auto rep = is_g2g(map, opt.tol, opt.budget);
        NormalForm nf;
        nf.S = map.K();
        nf.alpha = map.alpha();
        nf.y0 = map.y0();
        if (rep.status == Status::inconclusive) {
            nf.note = "Gaussian-to-Gaussian test inconclusive";
            return finish(nf, kInconclusive);
        }
        if (!rep.is_g2g) {
            nf.note = "map is not Gaussian-to-Gaussian";
            return finish(nf, kInvalid);
        }
        const auto f = homogeneous_factoring_check(map, opt.tol);
        if (!f) {
            nf.note = "no dilatation/transposition followed by a completely positive map reproduces this map";
            return finish(nf, kNoDecomposition);
        }
        nf.lambda = f->lambda;
        nf.transposed = f->transposed;
        nf.S = f->residual.K();
        const bool dilated = f->lambda > 1.0 + opt.tol;
        nf.kind = f->transposed ? (dilated ? NormalFormKind::dilatation_transpose_then_cp
                                           : NormalFormKind::transpose_then_cp)
                                : (dilated ? NormalFormKind::dilatation_then_cp : NormalFormKind::cp_only);
        return finish(nf, kOk);
    });
}

/// Prints the output moments; exit 0 when they form a valid state, 2 when not.
inline int cmd_apply(const std::string& map_path, const std::string& state_path, const Options& opt,
                     std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const GaussianMap map = io::read_map_file(map_path);
        const Moments in = io::read_state_file(state_path);
        if (in.mean.size() != map.K().rows()) {
            throw io::SchemaError("map and state have different mode counts");
        }
        const Moments mo = apply_map(map, in);
        const bool valid = is_valid_covariance(CovarianceMatrix(mo.cov), opt.tol);
        auto report = detail::report_header("apply", opt);
        report["result"] = io::state_to_json(mo);
        report["result"]["valid"] = valid;
        out << "mean:";
        for (Eigen::Index i = 0; i < mo.mean.size(); ++i) out << ' ' << io::format_double(mo.mean(i));
        out << "\ncov:\n";
        for (Eigen::Index i = 0; i < mo.cov.rows(); ++i) {
            for (Eigen::Index j = 0; j < mo.cov.cols(); ++j) out << (j ? " " : "  ") << io::format_double(mo.cov(i, j));
            out << '\n';
        }
        out << (valid ? "valid" : "invalid") << " output state\n";
        detail::emit_report(report, opt);
        return valid ? kOk : kInvalid;
    });
}

/// Dilates a Fock-diagonal mixture; CSV columns (n, q_n, tail_bound).
inline int cmd_probe(const std::vector<double>& weights, double lambda, const Options& opt,
                     std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        const ProbeResult res = probe_fock_mixture(weights, lambda, opt.epsilon);
        auto report = detail::report_header("probe", opt);
        json neg = json::array();
        for (int n : res.negative_indices) neg.push_back(n);
        report["result"] = {{"lambda", lambda},
                            {"epsilon", opt.epsilon},
                            {"verdict", to_string(res.verdict)},
                            {"min_coefficient", res.min_coefficient},
                            {"negative_indices", neg},
                            {"tail_bound", res.tail_bound}};
        std::vector<std::vector<double>> rows;
        rows.reserve(res.q.size());
        for (std::size_t n = 0; n < res.q.size(); ++n) {
            rows.push_back({static_cast<double>(n), res.q[n], res.tail_bound});
        }
        if (!opt.csv.empty()) detail::write_csv(opt.csv, "n,q_n,tail_bound", rows, out);
        out << "verdict: " << to_string(res.verdict) << "\nmin q_n: " << io::format_double(res.min_coefficient)
            << "\nq_0: " << io::format_double(res.q.front()) << "\nnegative entries: " << res.negative_indices.size()
            << '\n';
        detail::emit_report(report, opt);
        return kOk;
    });
}

/// CSV columns (m, error) for the scaled generating-function limit.
inline int cmd_limit_check(double lambda, double k, const std::vector<int>& m_list, const Options& opt,
                           std::ostream& out, std::ostream& err) {
    return detail::guarded(err, [&] {
        if (m_list.empty()) throw std::invalid_argument("m list must be nonempty");
        std::vector<std::vector<double>> rows;
        json curve = json::array();
        for (int m : m_list) {
            const double e = airy_limit_error(k, m, lambda);
            rows.push_back({static_cast<double>(m), e});
            curve.push_back({{"m", m}, {"error", e}});
        }
        auto report = detail::report_header("limit-check", opt);
        report["result"] = {{"lambda", lambda}, {"k", k}, {"curve", curve}};
        detail::write_csv(opt.csv, "m,error", rows, out);
        detail::emit_report(report, opt);
        return kOk;
    });
}

}  // namespace gaussprobe::cli
