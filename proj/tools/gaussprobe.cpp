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

#include "gaussprobe/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace gaussprobe;
    CLI::App app{"Classify linear phase-space maps on Gaussian states and probe dilated Fock mixtures"};
    app.set_version_flag("--version", cli::kVersion);
    app.require_subcommand(1);

    cli::Options opt;
    std::uint64_t seed = 0;
    std::string budget = "64x10000";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", opt.tol, "Relative tolerance")->capture_default_str();
        sub->add_option("--report,-o", opt.report, "Write the JSON report to this file");
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "Seed for the multistart search")->capture_default_str();
        sub->add_option("--budget", budget, "Restarts, optionally xEVALS per restart")->capture_default_str();
    };

    std::string map_path, state_path;

    auto* validate = app.add_subcommand("validate", "Check a state file's covariance matrix");
    validate->add_option("state", state_path, "State JSON file")->required();
    add_common(validate);

    auto* classify = app.add_subcommand("classify", "Classify a map: g2g, CP, classical");
    classify->add_option("map", map_path, "Map JSON file")->required();
    add_common(classify);
    add_search(classify);

    auto* decompose = app.add_subcommand("decompose", "Normal form of a map");
    decompose->add_option("map", map_path, "Map JSON file")->required();
    add_common(decompose);
    add_search(decompose);

    auto* apply = app.add_subcommand("apply", "Apply a map to a state's moments");
    apply->add_option("map", map_path, "Map JSON file")->required();
    apply->add_option("state", state_path, "State JSON file")->required();
    add_common(apply);

    std::vector<double> weights;
    double lambda = 2.0;
    auto* probe = app.add_subcommand("probe", "Dilate a Fock-diagonal mixture and look for negativity");
    probe->add_option("--weights", weights, "Mixture weights c_0..c_M")->required()->delimiter(',');
    probe->add_option("--lambda", lambda, "Dilatation parameter, |lambda| > 1")->capture_default_str();
    probe->add_option("--epsilon", opt.epsilon, "Truncation precision")->capture_default_str();
    probe->add_option("--csv", opt.csv, "Write (n, q_n, tail_bound) rows here");
    add_common(probe);

    double k = 1.0;
    std::vector<int> m_list{100, 1000, 10000};
    auto* limit = app.add_subcommand("limit-check", "Error curve of the scaled generating-function limit");
    limit->add_option("--lambda", lambda, "Dilatation parameter, lambda > 1")->capture_default_str();
    limit->add_option("--k", k, "Fourier variable")->capture_default_str();
    limit->add_option("--m-list", m_list, "Fock indices")->delimiter(',')->capture_default_str();
    limit->add_option("--csv", opt.csv, "Write (m, error) rows here; stdout when omitted");
    add_common(limit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kIoOrSchema;
    }

    try {
        opt.budget = cli::parse_budget(budget, seed);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kIoOrSchema;
    }

    if (*validate) return cli::cmd_validate(state_path, opt, std::cout, std::cerr);
    if (*classify) return cli::cmd_classify(map_path, opt, std::cout, std::cerr);
    if (*decompose) return cli::cmd_decompose(map_path, opt, std::cout, std::cerr);
    if (*apply) return cli::cmd_apply(map_path, state_path, opt, std::cout, std::cerr);
    if (*probe) return cli::cmd_probe(weights, lambda, opt, std::cout, std::cerr);
    if (*limit) return cli::cmd_limit_check(lambda, k, m_list, opt, std::cout, std::cerr);
    return cli::kIoOrSchema;
}
