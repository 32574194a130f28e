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

// Classifies a few one- and two-mode maps and prints their verdicts.

#include "gaussprobe/classify.hpp"

#include <iostream>

int main() {
    using namespace gaussprobe;
    struct Named {
        const char* name;
        GaussianMap map;
    };
    const Named maps[] = {
        {"dilatation(2)", dilatation(2.0, 1)},
        {"dilatation(1/2)", dilatation(0.5, 1)},
        {"transposition", transposition(1)},
        {"attenuator", GaussianMap(0.5 * Matrix::Identity(2, 2), 0.75 * Matrix::Identity(2, 2))},
        {"partial transpose, nu=1", partial_transpose_example(1.0)},
        {"Q exchange, nu=1", q_exchange_example(1.0)},
    };
    for (const auto& [name, map] : maps) {
        const auto rep = classify(map);
        const auto f = homogeneous_factoring_check(map);
        std::cout << name << ": g2g=" << rep.is_g2g << " cp=" << rep.is_cp
                  << " classical=" << rep.is_classical_g2g << " method=" << to_string(rep.method)
                  << " factoring=" << (f ? std::to_string(f->lambda) : std::string("none")) << '\n';
    }
}
