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

// Prints the smallest coefficient and Σ|p_n| of a few dilated Fock states.

#include "gaussprobe/fockprobe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

int main() {
    using namespace gaussprobe;
    std::printf("%6s %6s %22s %22s\n", "m", "N", "min p_n", "sum |p_n|");
    for (int m : {0, 1, 5, 25, 100, 400}) {
        const auto fc = dilated_fock_coefficients(m, 2.0);
        double mn = fc.coeffs.front(), l1 = 0.0;
        for (double p : fc.coeffs) {
            mn = std::min(mn, p);
            l1 += std::abs(p);
        }
        std::printf("%6d %6d %22.15g %22.15g\n", m, fc.truncation_N, mn, l1);
    }
}
