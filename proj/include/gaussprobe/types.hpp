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

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace gaussprobe {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Default relative tolerance for equality-style checks and eigenvalue thresholds.
inline constexpr double kDefaultTol = 1e-9;

/// Shape mismatch between matrices, vectors, or mode counts.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotSymmetricError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A matrix that was required to be positive semidefinite has a negative direction.
struct IndefiniteError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A matrix that was required to be invertible (strictly positive definite) is not.
struct SingularError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The map does not send Gaussian states to Gaussian states.
struct NotG2GError : std::domain_error {
    using std::domain_error::domain_error;
};

inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_symmetric(const Matrix& m, double tol = kDefaultTol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.transpose()) <= tol * std::max(1.0, max_abs(m));
}

inline void require_even_square(const Matrix& m, const char* what) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
        throw DimensionError(std::string(what) + " must be a nonempty 2n x 2n matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

}  // namespace gaussprobe
