/* Copyright 2026 The qpcdeph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qpcdeph/expm.hpp"

#include <cmath>

#include "qpcdeph/errors.hpp"

namespace qpcdeph {

namespace {
// ||A / 2^s||_1 <= 1/2 with 20 Taylor terms leaves a truncation error
// below 2^-21 / 20! relative to the scaled norm, far under double epsilon.
constexpr double kScaledNorm = 0.5;
constexpr int kTaylorOrder = 20;
} // namespace

Eigen::MatrixXd expm(const Eigen::MatrixXd &a) {
    if (a.rows() != a.cols()) throw InvalidArgument("expm needs a square matrix");
    if (!a.allFinite()) throw InvalidArgument("expm needs a finite matrix");

    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm > kScaledNorm)
        squarings = static_cast<int>(std::ceil(std::log2(norm / kScaledNorm)));

    const Eigen::MatrixXd scaled = a / std::ldexp(1.0, squarings);
    const Eigen::Index n = a.rows();

    // Horner: I + X(I + X/2 (I + X/3 (...)))
    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
    for (int k = kTaylorOrder; k >= 1; --k)
        result = Eigen::MatrixXd::Identity(n, n) + (scaled * result) / static_cast<double>(k);

    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

} // namespace qpcdeph
