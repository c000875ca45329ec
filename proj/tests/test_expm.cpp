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

#include <gtest/gtest.h>

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "qpcdeph/errors.hpp"
#include "qpcdeph/expm.hpp"
#include "support/test_support.hpp"

using qpcdeph::expm;

TEST(Expm, ZeroAndIdentity) {
    const Eigen::MatrixXd z = Eigen::MatrixXd::Zero(4, 4);
    EXPECT_TRUE(expm(z).isApprox(Eigen::MatrixXd::Identity(4, 4), 0.0));
}

TEST(Expm, RotationGenerator) {
    for (double theta : {0.1, 1.0, 3.0, 40.0, 700.0}) {
        Eigen::MatrixXd a(2, 2);
        a << 0, -theta, theta, 0;
        Eigen::MatrixXd expected(2, 2);
        expected << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
        EXPECT_LT((expm(a) - expected).cwiseAbs().maxCoeff(), 1e-12 * (1.0 + theta)) << theta;
    }
}

TEST(Expm, DefectiveJordanBlock) {
    // exp([[l, 1], [0, l]] t) = e^{l t} [[1, t], [0, 1]]
    for (double t : {0.5, 2.0, 10.0}) {
        const double l = -0.7;
        Eigen::MatrixXd a(2, 2);
        a << l * t, t, 0, l * t;
        Eigen::MatrixXd expected(2, 2);
        expected << std::exp(l * t), t * std::exp(l * t), 0, std::exp(l * t);
        EXPECT_LT((expm(a) - expected).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(Expm, AgreesWithEigenPade) {
    qpcdeph::testing::Gen gen(31);
    for (int i = 0; i < 200; ++i) {
        Eigen::MatrixXd a(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) a(r, c) = gen.uniform(-1, 1) * gen.log_uniform(1e-3, 30.0);
        // keep the spectrum in the left half plane so entries stay O(1)
        a -= (a.cwiseAbs().colwise().sum().maxCoeff()) * Eigen::MatrixXd::Identity(4, 4) * 0.9;
        const Eigen::MatrixXd ref = a.exp();
        const double scale = 1.0 + ref.cwiseAbs().maxCoeff();
        EXPECT_LT((expm(a) - ref).cwiseAbs().maxCoeff() / scale, 1e-12);
    }
}

TEST(Expm, RejectsBadInput) {
    EXPECT_THROW(expm(Eigen::MatrixXd::Zero(2, 3)), qpcdeph::InvalidArgument);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(2, 2);
    a(0, 0) = std::nan("");
    EXPECT_THROW(expm(a), qpcdeph::InvalidArgument);
}
