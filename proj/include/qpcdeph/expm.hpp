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

/** @file expm.hpp
 *  @brief Matrix exponential by scaling and squaring with a Taylor kernel.
 *
 *  No eigendecomposition: the generators handled here can be defective
 *  (exceptional points of the damped two-level problem).
 */

#ifndef QPCDEPH_EXPM_HPP
#define QPCDEPH_EXPM_HPP

#include <Eigen/Dense>

namespace qpcdeph {

Eigen::MatrixXd expm(const Eigen::MatrixXd &a);

} // namespace qpcdeph

#endif // QPCDEPH_EXPM_HPP
