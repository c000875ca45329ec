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

/** @file rk4.hpp
 *  @brief Classical fixed-step fourth-order Runge-Kutta kernel.
 *
 *  Shared by the reduced two-level solver and the stacked count-resolved
 *  system. The right-hand side is any callable
 *  `void(std::span<const double> y, std::span<double> dydt)`.
 */

#ifndef QPCDEPH_RK4_HPP
#define QPCDEPH_RK4_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace qpcdeph {

class Rk4Stepper {
public:
    explicit Rk4Stepper(std::size_t dim) : k1_(dim), k2_(dim), k3_(dim), k4_(dim), tmp_(dim) {}

    std::size_t dim() const noexcept { return k1_.size(); }

    template <class Rhs>
    void step(std::span<double> y, double dt, Rhs &&rhs) {
        const std::size_t n = y.size();
        const double half = 0.5 * dt;

        rhs(std::span<const double>(y), std::span<double>(k1_));
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + half * k1_[i];
        rhs(std::span<const double>(tmp_), std::span<double>(k2_));
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + half * k2_[i];
        rhs(std::span<const double>(tmp_), std::span<double>(k3_));
        for (std::size_t i = 0; i < n; ++i) tmp_[i] = y[i] + dt * k3_[i];
        rhs(std::span<const double>(tmp_), std::span<double>(k4_));

        const double sixth = dt / 6.0;
        for (std::size_t i = 0; i < n; ++i)
            y[i] += sixth * (k1_[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
    }

private:
    std::vector<double> k1_, k2_, k3_, k4_, tmp_;
};

} // namespace qpcdeph

#endif // QPCDEPH_RK4_HPP
