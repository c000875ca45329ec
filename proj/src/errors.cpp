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

#include "qpcdeph/errors.hpp"

#include <cstdio>

namespace qpcdeph {

namespace {
std::string step_message(double requested, double max_dt) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "step size %.6g ns exceeds the admissible maximum %.6g ns",
                  requested, max_dt);
    return buf;
}
} // namespace

StepSizeError::StepSizeError(double requested, double max_dt)
    : Error(step_message(requested, max_dt)), requested_(requested), max_dt_(max_dt) {}

} // namespace qpcdeph
