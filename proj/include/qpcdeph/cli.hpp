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

/** @file cli.hpp
 *  @brief Command-line front end.
 *
 *      qpcdeph <scenario> [--config FILE] [--eps E] [--tc E] [--gamma-d R]
 *              [--t-final T] [--points N] [--dt T] [--n-max N] [--t2-env T]
 *              [--out PATH]
 *
 *  Exit codes: 0 success, 1 I/O failure while writing, 2 usage, config or
 *  validation error (one-line diagnostic on `err`, no output written).
 */

#ifndef QPCDEPH_CLI_HPP
#define QPCDEPH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qpcdeph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;

int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int cli_main(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace qpcdeph

#endif // QPCDEPH_CLI_HPP
