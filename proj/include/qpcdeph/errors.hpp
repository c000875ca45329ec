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

/** @file errors.hpp
 *  @brief Exception hierarchy shared by all qpcdeph modules.
 *
 *  Every failure the library reports is a qpcdeph::Error. The subclasses
 *  name the failure so callers (and the CLI) can react without string
 *  matching.
 */

#ifndef QPCDEPH_ERRORS_HPP
#define QPCDEPH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qpcdeph {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter is outside its admissible domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class UnknownUnitError : public Error {
public:
    explicit UnknownUnitError(const std::string &tag)
        : Error("unknown unit tag '" + tag + "'"), tag_(tag) {}
    const std::string &tag() const noexcept { return tag_; }

private:
    std::string tag_;
};

/// The first-order transmission-change estimate left its range of validity
/// (the predicted shift is at least as large as the transmission itself).
class PerturbativeBreakdownError : public Error {
public:
    using Error::Error;
};

/// Requested integration step exceeds the stability/accuracy guard.
class StepSizeError : public Error {
public:
    StepSizeError(double requested, double max_dt);
    double requested() const noexcept { return requested_; }
    double max_dt() const noexcept { return max_dt_; }

private:
    double requested_;
    double max_dt_;
};

/// The generator has no strictly decaying mode (pure coherent dynamics).
class NoDecayError : public Error {
public:
    NoDecayError() : Error("no-decay: generator has no strictly decaying mode") {}
};

/// The count ladder is too short for the requested evolution.
class TruncationError : public Error {
public:
    TruncationError(const std::string &what, std::size_t suggested_n_max)
        : Error(what), suggested_n_max_(suggested_n_max) {}
    std::size_t suggested_n_max() const noexcept { return suggested_n_max_; }

private:
    std::size_t suggested_n_max_;
};

/// A state left the physical region (trace, positivity, purity).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace qpcdeph

#endif // QPCDEPH_ERRORS_HPP
