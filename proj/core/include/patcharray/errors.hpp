// SPDX-License-Identifier: Apache-2.0
//
// patcharray - design and analysis toolkit for microstrip patch arrays
// Copyright (C) 2026 The patcharray authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace patcharray {

// Root of every error the library throws. The CLI maps the concrete
// subclasses onto exit codes (see tools/cli.cpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept = 0;
};

// Bad argument to a pure function (non-positive frequency, singular input...).
class InvalidInput : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "invalid-input"; }
};

// A named field of a structured value broke one of its invariants.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& message)
        : Error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }
    const char* kind() const noexcept override { return "validation"; }

private:
    std::string field_;
};

class OutOfRange : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "out-of-range"; }
};

class DesignInfeasible : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "design-infeasible"; }
};

class GeometryInfeasible : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "geometry-infeasible"; }
};

class ConvergenceError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "convergence"; }
};

// Floating-point breakdown (singular denominator, quadrature failure).
// Sweeps attach the frequency at which it happened.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& message,
                            std::optional<double> frequency_hz = std::nullopt)
        : Error(frequency_hz ? message + " at f = " + std::to_string(*frequency_hz) + " Hz"
                             : message),
          frequency_hz_(frequency_hz) {}
    std::optional<double> frequency_hz() const noexcept { return frequency_hz_; }
    const char* kind() const noexcept override { return "numerical"; }

private:
    std::optional<double> frequency_hz_;
};

class MetricUndefined : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "metric-undefined"; }
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const noexcept { return line_; }
    const char* kind() const noexcept override { return "parse"; }

private:
    std::size_t line_;
};

class IoError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "io"; }
};

}  // namespace patcharray
