// Copyright 2026 The DiaQ Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Exception types thrown by the library. The CLI maps each family onto a
 * stable process exit code.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diaq {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together.
class ShapeError : public Error {
  public:
    using Error::Error;
};

/// Operand dimensions differ for a product (matmul, spmv).
class DimensionMismatch : public ShapeError {
  public:
    DimensionMismatch() : ShapeError("not multiplyable") {}
};

class RangeError : public Error {
  public:
    using Error::Error;
};

class UnsupportedGate : public Error {
  public:
    explicit UnsupportedGate(const std::string &name)
        : Error("unsupported gate '" + name + "'"), name_(name) {}
    [[nodiscard]] const std::string &gate() const noexcept { return name_; }

  private:
    std::string name_;
};

/// A size guard (qubit cap, span limit, materialization limit) was hit.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// A multi-qubit gate spans more qubits than the configured span limit.
class SpanOverflow : public ResourceError {
  public:
    using ResourceError::ResourceError;
};

class NormalizationError : public Error {
  public:
    using Error::Error;
};

/// Malformed QASM source. Line and column are 1-based.
class ParseError : public Error {
  public:
    ParseError(const std::string &msg, std::size_t line, std::size_t col)
        : Error(std::to_string(line) + ":" + std::to_string(col) + ": " +
                msg),
          line_(line), col_(col) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return col_; }

  private:
    std::size_t line_;
    std::size_t col_;
};

/// Well-formed QASM that uses a construct outside the supported subset.
class UnsupportedFeature : public Error {
  public:
    UnsupportedFeature(const std::string &construct, std::size_t line,
                       std::size_t col)
        : Error(std::to_string(line) + ":" + std::to_string(col) +
                ": unsupported feature '" + construct + "'"),
          construct_(construct), line_(line), col_(col) {}
    [[nodiscard]] const std::string &construct() const noexcept {
        return construct_;
    }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return col_; }

  private:
    std::string construct_;
    std::size_t line_;
    std::size_t col_;
};

} // namespace diaq
