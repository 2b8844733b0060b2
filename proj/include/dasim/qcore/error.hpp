// Copyright 2026 The dasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace dasim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation (bad partition,
/// non-Hermitian matrix, zero matrix in a fidelity, out-of-range noise
/// parameter, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Problem size beyond what the dense kernels support.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// A combinatorial object that cannot be built (e.g. an unsupported
/// Hadamard order).
class ConstructionError : public Error {
  public:
    using Error::Error;
};

/// Malformed text input. Carries the 1-based line number when known.
class ParseError : public Error {
  public:
    ParseError(const std::string &what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

namespace detail {

template <class E>
inline void require(bool cond, const std::string &msg) {
    if (!cond) {
        throw E(msg);
    }
}

} // namespace detail
} // namespace dasim
