// Copyright 2026 The kcompress Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kcompress {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DuplicateAbscissa : public Error {
public:
  explicit DuplicateAbscissa(const std::string &what) : Error(what) {}
};

class SingularMatrix : public Error {
public:
  explicit SingularMatrix(const std::string &what = "matrix is singular") : Error(what) {}
};

/// The orbit revisits a point: f^first(x0) == f^second(x0).
class OrbitCollision : public Error {
public:
  OrbitCollision(std::size_t first, std::size_t second)
      : Error("orbit collision: f^" + std::to_string(first) + "(x0) == f^" +
              std::to_string(second) + "(x0)"),
        first_(first), second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

private:
  std::size_t first_;
  std::size_t second_;
};

class DegenerateScale : public Error {
public:
  DegenerateScale() : Error("affine scale must be non-zero") {}
};

class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(const std::string &what) : Error(what) {}
};

class PreconditionViolated : public Error {
public:
  explicit PreconditionViolated(const std::string &what) : Error(what) {}
};

/// Epsilon boxes of neighbouring points overlap.
class OrderingViolated : public Error {
public:
  explicit OrderingViolated(const std::string &what) : Error(what) {}
};

class EpsilonTooLarge : public Error {
public:
  explicit EpsilonTooLarge(const std::string &what) : Error(what) {}
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string &what) : Error(what) {}
};

} // namespace kcompress
