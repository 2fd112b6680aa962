// Copyright 2026 The fmzv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fmzv {

// Raised when a caller-supplied parameter violates an operation's
// precondition. The CLI maps this to exit code 2.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotPrime : public InvalidParameters {
 public:
  using InvalidParameters::InvalidParameters;
};

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what,
                          std::optional<std::size_t> index = std::nullopt)
      : std::domain_error(what), index_(index) {}

  // Position of the offending entry for batch operations.
  std::optional<std::size_t> index() const { return index_; }

 private:
  std::optional<std::size_t> index_;
};

// A rational weight whose denominator vanishes modulo the current prime.
class WeightNotReducible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class TruncationMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An evaluation argument coincides with one of 1, ..., p-1.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Random tuple resampling gave up.
class DegenerateTuple : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fmzv
