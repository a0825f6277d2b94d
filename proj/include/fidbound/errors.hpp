// Copyright 2026 The fidbound Authors
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

namespace fidbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which density-matrix invariant a rejected input violated.
enum class Invariant { Hermitian, UnitTrace, PositiveSemidefinite, RealTrace };

const char* to_string(Invariant invariant);

/// A matrix failed one of the density-matrix invariants.
class InvalidState : public Error {
 public:
  InvalidState(Invariant invariant, const std::string& detail)
      : Error(std::string(to_string(invariant)) + ": " + detail),
        invariant_(invariant) {}

  Invariant invariant() const { return invariant_; }

 private:
  Invariant invariant_;
};

/// Qubit count above a representation cap, or mismatched operand sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A scalar parameter (p, lambda, N, ...) lies outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Internal cross-check failed: a bound chain was violated beyond tolerance,
/// a clamp exceeded its slack, or two evaluation routes disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (state files, grid specs, qubit lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fidbound
