// Copyright 2026 The qdyn Authors.
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

namespace qdyn {

// Base of every error thrown by the library. The CLI maps subclasses of
// MathRangeError to exit code 3 and everything else to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidRadicand : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidPrime : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A mathematically well-formed request that falls outside the regime an
/// operation covers (c > 1/4 for real fixed points, p = 2, ...).
class MathRangeError : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public MathRangeError {
 public:
  using MathRangeError::MathRangeError;
};

class UnsupportedPrime : public MathRangeError {
 public:
  using MathRangeError::MathRangeError;
};

class CapacityNotSubcritical : public MathRangeError {
 public:
  using MathRangeError::MathRangeError;
};

class NoBoundFound : public MathRangeError {
 public:
  using MathRangeError::MathRangeError;
};

class BoundTooLarge : public MathRangeError {
 public:
  BoundTooLarge(int bound, int budget)
      : MathRangeError("degree bound " + std::to_string(bound) +
                       " exceeds degree budget " + std::to_string(budget)),
        bound_(bound),
        budget_(budget) {}
  int bound() const noexcept { return bound_; }
  int budget() const noexcept { return budget_; }

 private:
  int bound_;
  int budget_;
};

class UnsupportedCandidate : public MathRangeError {
 public:
  using MathRangeError::MathRangeError;
};

}  // namespace qdyn
