// Copyright 2026 The mdpart Authors
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

#ifndef MDPART_ERROR_HPP
#define MDPART_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mdpart {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Series with zero constant term passed where an inverse is needed.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

// exp / log / pexp / plog called with the wrong constant term.
class InvalidConstantTerm : public Error {
 public:
  using Error::Error;
};

class NoMatch : public Error {
 public:
  using Error::Error;
};

class InsufficientOrder : public Error {
 public:
  using Error::Error;
};

class NonMonotoneProfile : public Error {
 public:
  using Error::Error;
};

// Raised when an identity that must hold exactly does not. Always a bug.
class DivisibilityFailure : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace mdpart

#endif  // MDPART_ERROR_HPP
