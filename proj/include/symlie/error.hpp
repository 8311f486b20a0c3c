// Copyright 2026 The symlie Authors
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

#include <stdexcept>
#include <string>

namespace symlie {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on qubit count or matrix dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (matrix qubits, enumeration qubits, group order) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Input violates a sign/phase convention, e.g. a non-Hermitian generator.
class ConventionError : public Error {
 public:
  using Error::Error;
};

/// The operation needs qubit permutations but the group holds raw unitaries.
class UnsupportedSymmetryError : public Error {
 public:
  using Error::Error;
};

/// Group closure did not terminate within the element cap.
class GroupNotFiniteError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed to reach its residual target.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Product formula refused: the sum's terms may not commute.
class ConditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text/JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace symlie
