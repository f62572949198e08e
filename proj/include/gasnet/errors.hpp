// Copyright 2026 The gasnet Authors. All Rights Reserved.
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

namespace gasnet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the state space or parameter domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A wave curve was queried below zero density.
class VacuumEndpoint : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A rival coupling could not be solved inside the subsonic region.
class NoSubsonicSolution : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Time step exceeds the CFL bound of the current network state.
class CFLViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Root bracketing or iteration failed where the theory guarantees a root.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

class NonConvergedQuadrature : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed problem file or command-line input.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace gasnet
