// Copyright 2026 The qslkit Authors
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

namespace qslkit {

// Base class for every error thrown by the toolkit.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonHermitianError : Error {
  using Error::Error;
};

struct NotPsdError : Error {
  using Error::Error;
};

struct DimMismatchError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct DegenerateHamiltonianError : Error {
  using Error::Error;
};

struct NotQubitError : Error {
  using Error::Error;
};

struct PurityMismatchError : Error {
  using Error::Error;
};

struct InfeasibleFidelityError : Error {
  using Error::Error;
};

struct OutsideBallError : Error {
  using Error::Error;
};

struct RankBoundViolationError : Error {
  using Error::Error;
};

struct NonOrthogonalPairingError : Error {
  using Error::Error;
};

struct LevelOrderError : Error {
  using Error::Error;
};

struct SchemaError : Error {
  using Error::Error;
};

}  // namespace qslkit
