// Copyright 2026 The mediahom Authors
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

namespace mediahom {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument value (non-Hermitian input, empty list, bad probability...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Operator dimensions do not match the declared subsystem shape.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Hamiltonian model used outside its domain (e.g. XXZ with d != 2).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// A size guard was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The eigenvalue-1 eigenspace of a channel is not one-dimensional.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// A numerically computed object failed its validity check.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A ratio was requested whose denominator is below the floor.
class UndefinedRatioError : public Error {
 public:
  using Error::Error;
};

/// Scenario configuration rejected. The message names the offending field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mediahom
