// Copyright 2026 The holotoric Authors
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

namespace holotoric {

/// Base of every error the library raises. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructor or operation received arguments outside its domain
/// (non-finite values, ordering violations, out-of-range sizes, bad placements).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// cos(theta) is 0/0: the drive is exactly on resonance and has zero amplitude.
class DegenerateDrive : public Error {
 public:
  using Error::Error;
};

class NonSimplicialCone : public Error {
 public:
  using Error::Error;
};

class NotFullDimensional : public Error {
 public:
  using Error::Error;
};

/// Malformed input in one of the text formats.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace holotoric
