// Copyright 2026 The metasylv Authors. All Rights Reserved.
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

namespace metasylv {

// Recoverable input errors. Everything a caller can trigger with bad data
// derives from Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MultiplicityError : public Error {
 public:
  using Error::Error;
};

class AlphabetError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class CodeRangeError : public Error {
 public:
  using Error::Error;
};

class InvalidChain : public Error {
 public:
  using Error::Error;
};

class InvalidTreeInversions : public Error {
 public:
  using Error::Error;
};

class InvalidTree : public Error {
 public:
  using Error::Error;
};

class InvalidPath : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

// A structural theorem failed to hold on a computed value. These are never
// repaired; they signal a bug in this library.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class StabilityViolation : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

[[noreturn]] void invariant_failure(const char* expr, const char* file,
                                    int line, const std::string& message);

}  // namespace metasylv

#define METASYLV_INVARIANT(cond, message)                                \
  do {                                                                   \
    if (!(cond)) {                                                       \
      ::metasylv::invariant_failure(#cond, __FILE__, __LINE__, (message)); \
    }                                                                    \
  } while (false)
