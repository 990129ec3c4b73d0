// include/udec/errors.h

// Copyright 2026 The udec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UDEC_ERRORS_H_
#define UDEC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace udec {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad matrix, unknown symbol, bad digit,
/// missing codeword, unparseable file.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The operation needs an irreducible (strongly connected) structure.
class ReducibleError : public Error {
 public:
  using Error::Error;
};

/// An iterative method hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace udec

#endif  // UDEC_ERRORS_H_
