// Copyright 2026 The proxyring Authors
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

#ifndef PROXYRING_ERRORS_H_
#define PROXYRING_ERRORS_H_

#include <stdexcept>
#include <string>

namespace proxyring {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a precondition (bad index, empty list, unknown tag, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Bytes do not form a canonical encoding of the expected object.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// A key is not covered by the warrant it is used under.
class AuthorizationError : public Error {
 public:
  using Error::Error;
};

// A cryptographic object failed its validity check (e.g. a forged token).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class EntropyError : public Error {
 public:
  using Error::Error;
};

}  // namespace proxyring

#endif  // PROXYRING_ERRORS_H_
