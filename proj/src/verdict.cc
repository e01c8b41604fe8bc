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

#include "proxyring/verdict.h"

namespace proxyring {

std::string_view VerdictCause(Verdict v) {
  switch (v) {
    case Verdict::kAccept:
      return "ok";
    case Verdict::kMalformed:
      return "malformed";
    case Verdict::kUnauthorizedRing:
      return "unauthorized-ring";
    case Verdict::kBadSignature:
      return "bad-signature";
  }
  return "unknown";
}

}  // namespace proxyring
