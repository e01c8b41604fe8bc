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

#ifndef PROXYRING_VERDICT_H_
#define PROXYRING_VERDICT_H_

#include <string_view>

namespace proxyring {

// Outcome of every verification routine. Anything but kAccept is a
// rejection; the value says why.
enum class Verdict {
  kAccept,
  kMalformed,          // input bytes did not decode
  kUnauthorizedRing,   // ring not covered by the warrant
  kBadSignature,       // decoded fine, equation does not hold
};

// "ok", "malformed", "unauthorized-ring" or "bad-signature".
std::string_view VerdictCause(Verdict v);

}  // namespace proxyring

#endif  // PROXYRING_VERDICT_H_
