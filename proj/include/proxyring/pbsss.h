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

#ifndef PROXYRING_PBSSS_H_
#define PROXYRING_PBSSS_H_

// Pairing-based short signatures: S_m = s * H2(m), checked by
// e(S_m, P) == e(H2(m), s*P).

#include <string_view>

#include "proxyring/algebra.h"
#include "proxyring/bytes.h"
#include "proxyring/entropy.h"
#include "proxyring/verdict.h"

namespace proxyring {

struct SecretKey {
  Scalar s;  // nonzero
};

struct PublicKey {
  KPoint pk;  // s * P, never the identity

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct ShortSignature {
  HPoint sig;

  friend bool operator==(const ShortSignature&,
                         const ShortSignature&) = default;
};

struct KeyPair {
  SecretKey secret;
  PublicKey public_key;
};

namespace pbsss {

KeyPair GenerateKeyPair(const PairingSuite& suite, EntropySource& entropy);

// Deterministic key pair for a given secret. Throws UsageError on zero.
KeyPair KeyPairFromSecret(const PairingSuite& suite, const Scalar& s);

// `tag` selects the hash domain (kTagMessage for ordinary messages,
// kTagWarrant for delegation).
ShortSignature Sign(const PairingSuite& suite, const SecretKey& sk,
                    std::string_view tag, ByteSpan msg,
                    OpCounter* ctr = nullptr);

// Two pairings.
Verdict Verify(const PairingSuite& suite, const PublicKey& pk,
               std::string_view tag, ByteSpan msg, const ShortSignature& sig,
               OpCounter* ctr = nullptr);

// Same as Verify but starts from the compressed signature bytes; a bad
// encoding yields kMalformed rather than kBadSignature.
Verdict VerifyEncoded(const PairingSuite& suite, const PublicKey& pk,
                      std::string_view tag, ByteSpan msg, ByteSpan sig_bytes,
                      OpCounter* ctr = nullptr);

}  // namespace pbsss
}  // namespace proxyring

#endif  // PROXYRING_PBSSS_H_
