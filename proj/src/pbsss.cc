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

#include "proxyring/pbsss.h"

#include "proxyring/errors.h"

namespace proxyring::pbsss {

KeyPair GenerateKeyPair(const PairingSuite& suite, EntropySource& entropy) {
  return KeyPairFromSecret(suite, suite.RandomScalar(entropy));
}

KeyPair KeyPairFromSecret(const PairingSuite& suite, const Scalar& s) {
  if (s.IsZero()) throw UsageError("secret key must be nonzero");
  return KeyPair{SecretKey{s}, PublicKey{suite.Mul(suite.generator(), s)}};
}

ShortSignature Sign(const PairingSuite& suite, const SecretKey& sk,
                    std::string_view tag, ByteSpan msg, OpCounter* ctr) {
  return ShortSignature{suite.Mul(suite.HashToGroup(tag, msg, ctr), sk.s, ctr)};
}

Verdict Verify(const PairingSuite& suite, const PublicKey& pk,
               std::string_view tag, ByteSpan msg, const ShortSignature& sig,
               OpCounter* ctr) {
  const HPoint hm = suite.HashToGroup(tag, msg, ctr);
  const TElem lhs = suite.Pair(sig.sig, suite.generator(), ctr);
  const TElem rhs = suite.Pair(hm, pk.pk, ctr);
  return lhs == rhs ? Verdict::kAccept : Verdict::kBadSignature;
}

Verdict VerifyEncoded(const PairingSuite& suite, const PublicKey& pk,
                      std::string_view tag, ByteSpan msg, ByteSpan sig_bytes,
                      OpCounter* ctr) {
  ShortSignature sig;
  try {
    sig.sig = HPoint::FromBytes(sig_bytes);
  } catch (const DecodeError&) {
    return Verdict::kMalformed;
  }
  return Verify(suite, pk, tag, msg, sig, ctr);
}

}  // namespace proxyring::pbsss
