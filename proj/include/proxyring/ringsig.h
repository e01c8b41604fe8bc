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

#ifndef PROXYRING_RINGSIG_H_
#define PROXYRING_RINGSIG_H_

// Proxy ring signatures.
//
// With w the warrant, H = H2(w), K_i = PK_o + PK_i and the challenge
// h = H1(m || L'), glue values are chained around the ring by
//
//   c_{i+1} = e(g(c_i) * H, K_i)^h * e(T_i, P),   g(c) = H1(enc(c)),
//
// indices taken mod n. The signer at position k starts the chain with
// c_{k+1} = e(A, P), fills the other positions with random T_j, and closes
// it with T_k = A - h * g(c_k) * S_k. Only T = sum T_j is published.
// Multiplying the recurrence around the ring gives the two-pairing check
//
//   prod c_i == e(H, h * sum_i g(c_i) * K_i) * e(T, P).

#include <cstddef>
#include <optional>
#include <vector>

#include "proxyring/algebra.h"
#include "proxyring/bytes.h"
#include "proxyring/delegation.h"
#include "proxyring/entropy.h"
#include "proxyring/pbsss.h"
#include "proxyring/verdict.h"

namespace proxyring {

// The original signer plus the ordered subset L' of proxies that form the
// ring.
struct RingSpec {
  PublicKey original;
  std::vector<PublicKey> members;

  std::size_t size() const { return members.size(); }
  std::optional<std::size_t> IndexOf(const PublicKey& pk) const;
  // Throws UsageError on an empty ring, duplicate or identity members.
  void Validate() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

struct ProxyRingSignature {
  std::vector<TElem> glue;  // c_0 .. c_{n-1}
  HPoint t_sum;             // T
  Warrant warrant;
  RingSpec ring;

  friend bool operator==(const ProxyRingSignature&,
                         const ProxyRingSignature&) = default;
};

struct Challenge {
  Scalar h;
};

// What the signer would otherwise throw away. Only for tests and tooling
// that check the ring closure; never part of a signature.
struct SigningTrace {
  HPoint a;
  std::vector<HPoint> t;  // T_0 .. T_{n-1}, including the closing T_k
};

namespace ringsig {

// h = H1("PRS:H1:chal", enc(m) || enc(L')).
Challenge ComputeChallenge(const PairingSuite& suite, ByteSpan msg,
                           const RingSpec& ring, OpCounter* ctr = nullptr);

// g(c) = H1("PRS:H1:glue", enc(c)).
Scalar GlueScalar(const PairingSuite& suite, const TElem& c,
                  OpCounter* ctr = nullptr);

// One link of the chain: e(g(c_i) * H2(w), PK_o + PK_i)^h * e(t_i, P).
// Throws UsageError when i is out of range.
TElem RecurrenceStep(const PairingSuite& suite, const Warrant& warrant,
                     const RingSpec& ring, const Challenge& challenge,
                     std::size_t i, const TElem& c_i, const HPoint& t_i,
                     OpCounter* ctr = nullptr);

// Signs `msg` as ring member `signer_index`.
//
// Throws UsageError when the ring is malformed, the index is out of range
// or the key at that index is not the material's proxy key, and
// AuthorizationError when a ring member is not listed in the warrant or the
// ring names a different original signer.
ProxyRingSignature RingSign(const PairingSuite& suite,
                            const ProxyKeyMaterial& material,
                            const RingSpec& ring, std::size_t signer_index,
                            ByteSpan msg, EntropySource& entropy,
                            SigningTrace* trace = nullptr);

// Always exactly two pairings, regardless of ring size.
Verdict RingVerify(const PairingSuite& suite, const ProxyRingSignature& sig,
                   ByteSpan msg, OpCounter* ctr = nullptr);

// Decodes a signature envelope first; decode failures map to kMalformed.
Verdict RingVerifyEncoded(const PairingSuite& suite, ByteSpan envelope,
                          ByteSpan msg, OpCounter* ctr = nullptr);

// Runs a full delegate/sign/verify at ring size n with deterministic keys
// and returns the counter of the verification alone.
OpCounter CountVerifyCost(const PairingSuite& suite, std::size_t n);

}  // namespace ringsig
}  // namespace proxyring

#endif  // PROXYRING_RINGSIG_H_
