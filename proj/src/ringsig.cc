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

#include "proxyring/ringsig.h"

#include <algorithm>
#include <string>

#include "proxyring/errors.h"
#include "proxyring/wire.h"

namespace proxyring {

std::optional<std::size_t> RingSpec::IndexOf(const PublicKey& pk) const {
  auto it = std::find(members.begin(), members.end(), pk);
  if (it == members.end()) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

void RingSpec::Validate() const {
  if (members.empty()) throw UsageError("ring has no members");
  for (auto it = members.begin(); it != members.end(); ++it) {
    if (it->pk.IsIdentity()) throw UsageError("ring member is the identity");
    if (std::find(members.begin(), it, *it) != it) {
      throw UsageError("duplicate ring member");
    }
  }
}

namespace ringsig {

namespace {

// Recurrence with H2(w) and PK_o + PK_i already computed.
TElem Step(const PairingSuite& suite, const HPoint& hw, const KPoint& key,
           const Scalar& h, const TElem& c, const HPoint& t, OpCounter* ctr) {
  // e(g*H, K)^h == e((h*g)*H, K); one shared final exponentiation.
  const Scalar g = GlueScalar(suite, c, ctr);
  const HPoint lhs[] = {suite.Mul(hw, h * g, ctr), t};
  const KPoint rhs[] = {key, suite.generator()};
  return suite.PairProduct(lhs, rhs, ctr);
}

bool RingCoveredByWarrant(const RingSpec& ring, const Warrant& warrant) {
  if (ring.original != warrant.original) return false;
  return std::all_of(
      ring.members.begin(), ring.members.end(),
      [&](const PublicKey& pk) { return warrant.Authorizes(pk); });
}

}  // namespace

Challenge ComputeChallenge(const PairingSuite& suite, ByteSpan msg,
                           const RingSpec& ring, OpCounter* ctr) {
  Bytes input = wire::EncodeMessage(msg);
  Append(input, wire::EncodeRingMembers(ring.members));
  return Challenge{suite.HashToScalar(kTagChallenge, input, ctr)};
}

Scalar GlueScalar(const PairingSuite& suite, const TElem& c, OpCounter* ctr) {
  return suite.HashToScalar(kTagGlue, c.ToBytes(), ctr);
}

TElem RecurrenceStep(const PairingSuite& suite, const Warrant& warrant,
                     const RingSpec& ring, const Challenge& challenge,
                     std::size_t i, const TElem& c_i, const HPoint& t_i,
                     OpCounter* ctr) {
  if (i >= ring.size()) {
    throw UsageError("ring index " + std::to_string(i) + " out of range");
  }
  const HPoint hw = delegation::WarrantPoint(suite, warrant, ctr);
  return Step(suite, hw, ring.original.pk + ring.members[i].pk, challenge.h,
              c_i, t_i, ctr);
}

ProxyRingSignature RingSign(const PairingSuite& suite,
                            const ProxyKeyMaterial& material,
                            const RingSpec& ring, std::size_t signer_index,
                            ByteSpan msg, EntropySource& entropy,
                            SigningTrace* trace) {
  ring.Validate();
  const std::size_t n = ring.size();
  const std::size_t k = signer_index;
  if (k >= n) {
    throw UsageError("signer index " + std::to_string(k) +
                     " out of range for ring of size " + std::to_string(n));
  }
  if (ring.members[k] != material.proxy_pk) {
    throw UsageError("ring member at signer index is not the signer's key");
  }
  if (ring.original != material.warrant.original) {
    throw AuthorizationError("ring names a different original signer");
  }
  if (!RingCoveredByWarrant(ring, material.warrant)) {
    throw AuthorizationError("ring member not authorized by the warrant");
  }

  const Scalar h = ComputeChallenge(suite, msg, ring).h;
  const HPoint hw = delegation::WarrantPoint(suite, material.warrant);
  const KPoint& p = suite.generator();

  std::vector<TElem> glue(n);
  std::vector<HPoint> t(n);

  const HPoint a = suite.RandomHPoint(entropy);
  glue[(k + 1) % n] = suite.Pair(a, p);

  for (std::size_t step = 1; step < n; ++step) {
    const std::size_t j = (k + step) % n;
    t[j] = suite.RandomHPoint(entropy);
    glue[(j + 1) % n] = Step(suite, hw, ring.original.pk + ring.members[j].pk,
                             h, glue[j], t[j], nullptr);
  }

  // Close the ring at the signer's position.
  t[k] = a - suite.Mul(material.s_key, h * GlueScalar(suite, glue[k]));

  HPoint t_sum;
  for (const HPoint& tj : t) t_sum += tj;

  if (trace != nullptr) {
    trace->a = a;
    trace->t = t;
  }
  return ProxyRingSignature{std::move(glue), t_sum, material.warrant, ring};
}

Verdict RingVerify(const PairingSuite& suite, const ProxyRingSignature& sig,
                   ByteSpan msg, OpCounter* ctr) {
  try {
    sig.ring.Validate();
  } catch (const UsageError&) {
    return Verdict::kMalformed;
  }
  if (sig.glue.size() != sig.ring.size()) return Verdict::kMalformed;
  if (!RingCoveredByWarrant(sig.ring, sig.warrant)) {
    return Verdict::kUnauthorizedRing;
  }

  const Scalar h = ComputeChallenge(suite, msg, sig.ring, ctr).h;

  KPoint q;
  TElem lhs;
  for (std::size_t i = 0; i < sig.glue.size(); ++i) {
    const Scalar g = GlueScalar(suite, sig.glue[i], ctr);
    q += suite.Mul(sig.ring.original.pk + sig.ring.members[i].pk, g, ctr);
    lhs *= sig.glue[i];
  }

  const HPoint hw = delegation::WarrantPoint(suite, sig.warrant, ctr);
  const HPoint a[] = {hw, sig.t_sum};
  const KPoint b[] = {suite.Mul(q, h, ctr), suite.generator()};
  const TElem rhs = suite.PairProduct(a, b, ctr);
  return lhs == rhs ? Verdict::kAccept : Verdict::kBadSignature;
}

Verdict RingVerifyEncoded(const PairingSuite& suite, ByteSpan envelope,
                          ByteSpan msg, OpCounter* ctr) {
  ProxyRingSignature sig;
  try {
    sig = wire::DecodeSignature(suite, envelope);
  } catch (const DecodeError&) {
    return Verdict::kMalformed;
  }
  return RingVerify(suite, sig, msg, ctr);
}

OpCounter CountVerifyCost(const PairingSuite& suite, std::size_t n) {
  if (n == 0) throw UsageError("ring size must be at least 1");
  SeededEntropy entropy(0x5052530000000000ull + n);
  const KeyPair original = pbsss::GenerateKeyPair(suite, entropy);
  std::vector<KeyPair> proxies;
  std::vector<PublicKey> members;
  for (std::size_t i = 0; i < n; ++i) {
    proxies.push_back(pbsss::GenerateKeyPair(suite, entropy));
    members.push_back(proxies.back().public_key);
  }
  const Warrant warrant = delegation::MakeWarrant(
      BytesOf("cost probe"),
      original.public_key, members, entropy);
  const DelegationToken token =
      delegation::MakeDelegation(suite, original.secret, warrant);
  const ProxyKeyMaterial material =
      delegation::DeriveProxyKey(suite, token, proxies.front().secret);
  const RingSpec ring{original.public_key, members};
  const Bytes msg = BytesOf("cost probe message");
  const ProxyRingSignature sig =
      RingSign(suite, material, ring, 0, msg, entropy);

  OpCounter ctr;
  if (RingVerify(suite, sig, msg, &ctr) != Verdict::kAccept) {
    throw Error("cost probe signature did not verify");
  }
  return ctr;
}

}  // namespace ringsig
}  // namespace proxyring
