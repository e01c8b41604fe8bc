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

#include "proxyring/delegation.h"

#include <algorithm>
#include <utility>

#include "proxyring/errors.h"
#include "proxyring/wire.h"

namespace proxyring {

bool Warrant::Authorizes(const PublicKey& pk) const {
  return std::find(authorized.begin(), authorized.end(), pk) !=
         authorized.end();
}

void Warrant::Validate() const {
  if (authorized.empty()) throw UsageError("warrant authorizes no proxy");
  if (original.pk.IsIdentity()) {
    throw UsageError("original public key is the identity");
  }
  for (auto it = authorized.begin(); it != authorized.end(); ++it) {
    if (it->pk.IsIdentity()) {
      throw UsageError("authorized public key is the identity");
    }
    if (std::find(authorized.begin(), it, *it) != it) {
      throw UsageError("duplicate proxy in warrant");
    }
  }
}

namespace delegation {

Warrant MakeWarrant(Bytes body, const PublicKey& original,
                    std::vector<PublicKey> authorized,
                    EntropySource& entropy) {
  Warrant w;
  w.body = std::move(body);
  w.original = original;
  w.authorized = std::move(authorized);
  entropy.Fill(w.nonce);
  w.Validate();
  return w;
}

HPoint WarrantPoint(const PairingSuite& suite, const Warrant& warrant,
                    OpCounter* ctr) {
  return suite.HashToGroup(kTagWarrant, wire::EncodeWarrantPayload(warrant),
                           ctr);
}

DelegationToken MakeDelegation(const PairingSuite& suite,
                               const SecretKey& original_sk,
                               const Warrant& warrant) {
  warrant.Validate();
  if (suite.Mul(suite.generator(), original_sk.s) != warrant.original.pk) {
    throw UsageError("warrant names a different original signer");
  }
  return DelegationToken{
      warrant, suite.Mul(WarrantPoint(suite, warrant), original_sk.s)};
}

Verdict VerifyDelegation(const PairingSuite& suite,
                         const DelegationToken& token, OpCounter* ctr) {
  const HPoint hw = WarrantPoint(suite, token.warrant, ctr);
  const TElem lhs = suite.Pair(token.w_sig, suite.generator(), ctr);
  const TElem rhs = suite.Pair(hw, token.warrant.original.pk, ctr);
  return lhs == rhs ? Verdict::kAccept : Verdict::kBadSignature;
}

ProxyKeyMaterial DeriveProxyKey(const PairingSuite& suite,
                                const DelegationToken& token,
                                const SecretKey& proxy_sk) {
  if (VerifyDelegation(suite, token) != Verdict::kAccept) {
    throw ValidationError("delegation token does not verify");
  }
  const PublicKey proxy_pk{suite.Mul(suite.generator(), proxy_sk.s)};
  if (!token.warrant.Authorizes(proxy_pk)) {
    throw AuthorizationError("proxy key is not listed in the warrant");
  }
  const HPoint hw = WarrantPoint(suite, token.warrant);
  return ProxyKeyMaterial{token.warrant, proxy_pk,
                          token.w_sig + suite.Mul(hw, proxy_sk.s)};
}

std::optional<std::size_t> FindAuthorized(const Warrant& warrant,
                                          const PublicKey& pk) {
  auto it = std::find(warrant.authorized.begin(), warrant.authorized.end(), pk);
  if (it == warrant.authorized.end()) return std::nullopt;
  return static_cast<std::size_t>(it - warrant.authorized.begin());
}

}  // namespace delegation
}  // namespace proxyring
