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

#ifndef PROXYRING_DELEGATION_H_
#define PROXYRING_DELEGATION_H_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "proxyring/algebra.h"
#include "proxyring/bytes.h"
#include "proxyring/entropy.h"
#include "proxyring/pbsss.h"
#include "proxyring/verdict.h"

namespace proxyring {

// Delegation statement signed by the original signer. The canonical
// encoding (wire::EncodeWarrantPayload) is what gets hashed to H2(w).
struct Warrant {
  static constexpr std::size_t kNonceSize = 16;

  Bytes body;  // free-form delegation terms
  PublicKey original;
  std::vector<PublicKey> authorized;  // non-empty, duplicate-free
  std::array<std::uint8_t, kNonceSize> nonce{};

  bool Authorizes(const PublicKey& pk) const;
  // Throws UsageError if `authorized` is empty, has duplicates, or any key
  // (including `original`) is the identity.
  void Validate() const;

  friend bool operator==(const Warrant&, const Warrant&) = default;
};

// (w, s_o * H2(w)) as handed to the proxy group.
struct DelegationToken {
  Warrant warrant;
  HPoint w_sig;

  friend bool operator==(const DelegationToken&,
                         const DelegationToken&) = default;
};

// A proxy's signing key S_i = (s_o + s_p) * H2(w), bound to its warrant.
struct ProxyKeyMaterial {
  Warrant warrant;
  PublicKey proxy_pk;
  HPoint s_key;

  friend bool operator==(const ProxyKeyMaterial&,
                         const ProxyKeyMaterial&) = default;
};

namespace delegation {

// Builds and validates a warrant with a fresh random nonce.
Warrant MakeWarrant(Bytes body, const PublicKey& original,
                    std::vector<PublicKey> authorized, EntropySource& entropy);

// H2 applied to the canonical warrant encoding under kTagWarrant.
HPoint WarrantPoint(const PairingSuite& suite, const Warrant& warrant,
                    OpCounter* ctr = nullptr);

// Throws UsageError if the warrant is invalid or names a different
// original signer.
DelegationToken MakeDelegation(const PairingSuite& suite,
                               const SecretKey& original_sk,
                               const Warrant& warrant);

// Checks e(w_sig, P) == e(H2(w), PK_o). Two pairings.
Verdict VerifyDelegation(const PairingSuite& suite,
                         const DelegationToken& token,
                         OpCounter* ctr = nullptr);

// Throws ValidationError for a token that does not verify and
// AuthorizationError when the proxy key is not listed in the warrant.
ProxyKeyMaterial DeriveProxyKey(const PairingSuite& suite,
                                const DelegationToken& token,
                                const SecretKey& proxy_sk);

// Position of `pk` in the authorized list, if present.
std::optional<std::size_t> FindAuthorized(const Warrant& warrant,
                                          const PublicKey& pk);

}  // namespace delegation
}  // namespace proxyring

#endif  // PROXYRING_DELEGATION_H_
