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

#include <gtest/gtest.h>

#include <type_traits>

#include "proxyring/errors.h"
#include "proxyring/wire.h"
#include "test_util.h"

namespace proxyring {
namespace {

using testing::MakeScenario;
using testing::S;
using testing::Suite;

Warrant FixedWarrant(const PublicKey& original,
                     std::vector<PublicKey> proxies) {
  Warrant w;
  w.body = BytesOf("may sign invoices up to 1000 EUR");
  w.original = original;
  w.authorized = std::move(proxies);
  w.nonce.fill(0x5a);
  return w;
}

TEST(WarrantTest, ValidateRejectsEmptyAndDuplicates) {
  const PairingSuite& s = Suite();
  KeyPair o = pbsss::KeyPairFromSecret(s, S(7));
  KeyPair p = pbsss::KeyPairFromSecret(s, S(8));
  EXPECT_THROW(FixedWarrant(o.public_key, {}).Validate(), UsageError);
  EXPECT_THROW(FixedWarrant(o.public_key, {p.public_key, p.public_key})
                   .Validate(),
               UsageError);
  EXPECT_THROW(FixedWarrant(o.public_key, {PublicKey{KPoint()}}).Validate(),
               UsageError);
  EXPECT_NO_THROW(FixedWarrant(o.public_key, {p.public_key}).Validate());
  SeededEntropy e(1);
  EXPECT_THROW(delegation::MakeWarrant({}, o.public_key, {}, e), UsageError);
}

TEST(WarrantTest, NonceChangesWarrantPoint) {
  const PairingSuite& s = Suite();
  KeyPair o = pbsss::KeyPairFromSecret(s, S(7));
  KeyPair p = pbsss::KeyPairFromSecret(s, S(8));
  Warrant a = FixedWarrant(o.public_key, {p.public_key});
  Warrant b = a;
  b.nonce[15] ^= 1;
  EXPECT_NE(wire::EncodeWarrantPayload(a), wire::EncodeWarrantPayload(b));
  EXPECT_NE(delegation::WarrantPoint(s, a), delegation::WarrantPoint(s, b));
}

TEST(MakeDelegationTest, UnitOriginalSecretSignsWithHashPoint) {
  const PairingSuite& s = Suite();
  KeyPair o = pbsss::KeyPairFromSecret(s, S(1));
  KeyPair p = pbsss::KeyPairFromSecret(s, S(3));
  Warrant w = FixedWarrant(o.public_key, {p.public_key});
  DelegationToken token = delegation::MakeDelegation(s, o.secret, w);
  EXPECT_EQ(token.w_sig, delegation::WarrantPoint(s, w));
  EXPECT_EQ(delegation::VerifyDelegation(s, token), Verdict::kAccept);
}

TEST(MakeDelegationTest, RejectsMismatchedOriginalAndEmptyWarrant) {
  const PairingSuite& s = Suite();
  KeyPair o = pbsss::KeyPairFromSecret(s, S(5));
  KeyPair other = pbsss::KeyPairFromSecret(s, S(6));
  KeyPair p = pbsss::KeyPairFromSecret(s, S(9));
  EXPECT_THROW(delegation::MakeDelegation(
                   s, other.secret, FixedWarrant(o.public_key, {p.public_key})),
               UsageError);
  EXPECT_THROW(
      delegation::MakeDelegation(s, o.secret, FixedWarrant(o.public_key, {})),
      UsageError);
}

TEST(VerifyDelegationTest, AcceptsHonestRejectsTampered) {
  const PairingSuite& s = Suite();
  SeededEntropy e(2);
  testing::Scenario sc = MakeScenario(3, e);
  OpCounter ctr;
  EXPECT_EQ(delegation::VerifyDelegation(s, sc.token, &ctr), Verdict::kAccept);
  EXPECT_EQ(ctr.pairings, 2u);

  for (int i = 0; i < 100; ++i) {
    DelegationToken forged = sc.token;
    forged.w_sig = s.RandomHPoint(e);
    EXPECT_EQ(delegation::VerifyDelegation(s, forged), Verdict::kBadSignature);
  }
  for (std::size_t i = 0; i < sc.token.warrant.body.size(); ++i) {
    DelegationToken edited = sc.token;
    edited.warrant.body[i] ^= 0x01;
    EXPECT_EQ(delegation::VerifyDelegation(s, edited), Verdict::kBadSignature);
  }
  DelegationToken extra = sc.token;
  extra.warrant.authorized.push_back(pbsss::GenerateKeyPair(s, e).public_key);
  EXPECT_EQ(delegation::VerifyDelegation(s, extra), Verdict::kBadSignature);
}

TEST(DeriveProxyKeyTest, KeyIsSumOfSecretsTimesWarrantPoint) {
  const PairingSuite& s = Suite();
  KeyPair o = pbsss::KeyPairFromSecret(s, S(2));
  KeyPair p = pbsss::KeyPairFromSecret(s, S(3));
  Warrant w = FixedWarrant(o.public_key, {p.public_key});
  DelegationToken token = delegation::MakeDelegation(s, o.secret, w);
  ProxyKeyMaterial m = delegation::DeriveProxyKey(s, token, p.secret);
  const HPoint hw = delegation::WarrantPoint(s, w);
  EXPECT_EQ(m.s_key, s.Mul(hw, S(5)));
  EXPECT_EQ(m.proxy_pk, p.public_key);
  EXPECT_EQ(m.warrant, w);
}

TEST(DeriveProxyKeyTest, DefiningPairingIdentityHolds) {
  const PairingSuite& s = Suite();
  SeededEntropy e(3);
  testing::Scenario sc = MakeScenario(5, e);
  const HPoint hw = delegation::WarrantPoint(s, sc.warrant);
  for (std::size_t i = 0; i < sc.materials.size(); ++i) {
    const ProxyKeyMaterial& m = sc.materials[i];
    EXPECT_EQ(s.Pair(m.s_key, s.generator()),
              s.Pair(hw, sc.original.public_key.pk + m.proxy_pk.pk));
  }
}

TEST(DeriveProxyKeyTest, UnlistedProxyAndBadTokenAreRejected) {
  const PairingSuite& s = Suite();
  SeededEntropy e(4);
  testing::Scenario sc = MakeScenario(2, e);
  KeyPair outsider = pbsss::GenerateKeyPair(s, e);
  EXPECT_THROW(delegation::DeriveProxyKey(s, sc.token, outsider.secret),
               AuthorizationError);
  DelegationToken bad = sc.token;
  bad.w_sig = s.RandomHPoint(e);
  EXPECT_THROW(delegation::DeriveProxyKey(s, bad, sc.proxies[0].secret),
               ValidationError);
}

// S_i only comes out of DeriveProxyKey, which needs the proxy's secret key
// alongside the token; no entry point builds it from public values alone.
TEST(KeySecrecyTest, ProxyKeyNeedsSecretInput) {
  using Derive = decltype(&delegation::DeriveProxyKey);
  static_assert(std::is_same_v<Derive, ProxyKeyMaterial (*)(
                                           const PairingSuite&,
                                           const DelegationToken&,
                                           const SecretKey&)>);
  static_assert(!std::is_invocable_v<Derive, const PairingSuite&,
                                     const DelegationToken&,
                                     const PublicKey&>);
  static_assert(!std::is_constructible_v<SecretKey, PublicKey>);
  SUCCEED();
}

TEST(FindAuthorizedTest, ReportsPosition) {
  SeededEntropy e(5);
  testing::Scenario sc = MakeScenario(3, e);
  EXPECT_EQ(delegation::FindAuthorized(sc.warrant, sc.proxies[2].public_key),
            2u);
  EXPECT_FALSE(
      delegation::FindAuthorized(sc.warrant, sc.original.public_key));
}

}  // namespace
}  // namespace proxyring
