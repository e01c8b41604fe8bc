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

#include <gtest/gtest.h>

#include "proxyring/errors.h"
#include "proxyring/wire.h"
#include "test_util.h"

namespace proxyring {
namespace {

using testing::MakeScenario;
using testing::S;
using testing::Scenario;
using testing::Suite;

const Bytes kMsg = BytesOf("transfer 250 units to account 7");

TEST(ChallengeTest, BindsMessageAndRingOrder) {
  const PairingSuite& s = Suite();
  SeededEntropy e(1);
  Scenario sc = MakeScenario(3, e);
  Scalar h = ringsig::ComputeChallenge(s, kMsg, sc.ring).h;
  EXPECT_EQ(h, ringsig::ComputeChallenge(s, kMsg, sc.ring).h);
  EXPECT_FALSE(h.IsZero());
  EXPECT_NE(h, ringsig::ComputeChallenge(s, BytesOf("other"), sc.ring).h);
  RingSpec swapped = sc.ring;
  std::swap(swapped.members[0], swapped.members[1]);
  EXPECT_NE(h, ringsig::ComputeChallenge(s, kMsg, swapped).h);
}

TEST(GlueScalarTest, DeterministicDistinctNonzero) {
  const PairingSuite& s = Suite();
  SeededEntropy e(2);
  TElem c1 = s.Pair(s.RandomHPoint(e), s.generator());
  TElem c2 = s.Pair(s.RandomHPoint(e), s.generator());
  Scalar g1 = ringsig::GlueScalar(s, c1);
  EXPECT_EQ(g1, ringsig::GlueScalar(s, c1));
  EXPECT_NE(g1, ringsig::GlueScalar(s, c2));
  EXPECT_FALSE(g1.IsZero());
  EXPECT_EQ(g1, s.HashToScalar(kTagGlue, c1.ToBytes()));
}

TEST(RecurrenceStepTest, IdentityTGivesFirstFactorAndExponentLaw) {
  const PairingSuite& s = Suite();
  SeededEntropy e(3);
  Scenario sc = MakeScenario(3, e);
  Challenge h = ringsig::ComputeChallenge(s, kMsg, sc.ring);
  TElem c = s.Pair(s.RandomHPoint(e), s.generator());
  const HPoint hw = delegation::WarrantPoint(s, sc.warrant);
  const KPoint key = sc.original.public_key.pk + sc.ring.members[1].pk;
  const TElem base = s.Pair(s.Mul(hw, ringsig::GlueScalar(s, c)), key);

  OpCounter ctr;
  TElem out = ringsig::RecurrenceStep(s, sc.warrant, sc.ring, h, 1, c,
                                      HPoint(), &ctr);
  EXPECT_EQ(out, s.Pow(base, h.h));
  EXPECT_EQ(ctr.pairings, 2u);

  TElem doubled = ringsig::RecurrenceStep(s, sc.warrant, sc.ring,
                                          Challenge{h.h + h.h}, 1, c, HPoint());
  EXPECT_EQ(doubled, out * out);

  HPoint t = s.RandomHPoint(e);
  EXPECT_EQ(ringsig::RecurrenceStep(s, sc.warrant, sc.ring, h, 1, c, t),
            out * s.Pair(t, s.generator()));
}

TEST(RecurrenceStepTest, IndexOutOfRange) {
  const PairingSuite& s = Suite();
  SeededEntropy e(4);
  Scenario sc = MakeScenario(2, e);
  Challenge h = ringsig::ComputeChallenge(s, kMsg, sc.ring);
  EXPECT_THROW(ringsig::RecurrenceStep(s, sc.warrant, sc.ring, h, 2, TElem(),
                                       HPoint()),
               UsageError);
}

TEST(RingSignTest, SingleMemberRing) {
  const PairingSuite& s = Suite();
  SeededEntropy e(5);
  Scenario sc = MakeScenario(1, e);
  SigningTrace trace;
  ProxyRingSignature sig =
      ringsig::RingSign(s, sc.materials[0], sc.ring, 0, kMsg, e, &trace);
  ASSERT_EQ(sig.glue.size(), 1u);
  EXPECT_EQ(sig.glue[0], s.Pair(trace.a, s.generator()));
  Scalar h = ringsig::ComputeChallenge(s, kMsg, sc.ring).h;
  EXPECT_EQ(sig.t_sum, trace.a - s.Mul(sc.materials[0].s_key,
                                       h * ringsig::GlueScalar(s, sig.glue[0])));
  EXPECT_EQ(ringsig::RingVerify(s, sig, kMsg), Verdict::kAccept);
}

TEST(RingSignTest, CompletenessAcrossSizesAndPositions) {
  const PairingSuite& s = Suite();
  SeededEntropy e(6);
  for (std::size_t n : {2u, 5u, 10u}) {
    Scenario sc = MakeScenario(n, e);
    for (std::size_t k : {std::size_t{0}, n / 2, n - 1}) {
      ProxyRingSignature sig =
          ringsig::RingSign(s, sc.materials[k], sc.ring, k, kMsg, e);
      EXPECT_EQ(ringsig::RingVerify(s, sig, kMsg), Verdict::kAccept)
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(RingSignTest, SubsetRingOfLargerWarrant) {
  const PairingSuite& s = Suite();
  SeededEntropy e(7);
  Scenario sc = MakeScenario(5, e);
  RingSpec subset{sc.original.public_key,
                  {sc.proxies[4].public_key, sc.proxies[1].public_key,
                   sc.proxies[2].public_key}};
  ProxyRingSignature sig =
      ringsig::RingSign(s, sc.materials[1], subset, 1, kMsg, e);
  EXPECT_EQ(ringsig::RingVerify(s, sig, kMsg), Verdict::kAccept);
}

TEST(RingSignTest, FreshEntropyGivesFreshGlue) {
  const PairingSuite& s = Suite();
  SeededEntropy e(8);
  Scenario sc = MakeScenario(3, e);
  SystemEntropy sys;
  auto a = ringsig::RingSign(s, sc.materials[0], sc.ring, 0, kMsg, sys);
  auto b = ringsig::RingSign(s, sc.materials[0], sc.ring, 0, kMsg, sys);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NE(a.glue[i], b.glue[i]);
  EXPECT_NE(a.t_sum, b.t_sum);
}

TEST(RingSignTest, ClosureReproducesGlueIncludingWrap) {
  const PairingSuite& s = Suite();
  SeededEntropy e(9);
  Scenario sc = MakeScenario(4, e);
  Challenge h = ringsig::ComputeChallenge(s, kMsg, sc.ring);
  for (std::size_t k = 0; k < 4; ++k) {
    SigningTrace trace;
    auto sig = ringsig::RingSign(s, sc.materials[k], sc.ring, k, kMsg, e,
                                 &trace);
    ASSERT_EQ(trace.t.size(), 4u);
    HPoint sum;
    for (const HPoint& t : trace.t) sum += t;
    EXPECT_EQ(sum, sig.t_sum);
    EXPECT_EQ(sig.glue[(k + 1) % 4], s.Pair(trace.a, s.generator()));
    for (std::size_t i = 0; i < 4; ++i) {
      EXPECT_EQ(ringsig::RecurrenceStep(s, sc.warrant, sc.ring, h, i,
                                        sig.glue[i], trace.t[i]),
                sig.glue[(i + 1) % 4])
          << "k=" << k << " i=" << i;
    }
  }
}

TEST(RingSignTest, PreconditionErrors) {
  const PairingSuite& s = Suite();
  SeededEntropy e(10);
  Scenario sc = MakeScenario(3, e);
  const ProxyKeyMaterial& m0 = sc.materials[0];
  EXPECT_THROW(ringsig::RingSign(s, m0, sc.ring, 3, kMsg, e), UsageError);
  EXPECT_THROW(ringsig::RingSign(s, m0, sc.ring, 1, kMsg, e), UsageError);

  RingSpec empty{sc.original.public_key, {}};
  EXPECT_THROW(ringsig::RingSign(s, m0, empty, 0, kMsg, e), UsageError);

  RingSpec dup = sc.ring;
  dup.members[1] = dup.members[0];
  EXPECT_THROW(ringsig::RingSign(s, m0, dup, 0, kMsg, e), UsageError);

  RingSpec outsider = sc.ring;
  outsider.members[2] = pbsss::GenerateKeyPair(s, e).public_key;
  EXPECT_THROW(ringsig::RingSign(s, m0, outsider, 0, kMsg, e),
               AuthorizationError);

  RingSpec other_original = sc.ring;
  other_original.original = pbsss::GenerateKeyPair(s, e).public_key;
  EXPECT_THROW(ringsig::RingSign(s, m0, other_original, 0, kMsg, e),
               AuthorizationError);
}

TEST(RingVerifyTest, ReplacedGlueValueRejectsAtEveryPosition) {
  const PairingSuite& s = Suite();
  SeededEntropy e(11);
  Scenario sc = MakeScenario(3, e);
  auto sig = ringsig::RingSign(s, sc.materials[2], sc.ring, 2, kMsg, e);
  for (std::size_t i = 0; i < 3; ++i) {
    for (int trial = 0; trial < 100; ++trial) {
      ProxyRingSignature bad = sig;
      bad.glue[i] = s.Pair(s.RandomHPoint(e), s.generator());
      ASSERT_EQ(ringsig::RingVerify(s, bad, kMsg), Verdict::kBadSignature);
    }
  }
}

TEST(RingVerifyTest, KeyWithoutDelegationTermRejects) {
  const PairingSuite& s = Suite();
  SeededEntropy e(12);
  Scenario sc = MakeScenario(3, e);
  ProxyKeyMaterial forged = sc.materials[1];
  forged.s_key = s.Mul(delegation::WarrantPoint(s, sc.warrant),
                       sc.proxies[1].secret.s);
  auto sig = ringsig::RingSign(s, forged, sc.ring, 1, kMsg, e);
  EXPECT_EQ(ringsig::RingVerify(s, sig, kMsg), Verdict::kBadSignature);
}

TEST(RingVerifyTest, CausesAreReported) {
  const PairingSuite& s = Suite();
  SeededEntropy e(13);
  Scenario sc = MakeScenario(3, e);
  auto sig = ringsig::RingSign(s, sc.materials[0], sc.ring, 0, kMsg, e);

  ProxyRingSignature unauthorized = sig;
  unauthorized.ring.members[2] = pbsss::GenerateKeyPair(s, e).public_key;
  EXPECT_EQ(ringsig::RingVerify(s, unauthorized, kMsg),
            Verdict::kUnauthorizedRing);

  ProxyRingSignature short_glue = sig;
  short_glue.glue.pop_back();
  EXPECT_EQ(ringsig::RingVerify(s, short_glue, kMsg), Verdict::kMalformed);

  ProxyRingSignature dup = sig;
  dup.ring.members[1] = dup.ring.members[0];
  EXPECT_EQ(ringsig::RingVerify(s, dup, kMsg), Verdict::kMalformed);

  EXPECT_EQ(ringsig::RingVerify(s, sig, BytesOf("different")),
            Verdict::kBadSignature);

  Bytes env = wire::EncodeSignature(s, sig);
  EXPECT_EQ(ringsig::RingVerifyEncoded(s, env, kMsg), Verdict::kAccept);
  env.resize(env.size() - 1);
  EXPECT_EQ(ringsig::RingVerifyEncoded(s, env, kMsg), Verdict::kMalformed);
}

TEST(RingVerifyTest, TwoPairingsForAnyRingSize) {
  const PairingSuite& s = Suite();
  SeededEntropy e(14);
  for (std::size_t n : {1u, 4u, 12u}) {
    Scenario sc = MakeScenario(n, e);
    auto sig = ringsig::RingSign(s, sc.materials[0], sc.ring, 0, kMsg, e);
    OpCounter ctr;
    ASSERT_EQ(ringsig::RingVerify(s, sig, kMsg, &ctr), Verdict::kAccept);
    EXPECT_EQ(ctr.pairings, 2u);
    EXPECT_EQ(ctr.k_mults, n + 1);
    EXPECT_EQ(ctr.t_exps, 0u);
  }
}

TEST(CountVerifyCostTest, ConstantPairingsLinearKeyMults) {
  const PairingSuite& s = Suite();
  OpCounter one = ringsig::CountVerifyCost(s, 1);
  OpCounter ten = ringsig::CountVerifyCost(s, 10);
  EXPECT_EQ(one.pairings, 2u);
  EXPECT_EQ(ten.pairings, 2u);
  EXPECT_GE(ten.k_mults, 10u);
  EXPECT_GT(ten.k_mults, one.k_mults);
  EXPECT_THROW(ringsig::CountVerifyCost(s, 0), UsageError);
}

}  // namespace
}  // namespace proxyring
