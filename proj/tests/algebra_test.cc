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

#include "proxyring/algebra.h"

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "proxyring/errors.h"
#include "test_util.h"

namespace proxyring {
namespace {

using testing::S;
using testing::Suite;

// q, the order of every group.
constexpr char kOrderHex[] =
    "73eda753299d7d483339d80809a1d80553bda402fffe5bfeffffffff00000001";

Scalar RandomScalar(EntropySource& e) { return Suite().RandomScalar(e); }

TEST(ScalarTest, FieldLaws) {
  SeededEntropy e(1);
  for (int i = 0; i < 50; ++i) {
    Scalar a = RandomScalar(e), b = RandomScalar(e), c = RandomScalar(e);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).IsZero());
    EXPECT_TRUE((a + (-a)).IsZero());
    EXPECT_EQ(a * a.Inverse(), S(1));
  }
}

TEST(ScalarTest, EncodingRoundTripAndRange) {
  SeededEntropy e(2);
  for (int i = 0; i < 100; ++i) {
    Scalar a = RandomScalar(e);
    EXPECT_EQ(Scalar::FromBytes(a.ToBytes()), a);
  }
  Bytes q = FromHex(kOrderHex);
  EXPECT_THROW(Scalar::FromBytes(q), DecodeError);
  Bytes q_minus_1 = q;
  q_minus_1.back() = 0x00;
  EXPECT_EQ(Scalar::FromBytes(q_minus_1) + S(1), Scalar());
  EXPECT_THROW(Scalar::FromBytes(Bytes(31, 0)), DecodeError);
  EXPECT_THROW(Scalar::FromBytes(Bytes(32, 0xff)), DecodeError);
  EXPECT_EQ(Scalar::FromBytesReduced(q), Scalar());
}

TEST(ScalarTest, InverseOfZeroIsUsageError) {
  EXPECT_THROW(Scalar().Inverse(), UsageError);
}

TEST(PairTest, IdentityInEitherSlotGivesOne) {
  EXPECT_TRUE(Suite().Pair(HPoint(), KPoint::Generator()).IsOne());
  EXPECT_TRUE(Suite().Pair(HPoint::Generator(), KPoint()).IsOne());
}

TEST(PairTest, ScalarsMoveToExponent) {
  const HPoint u = HPoint::Generator();
  const KPoint v = KPoint::Generator();
  const PairingSuite& s = Suite();
  EXPECT_EQ(s.Pair(s.Mul(u, S(2)), s.Mul(v, S(3))),
            s.Pow(s.Pair(u, v), S(6)));
}

TEST(PairTest, GeneratorPairingRegressionVector) {
  const TElem e = Suite().Pair(HPoint::Generator(), KPoint::Generator());
  EXPECT_FALSE(e.IsOne());
  auto bytes = e.ToBytes();
  // First base-field coordinate of the standard BLS12-381 GT generator.
  EXPECT_EQ(ToHex(ByteSpan(bytes).first(48)),
            "1250ebd871fc0a92a7b2d83168d0d727272d441befa15c503dd8e90ce98db3e7"
            "b6d194f60839c508a84305aaca1789b6");
  EXPECT_EQ(ToHex(Sha256(bytes)),
            "4bb3f049849e856bd6879346f3978c28b031a407701c01ebb19d74a35c645520");
}

TEST(PairTest, Bilinearity) {
  SeededEntropy e(3);
  const PairingSuite& s = Suite();
  const HPoint u = s.RandomHPoint(e);
  const KPoint v = s.Mul(KPoint::Generator(), RandomScalar(e));
  const TElem base = s.Pair(u, v);
  for (int i = 0; i < 50; ++i) {
    Scalar a = RandomScalar(e), b = RandomScalar(e);
    EXPECT_EQ(s.Pair(s.Mul(u, a), s.Mul(v, b)), s.Pow(base, a * b));
  }
}

TEST(PairTest, LinearInEachSlot) {
  SeededEntropy e(4);
  const PairingSuite& s = Suite();
  for (int i = 0; i < 5; ++i) {
    HPoint u1 = s.RandomHPoint(e), u2 = s.RandomHPoint(e);
    KPoint v1 = s.Mul(KPoint::Generator(), RandomScalar(e));
    KPoint v2 = s.Mul(KPoint::Generator(), RandomScalar(e));
    EXPECT_EQ(s.Pair(u1 + u2, v1), s.Pair(u1, v1) * s.Pair(u2, v1));
    EXPECT_EQ(s.Pair(u1, v1 + v2), s.Pair(u1, v1) * s.Pair(u1, v2));
  }
}

TEST(PairTest, CounterCountsExactlyOnePairing) {
  OpCounter ctr;
  Suite().Pair(HPoint::Generator(), KPoint::Generator(), &ctr);
  OpCounter expected;
  expected.pairings = 1;
  EXPECT_EQ(ctr, expected);
  Suite().Pair(HPoint(), KPoint::Generator(), &ctr);
  EXPECT_EQ(ctr.pairings, 2u);
}

TEST(PairProductTest, MatchesSeparatePairings) {
  const PairingSuite& s = Suite();
  SeededEntropy e(11);
  const HPoint a[] = {s.RandomHPoint(e), HPoint(), s.RandomHPoint(e)};
  const KPoint b[] = {s.Mul(s.generator(), S(5)), s.generator(),
                      s.Mul(s.generator(), S(9))};
  OpCounter ctr;
  EXPECT_EQ(s.PairProduct(a, b, &ctr),
            s.Pair(a[0], b[0]) * s.Pair(a[1], b[1]) * s.Pair(a[2], b[2]));
  EXPECT_EQ(ctr.pairings, 3u);
  EXPECT_TRUE(s.PairProduct({}, {}).IsOne());
  // e(P, Q) * e(-P, Q) == 1
  const HPoint neg[] = {a[0], HPoint() - a[0]};
  const KPoint same[] = {b[0], b[0]};
  EXPECT_TRUE(s.PairProduct(neg, same).IsOne());
  EXPECT_THROW(s.PairProduct(std::span(a, 2), std::span(b, 3)), UsageError);
}

TEST(PowTest, ExponentLaws) {
  SeededEntropy e(5);
  const PairingSuite& s = Suite();
  const TElem t = s.Pair(s.RandomHPoint(e), KPoint::Generator());
  EXPECT_TRUE(s.Pow(t, Scalar()).IsOne());
  EXPECT_EQ(s.Pow(t, S(1)), t);
  EXPECT_EQ(s.Pow(t, S(2)), t * t);
  Scalar a = RandomScalar(e), b = RandomScalar(e);
  EXPECT_EQ(s.Pow(t, a + b), s.Pow(t, a) * s.Pow(t, b));
  EXPECT_TRUE((s.Pow(t, -S(1)) * t).IsOne());
  EXPECT_EQ(s.Pow(t, -S(1)), t.Inverse());
}

// Frozen from tests/oracles/hash_to_scalar.py, an independent Python
// implementation of expand_message_xmd.
TEST(HashToScalarTest, MatchesReferenceVectors) {
  const PairingSuite& s = Suite();
  EXPECT_EQ(ToHex(s.HashToScalar(kTagChallenge, AsBytes("")).ToBytes()),
            "26523ebf9e415385e2c5c6c7be3da9fd795a7b9bb2cf158377583c917fce5e8a");
  EXPECT_EQ(ToHex(s.HashToScalar(kTagChallenge, AsBytes("abc")).ToBytes()),
            "2be6957e9c9adfbbb660ad21a82ca9295d5e5dd0a2a9785b7d30b404d329ac57");
  EXPECT_EQ(ToHex(s.HashToScalar(kTagGlue, AsBytes("")).ToBytes()),
            "6c9d92e08a7560619884640ba187d5a7be11ab0bd71347556f81085ae3504382");
  EXPECT_EQ(ToHex(s.HashToScalar(kTagGlue, AsBytes("abc")).ToBytes()),
            "45a52e4b9653ea2ad15522dbf8c75a9afacddd888cd4f73830f216025f46dbb2");
  Bytes ramp(64);
  for (int i = 0; i < 64; ++i) ramp[i] = static_cast<std::uint8_t>(i);
  EXPECT_EQ(ToHex(s.HashToScalar(kTagChallenge, ramp).ToBytes()),
            "6910ece60736157bfa7a9c8dd47d44a8a4dad5edf206a0d3e8dffef2a4dac9ca");
  EXPECT_EQ(ToHex(s.HashToScalar(kTagGlue, ramp).ToBytes()),
            "34229a90a88286e6248ca40841be3391d2d237efc9d563b0d7452fb39a936fcd");
}

TEST(HashToScalarTest, DeterministicSeparatedAndNonzero) {
  const PairingSuite& s = Suite();
  SeededEntropy e(6);
  for (int i = 0; i < 200; ++i) {
    Bytes msg(i % 40);
    e.Fill(msg);
    Scalar a = s.HashToScalar(kTagChallenge, msg);
    EXPECT_EQ(a, s.HashToScalar(kTagChallenge, msg));
    EXPECT_NE(a, s.HashToScalar(kTagGlue, msg));
    EXPECT_FALSE(a.IsZero());
  }
}

TEST(HashToScalarTest, RejectsUnknownTags) {
  const PairingSuite& s = Suite();
  EXPECT_THROW(s.HashToScalar("PRS:H1:other", AsBytes("m")), UsageError);
  EXPECT_THROW(s.HashToScalar(kTagWarrant, AsBytes("m")), UsageError);
}

TEST(HashToGroupTest, DeterministicNonIdentityAndTagged) {
  const PairingSuite& s = Suite();
  SeededEntropy e(7);
  std::set<std::string> seen;
  for (int i = 0; i < 1000; ++i) {
    Bytes msg(8 + i % 50);
    e.Fill(msg);
    HPoint p = s.HashToGroup(kTagMessage, msg);
    EXPECT_FALSE(p.IsIdentity());
    seen.insert(ToHex(p.ToBytes()));
    if (i < 20) {
      EXPECT_EQ(p, s.HashToGroup(kTagMessage, msg));
      EXPECT_NE(p, s.HashToGroup(kTagWarrant, msg));
    }
  }
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_EQ(ToHex(s.HashToGroup(kTagMessage, AsBytes("abc")).ToBytes()),
            "90866624570a5b839702a7d0d20e6d9f7ca0b8aa48f785fb74ea4390b0b5d6de"
            "d289f93d385cd1d6529bd93c15785803");
}

TEST(HashToGroupTest, DecodedPointPairsIdentically) {
  const PairingSuite& s = Suite();
  HPoint p = s.HashToGroup(kTagWarrant, AsBytes("warrant"));
  HPoint q = HPoint::FromBytes(p.ToBytes());
  EXPECT_EQ(s.Pair(p, s.generator()), s.Pair(q, s.generator()));
}

TEST(HashToGroupTest, RejectsUnknownTags) {
  EXPECT_THROW(Suite().HashToGroup(kTagGlue, AsBytes("m")), UsageError);
  EXPECT_THROW(Suite().HashToGroup("", AsBytes("m")), UsageError);
}

TEST(RandomHPointTest, DistinctValidAndReproducible) {
  const PairingSuite& s = Suite();
  SystemEntropy sys;
  std::set<std::string> seen;
  for (int i = 0; i < 100; ++i) {
    HPoint p = s.RandomHPoint(sys);
    EXPECT_FALSE(p.IsIdentity());
    EXPECT_EQ(HPoint::FromBytes(p.ToBytes()), p);
    seen.insert(ToHex(p.ToBytes()));
  }
  EXPECT_EQ(seen.size(), 100u);

  SeededEntropy seeded(42);
  EXPECT_EQ(ToHex(s.RandomHPoint(seeded).ToBytes()),
            "963188b080502944e6f3d9bce2bfd2362bdee35fe1537b586c6516fcc9a769bc"
            "4989b2db2606fdfd66f5a25ed5bd55f9");
}

TEST(EncodingTest, RoundTripAllElementTypes) {
  const PairingSuite& s = Suite();
  SeededEntropy e(8);
  for (int i = 0; i < 100; ++i) {
    Scalar a = RandomScalar(e);
    HPoint h = s.Mul(HPoint::Generator(), a);
    KPoint k = s.Mul(KPoint::Generator(), a);
    EXPECT_EQ(Scalar::FromBytes(a.ToBytes()), a);
    EXPECT_EQ(HPoint::FromBytes(h.ToBytes()), h);
    EXPECT_EQ(KPoint::FromBytes(k.ToBytes()), k);
    if (i < 10) {
      TElem t = s.Pair(h, KPoint::Generator());
      EXPECT_EQ(TElem::FromBytes(t.ToBytes()), t);
    }
  }
  EXPECT_TRUE(HPoint::FromBytes(HPoint().ToBytes()).IsIdentity());
  EXPECT_TRUE(KPoint::FromBytes(KPoint().ToBytes()).IsIdentity());
  EXPECT_TRUE(TElem::FromBytes(TElem().ToBytes()).IsOne());
}

TEST(EncodingTest, RejectsInvalidPoints) {
  EXPECT_THROW(HPoint::FromBytes(Bytes(47, 0)), DecodeError);
  EXPECT_THROW(KPoint::FromBytes(Bytes(95, 0)), DecodeError);
  // Uncompressed-form flag bit clear.
  EXPECT_THROW(HPoint::FromBytes(Bytes(48, 0)), DecodeError);

  // Random compressed x coordinates: roughly half lie on the curve, and
  // none of those are in the prime-order subgroup.
  blst_p1_affine aff;
  int on_curve = 0;
  SeededEntropy e(9);
  for (int i = 0; i < 64; ++i) {
    Bytes b(48);
    e.Fill(b);
    b[0] = static_cast<std::uint8_t>(0x80 | (b[0] & 0x0f));
    if (blst_p1_uncompress(&aff, b.data()) == BLST_SUCCESS) ++on_curve;
    EXPECT_THROW(HPoint::FromBytes(b), DecodeError);
  }
  EXPECT_GT(on_curve, 0);
}

TEST(EncodingTest, RejectsInvalidTargetElements) {
  const TElem t = Suite().Pair(HPoint::Generator(), KPoint::Generator());
  auto bytes = t.ToBytes();
  Bytes big(bytes.begin(), bytes.end());
  std::fill(big.begin(), big.begin() + 48, 0xff);  // coordinate >= p
  EXPECT_THROW(TElem::FromBytes(big), DecodeError);

  Bytes off(bytes.begin(), bytes.end());
  off[47] ^= 0x01;  // canonical, but leaves the subgroup
  EXPECT_THROW(TElem::FromBytes(off), DecodeError);

  EXPECT_THROW(TElem::FromBytes(Bytes(575, 0)), DecodeError);
}

}  // namespace
}  // namespace proxyring
