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

#include <gtest/gtest.h>

#include "proxyring/errors.h"
#include "test_util.h"

namespace proxyring {
namespace {

using testing::S;
using testing::Suite;

TEST(KeyGenTest, FixedSecrets) {
  const PairingSuite& s = Suite();
  EXPECT_EQ(pbsss::KeyPairFromSecret(s, S(1)).public_key.pk, s.generator());
  EXPECT_EQ(pbsss::KeyPairFromSecret(s, S(2)).public_key.pk,
            s.generator() + s.generator());
  EXPECT_THROW(pbsss::KeyPairFromSecret(s, Scalar()), UsageError);
}

TEST(KeyGenTest, RandomKeysAreDistinctAndConsistent) {
  const PairingSuite& s = Suite();
  SystemEntropy e;
  KeyPair a = pbsss::GenerateKeyPair(s, e);
  KeyPair b = pbsss::GenerateKeyPair(s, e);
  EXPECT_NE(a.public_key, b.public_key);
  EXPECT_EQ(a.public_key.pk, s.Mul(s.generator(), a.secret.s));
  EXPECT_FALSE(a.secret.s.IsZero());
}

TEST(SignTest, DeterministicAndLinearInSecret) {
  const PairingSuite& s = Suite();
  const Bytes msg = BytesOf("pay 10 to bob");
  KeyPair one = pbsss::KeyPairFromSecret(s, S(1));
  EXPECT_EQ(pbsss::Sign(s, one.secret, kTagMessage, msg).sig,
            s.HashToGroup(kTagMessage, msg));

  SeededEntropy e(11);
  Scalar a = s.RandomScalar(e), b = s.RandomScalar(e);
  KeyPair ab = pbsss::KeyPairFromSecret(s, a * b);
  ShortSignature sig = pbsss::Sign(s, ab.secret, kTagMessage, msg);
  EXPECT_EQ(sig, pbsss::Sign(s, ab.secret, kTagMessage, msg));
  EXPECT_EQ(sig.sig, s.Mul(s.Mul(s.HashToGroup(kTagMessage, msg), a), b));
}

TEST(VerifyTest, CompletenessAndPairingCount) {
  const PairingSuite& s = Suite();
  SeededEntropy e(12);
  for (int i = 0; i < 20; ++i) {
    KeyPair kp = pbsss::GenerateKeyPair(s, e);
    Bytes msg(i * 37);
    e.Fill(msg);
    ShortSignature sig = pbsss::Sign(s, kp.secret, kTagMessage, msg);
    OpCounter ctr;
    EXPECT_EQ(pbsss::Verify(s, kp.public_key, kTagMessage, msg, sig, &ctr),
              Verdict::kAccept);
    EXPECT_EQ(ctr.pairings, 2u);
  }
}

TEST(VerifyTest, RejectsRandomSignaturesAndFlippedMessages) {
  const PairingSuite& s = Suite();
  SeededEntropy e(13);
  KeyPair kp = pbsss::GenerateKeyPair(s, e);
  const Bytes msg = BytesOf("original message");
  ShortSignature sig = pbsss::Sign(s, kp.secret, kTagMessage, msg);
  for (int i = 0; i < 100; ++i) {
    ShortSignature forged{s.RandomHPoint(e)};
    EXPECT_EQ(pbsss::Verify(s, kp.public_key, kTagMessage, msg, forged),
              Verdict::kBadSignature);
  }
  for (std::size_t bit = 0; bit < msg.size() * 8; ++bit) {
    Bytes flipped = msg;
    flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    EXPECT_EQ(pbsss::Verify(s, kp.public_key, kTagMessage, flipped, sig),
              Verdict::kBadSignature);
  }
}

TEST(VerifyTest, TagSeparatesWarrantAndMessageSignatures) {
  const PairingSuite& s = Suite();
  SeededEntropy e(14);
  KeyPair kp = pbsss::GenerateKeyPair(s, e);
  const Bytes msg = BytesOf("same bytes");
  ShortSignature sig = pbsss::Sign(s, kp.secret, kTagWarrant, msg);
  EXPECT_EQ(pbsss::Verify(s, kp.public_key, kTagWarrant, msg, sig),
            Verdict::kAccept);
  EXPECT_EQ(pbsss::Verify(s, kp.public_key, kTagMessage, msg, sig),
            Verdict::kBadSignature);
}

TEST(VerifyTest, IndependentKeysDoNotCrossVerify) {
  const PairingSuite& s = Suite();
  SeededEntropy e(15);
  for (int i = 0; i < 100; ++i) {
    KeyPair a = pbsss::GenerateKeyPair(s, e);
    KeyPair b = pbsss::GenerateKeyPair(s, e);
    Bytes msg(16);
    e.Fill(msg);
    ShortSignature sig = pbsss::Sign(s, a.secret, kTagMessage, msg);
    EXPECT_EQ(pbsss::Verify(s, b.public_key, kTagMessage, msg, sig),
              Verdict::kBadSignature);
  }
}

TEST(VerifyTest, MalformedEncodingIsDistinguished) {
  const PairingSuite& s = Suite();
  SeededEntropy e(16);
  KeyPair kp = pbsss::GenerateKeyPair(s, e);
  const Bytes msg = BytesOf("m");
  auto good = pbsss::Sign(s, kp.secret, kTagMessage, msg).sig.ToBytes();
  EXPECT_EQ(pbsss::VerifyEncoded(s, kp.public_key, kTagMessage, msg, good),
            Verdict::kAccept);
  EXPECT_EQ(pbsss::VerifyEncoded(s, kp.public_key, kTagMessage, msg,
                                 Bytes(48, 0)),
            Verdict::kMalformed);
  EXPECT_EQ(pbsss::VerifyEncoded(s, kp.public_key, kTagMessage, msg,
                                 ByteSpan(good).first(40)),
            Verdict::kMalformed);
}

}  // namespace
}  // namespace proxyring
