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

#include "proxyring/wire.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "proxyring/errors.h"
#include "test_util.h"

namespace proxyring {
namespace {

using testing::LoadGolden;
using testing::ObjectPool;
using testing::Suite;

const Bytes kGoldenMessage = BytesOf("golden fixture message");

// SHA-256 of each committed golden envelope.
const std::map<std::string, std::string> kGoldenDigests = {
    {"public_key.hex",
     "d79655cc1eb30d19f6c4d3a9979d2268065632c73696f5b909512a7dd5bc04a5"},
    {"secret_key.hex",
     "27212eebac89edac381dbcfab0e688091981d628d44d033c8aca347bf5c811b0"},
    {"warrant.hex",
     "4ced467e705e2adc09912f4c2549976c5a5ded6af0ccd8fb3b49ee579e9b1a0d"},
    {"token.hex",
     "86e93e78dc13e54bdd66e6d7277b7f13a31bbda3ddb13db9a5f82a3a06c334b5"},
    {"signature.hex",
     "292539cb4251fb8e528e841d63da6b9fe6f01163791386ed99c331abb75a3e05"},
    {"proxy_key.hex",
     "b5d8c2016d47402d36ccb6bbb3d4c79d6cfdcef587379b9312cde2f1b4cdf909"},
};

TEST(GoldenTest, FilesAreUnchanged) {
  for (const auto& [name, digest] : kGoldenDigests) {
    EXPECT_EQ(ToHex(Sha256(LoadGolden(name))), digest) << name;
  }
}

TEST(GoldenTest, DecodeAndReencodeByteExactly) {
  const PairingSuite& s = Suite();
  Bytes pk = LoadGolden("public_key.hex");
  Bytes sk = LoadGolden("secret_key.hex");
  Bytes w = LoadGolden("warrant.hex");
  Bytes tok = LoadGolden("token.hex");
  Bytes sig = LoadGolden("signature.hex");
  Bytes pkey = LoadGolden("proxy_key.hex");
  EXPECT_EQ(wire::EncodePublicKey(s, wire::DecodePublicKey(s, pk)), pk);
  EXPECT_EQ(wire::EncodeSecretKey(s, wire::DecodeSecretKey(s, sk)), sk);
  EXPECT_EQ(wire::EncodeWarrant(s, wire::DecodeWarrant(s, w)), w);
  EXPECT_EQ(wire::EncodeToken(s, wire::DecodeToken(s, tok)), tok);
  EXPECT_EQ(wire::EncodeSignature(s, wire::DecodeSignature(s, sig)), sig);
  EXPECT_EQ(wire::EncodeProxyKey(s, wire::DecodeProxyKey(s, pkey)), pkey);
}

TEST(GoldenTest, ObjectsAreMutuallyConsistent) {
  const PairingSuite& s = Suite();
  const SecretKey sk = wire::DecodeSecretKey(s, LoadGolden("secret_key.hex"));
  const PublicKey pk = wire::DecodePublicKey(s, LoadGolden("public_key.hex"));
  EXPECT_EQ(s.Mul(s.generator(), sk.s), pk.pk);
  const Warrant w = wire::DecodeWarrant(s, LoadGolden("warrant.hex"));
  EXPECT_EQ(w.original, pk);
  EXPECT_EQ(w.body, BytesOf("golden fixture warrant"));
  const DelegationToken tok = wire::DecodeToken(s, LoadGolden("token.hex"));
  EXPECT_EQ(tok.warrant, w);
  EXPECT_EQ(delegation::VerifyDelegation(s, tok), Verdict::kAccept);
  const ProxyKeyMaterial m =
      wire::DecodeProxyKey(s, LoadGolden("proxy_key.hex"));
  EXPECT_EQ(m.warrant, w);
  const ProxyRingSignature sig =
      wire::DecodeSignature(s, LoadGolden("signature.hex"));
  EXPECT_EQ(sig.ring.members.at(1), m.proxy_pk);
  EXPECT_EQ(ringsig::RingVerify(s, sig, kGoldenMessage), Verdict::kAccept);
}

TEST(EnvelopeTest, HeaderLayout) {
  const PairingSuite& s = Suite();
  Bytes env = LoadGolden("public_key.hex");
  ASSERT_GE(env.size(), 4u + 1 + 4 + 9 + 1 + 96);
  EXPECT_TRUE(std::equal(wire::kMagic.begin(), wire::kMagic.end(),
                         env.begin()));
  EXPECT_EQ(env[4], 0x01);
  EXPECT_EQ(ToHex(ByteSpan(env).subspan(5, 4)), "00000009");
  EXPECT_EQ(std::string(env.begin() + 9, env.begin() + 18), s.id());
  EXPECT_EQ(env[18], 0x01);
  EXPECT_EQ(env.size(), 19u + 96);

  wire::Envelope parsed = wire::DecodeEnvelope(env);
  EXPECT_EQ(parsed.kind, wire::Kind::kPublicKey);
  EXPECT_EQ(wire::EncodeEnvelope(parsed), env);
}

TEST(EnvelopeTest, RejectsBadHeaders) {
  const PairingSuite& s = Suite();
  const Bytes env = LoadGolden("public_key.hex");
  auto with = [&](std::size_t pos, std::uint8_t value) {
    Bytes b = env;
    b[pos] = value;
    return b;
  };
  EXPECT_THROW(wire::DecodePublicKey(s, with(0, 'X')), DecodeError);
  EXPECT_THROW(wire::DecodePublicKey(s, with(4, 0x02)), DecodeError);
  EXPECT_THROW(wire::DecodePublicKey(s, with(9, 'X')), DecodeError);  // suite
  EXPECT_THROW(wire::DecodePublicKey(s, with(18, 0x07)), DecodeError);
  EXPECT_THROW(wire::DecodeEnvelope(with(18, 0x00)), DecodeError);
  Bytes trailing = env;
  trailing.push_back(0);
  EXPECT_THROW(wire::DecodePublicKey(s, trailing), DecodeError);
  for (std::size_t len = 0; len < env.size(); ++len) {
    EXPECT_THROW(wire::DecodePublicKey(s, ByteSpan(env).first(len)),
                 DecodeError);
  }
}

TEST(EnvelopeTest, CrossKindDecodeFails) {
  const PairingSuite& s = Suite();
  const Bytes tok = LoadGolden("token.hex");
  const Bytes sig = LoadGolden("signature.hex");
  const Bytes w = LoadGolden("warrant.hex");
  EXPECT_THROW(wire::DecodeSignature(s, tok), DecodeError);
  EXPECT_THROW(wire::DecodeToken(s, sig), DecodeError);
  EXPECT_THROW(wire::DecodeToken(s, w), DecodeError);
  EXPECT_THROW(wire::DecodeWarrant(s, tok), DecodeError);
  EXPECT_THROW(wire::DecodePublicKey(s, LoadGolden("secret_key.hex")),
               DecodeError);
  EXPECT_THROW(wire::DecodeSecretKey(s, LoadGolden("public_key.hex")),
               DecodeError);
  EXPECT_THROW(wire::DecodeProxyKey(s, tok), DecodeError);
}

TEST(WarrantWireTest, PayloadLayout) {
  ObjectPool pool(1, 8);
  Warrant w = pool.RandomWarrant();
  Bytes p = wire::EncodeWarrantPayload(w);
  EXPECT_EQ(p.size(),
            4 + w.body.size() + 96 + 16 + 4 + 96 * w.authorized.size());
  EXPECT_TRUE(std::equal(w.body.begin(), w.body.end(), p.begin() + 4));
  EXPECT_TRUE(std::equal(w.nonce.begin(), w.nonce.end(),
                         p.begin() + 4 + w.body.size() + 96));
}

TEST(WarrantWireTest, RoundTripAndNonceInjectivity) {
  const PairingSuite& s = Suite();
  ObjectPool pool(2);
  for (int i = 0; i < 100; ++i) {
    Warrant w = pool.RandomWarrant();
    EXPECT_EQ(wire::DecodeWarrant(s, wire::EncodeWarrant(s, w)), w);
    Warrant other = w;
    other.nonce[i % 16] ^= 0x80;
    EXPECT_NE(wire::EncodeWarrantPayload(w), wire::EncodeWarrantPayload(other));
  }
}

TEST(WarrantWireTest, RejectsDuplicateAndEmptyKeyLists) {
  const PairingSuite& s = Suite();
  ObjectPool pool(3, 8);
  Warrant w = pool.RandomWarrant();
  Warrant dup = w;
  dup.authorized = {w.original, w.original};
  EXPECT_THROW(wire::DecodeWarrant(s, wire::EncodeWarrant(s, dup)),
               DecodeError);
  Warrant empty = w;
  empty.authorized.clear();
  EXPECT_THROW(wire::DecodeWarrant(s, wire::EncodeWarrant(s, empty)),
               DecodeError);
  Warrant identity = w;
  identity.authorized = {PublicKey{KPoint()}};
  EXPECT_THROW(wire::DecodeWarrant(s, wire::EncodeWarrant(s, identity)),
               DecodeError);
}

TEST(WarrantWireTest, SingleByteMutationsNeverDecodeSilently) {
  const PairingSuite& s = Suite();
  ObjectPool pool(4, 8);
  const Warrant w = pool.RandomWarrant();
  const Bytes env = wire::EncodeWarrant(s, w);
  auto stats = testing::MutateEnvelope<Warrant>(
      env, w, [&](ByteSpan b) { return wire::DecodeWarrant(s, b); },
      [&](const Warrant& x) { return wire::EncodeWarrant(s, x); },
      pool.entropy(), 1000);
  EXPECT_EQ(stats.silent_equal, 0);
  EXPECT_EQ(stats.non_canonical, 0);
  EXPECT_EQ(stats.rejected + stats.changed, 1000);
}

TEST(SignatureWireTest, RoundTripAndVerifyPreserved) {
  const PairingSuite& s = Suite();
  SeededEntropy e(5);
  testing::Scenario sc = testing::MakeScenario(3, e);
  const Bytes msg = BytesOf("m");
  auto sig = ringsig::RingSign(s, sc.materials[0], sc.ring, 0, msg, e);
  auto decoded = wire::DecodeSignature(s, wire::EncodeSignature(s, sig));
  EXPECT_EQ(decoded, sig);
  EXPECT_EQ(ringsig::RingVerify(s, decoded, msg), Verdict::kAccept);

  ProxyRingSignature broken = sig;
  broken.t_sum = s.RandomHPoint(e);
  auto decoded_broken =
      wire::DecodeSignature(s, wire::EncodeSignature(s, broken));
  EXPECT_EQ(ringsig::RingVerify(s, decoded_broken, msg),
            Verdict::kBadSignature);

  ObjectPool pool(6, 8);
  for (int i = 0; i < 100; ++i) {
    auto r = pool.RandomSignature();
    EXPECT_EQ(wire::DecodeSignature(s, wire::EncodeSignature(s, r)), r);
  }
}

TEST(SignatureWireTest, GlueCountMustMatchRing) {
  const PairingSuite& s = Suite();
  ObjectPool pool(7, 8);
  ProxyRingSignature sig = pool.RandomSignature();
  sig.glue.push_back(pool.T());
  EXPECT_THROW(wire::DecodeSignature(s, wire::EncodeSignature(s, sig)),
               DecodeError);
  sig.glue.clear();
  EXPECT_THROW(wire::DecodeSignature(s, wire::EncodeSignature(s, sig)),
               DecodeError);
}

TEST(KeyWireTest, RoundTrips) {
  const PairingSuite& s = Suite();
  ObjectPool pool(8, 16);
  for (int i = 0; i < 100; ++i) {
    const KeyPair& kp = pool.Key();
    EXPECT_EQ(wire::DecodePublicKey(s, wire::EncodePublicKey(s, kp.public_key)),
              kp.public_key);
    EXPECT_EQ(
        wire::DecodeSecretKey(s, wire::EncodeSecretKey(s, kp.secret)).s,
        kp.secret.s);
    auto tok = pool.RandomToken();
    EXPECT_EQ(wire::DecodeToken(s, wire::EncodeToken(s, tok)), tok);
    auto pkey = pool.RandomProxyKey();
    EXPECT_EQ(wire::DecodeProxyKey(s, wire::EncodeProxyKey(s, pkey)), pkey);
  }
}

TEST(KeyWireTest, SecretKeyLayoutAndFlag) {
  const PairingSuite& s = Suite();
  KeyPair kp = pbsss::KeyPairFromSecret(s, Scalar::FromUint64(0x1234));
  Bytes env = wire::EncodeSecretKey(s, kp.secret);
  ASSERT_EQ(env.size(), 19u + 1 + 32);
  EXPECT_EQ(env[18], 0x02);
  EXPECT_EQ(env[19], wire::kPlaintextFlag);
  EXPECT_EQ(env[51], 0x34);
  EXPECT_EQ(env[50], 0x12);
  Bytes encrypted = env;
  encrypted[19] = 0x01;
  EXPECT_THROW(wire::DecodeSecretKey(s, encrypted), DecodeError);
  Bytes zero = env;
  std::fill(zero.begin() + 20, zero.end(), 0);
  EXPECT_THROW(wire::DecodeSecretKey(s, zero), DecodeError);
}

// The 32 secret bytes never show up inside any public envelope.
TEST(KeyWireTest, SecretNeverInPublicPayloads) {
  const PairingSuite& s = Suite();
  SeededEntropy e(9);
  testing::Scenario sc = testing::MakeScenario(3, e);
  auto sig = ringsig::RingSign(s, sc.materials[0], sc.ring, 0,
                               BytesOf("m"), e);
  const std::vector<Bytes> public_envs = {
      wire::EncodePublicKey(s, sc.original.public_key),
      wire::EncodeWarrant(s, sc.warrant),
      wire::EncodeToken(s, sc.token),
      wire::EncodeSignature(s, sig),
  };
  std::vector<KeyPair> all = sc.proxies;
  all.push_back(sc.original);
  for (const KeyPair& kp : all) {
    auto secret = kp.secret.s.ToBytes();
    for (const Bytes& env : public_envs) {
      EXPECT_EQ(std::search(env.begin(), env.end(), secret.begin(),
                            secret.end()),
                env.end());
    }
  }
}

TEST(ArmorTest, HexRoundTripAndDetection) {
  const Bytes env = LoadGolden("token.hex");
  std::string armored = wire::Armor(env);
  EXPECT_EQ(armored.back(), '\n');
  EXPECT_EQ(wire::Dearmor(AsBytes(armored)), env);
  EXPECT_EQ(wire::Dearmor(AsBytes("  \n" + armored + "\n\n")), env);
  EXPECT_EQ(wire::Dearmor(env), env);
  EXPECT_THROW(wire::Dearmor(AsBytes("50525g")), DecodeError);
  EXPECT_THROW(wire::Dearmor(AsBytes("505")), DecodeError);
  std::string upper = armored;
  std::transform(upper.begin(), upper.end(), upper.begin(), ::toupper);
  EXPECT_EQ(wire::Dearmor(AsBytes(upper)), env);
}

}  // namespace
}  // namespace proxyring
