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


// Drives the prs binary end to end through the shell.

#include <gtest/gtest.h>
#include <sys/stat.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "proxyring/bytes.h"
#include "proxyring/keystore.h"
#include "proxyring/wire.h"
#include "test_util.h"

namespace proxyring {
namespace {

namespace fs = std::filesystem;
using testing::Suite;

// magic, version, length, suite id, kind
constexpr std::size_t kHeader = 4 + 1 + 4 + 9 + 1;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           ("prs-cli-" + std::to_string(::getpid()) + "-" + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ks_ = dir_ / "ks";
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Arguments are test-controlled and contain no shell metacharacters.
  Result Prs(const std::string& args, bool test_mode = false) {
    const fs::path out = dir_ / "stdout", err = dir_ / "stderr";
    std::string cmd = "PRS_KEYSTORE='" + ks_.string() + "' ";
    cmd += test_mode ? "PRS_TEST_MODE=1 " : "PRS_TEST_MODE= ";
    cmd += std::string("'") + PRS_BINARY + "' " + args + " >'" +
           out.string() + "' 2>'" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    Result r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = Slurp(out);
    r.err = Slurp(err);
    return r;
  }

  std::string P(const std::string& name) const { return (dir_ / name).string(); }
  std::string Pub(const std::string& label) const {
    return (ks_ / (label + ".pub")).string();
  }
  void Write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name, std::ios::binary) << text;
  }
  wire::Kind KindOf(const fs::path& p) {
    return wire::DecodeEnvelope(wire::Dearmor(ReadFileBytes(p))).kind;
  }

  // alice delegates to bob, carol, dave; bob accepts.
  void Delegate() {
    for (const char* l : {"alice", "bob", "carol", "dave", "mallory"}) {
      ASSERT_EQ(Prs(std::string("keygen ") + l).code, 0) << l;
    }
    Write("terms", "may sign purchase orders");
    Write("msg", "order #1138");
    ASSERT_EQ(Prs("delegate --from alice --body " + P("terms") + " --proxy " +
                  Pub("bob") + " " + Pub("carol") + " " + Pub("dave") +
                  " --out " + P("token.hex"))
                  .code,
              0);
    ASSERT_EQ(Prs("proxy-accept --token " + P("token.hex") + " --key bob").code,
              0);
  }

  std::string Ring(std::initializer_list<const char*> labels) {
    std::string s;
    for (const char* l : labels) s += " " + Pub(l);
    return s;
  }

  fs::path dir_;
  fs::path ks_;
};

TEST_F(CliTest, KeygenWritesSecretAndPublicEnvelopes) {
  Result r = Prs("keygen alice");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(KindOf(ks_ / "alice.pub"), wire::Kind::kPublicKey);
  EXPECT_EQ(KindOf(ks_ / "alice.sec"), wire::Kind::kSecretKey);
  EXPECT_EQ(r.out,
            wire::Armor(wire::Dearmor(ReadFileBytes(ks_ / "alice.pub"))));
  struct stat st {};
  ASSERT_EQ(::stat((ks_ / "alice.sec").c_str(), &st), 0);
  EXPECT_EQ(st.st_mode & 0777, 0600);
}

TEST_F(CliTest, KeygenTwiceGivesDistinctKeysAndRefusesCollision) {
  ASSERT_EQ(Prs("keygen a").code, 0);
  ASSERT_EQ(Prs("keygen b").code, 0);
  EXPECT_NE(Slurp(ks_ / "a.pub"), Slurp(ks_ / "b.pub"));
  const std::string before = Slurp(ks_ / "a.sec");
  EXPECT_EQ(Prs("keygen a").code, 4);
  EXPECT_EQ(Slurp(ks_ / "a.sec"), before);
  EXPECT_EQ(Prs("keygen ../escape").code, 4);
}

TEST_F(CliTest, SeededKeygenIsReproducible) {
  Result r = Prs("--test-entropy-seed 7 keygen a", true);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "505253310100000009424c5331322d33383101800b3ed48a96df593399a4fbbb"
            "8a4fa88a1e4bf6f097f5e95a7d10fbc04b715aa334bcf77f2749931030d45233"
            "a5e74e011ae3abbfc247c4383f71a72c852f8eb40512705193bccaf708a092ed"
            "ac5164f2fbffdf59c17be9837d1fb0f4ed2672\n");
  ASSERT_EQ(Prs("--test-entropy-seed 7 keygen b", true).code, 0);
  EXPECT_EQ(Slurp(ks_ / "a.pub"), Slurp(ks_ / "b.pub"));
  EXPECT_EQ(Slurp(ks_ / "a.sec"), Slurp(ks_ / "b.sec"));

  // Same key as the library produces from the same seed.
  SeededEntropy e(7);
  const KeyPair kp = pbsss::GenerateKeyPair(Suite(), e);
  EXPECT_EQ(wire::Dearmor(ReadFileBytes(ks_ / "a.pub")),
            wire::EncodePublicKey(Suite(), kp.public_key));
}

TEST_F(CliTest, SeedFlagRefusedOutsideTestMode) {
  Result r = Prs("--test-entropy-seed 7 keygen a");
  EXPECT_EQ(r.code, 4);
  EXPECT_FALSE(fs::exists(ks_ / "a.pub"));
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Prs("").code, 4);
  EXPECT_EQ(Prs("frobnicate").code, 4);
  EXPECT_EQ(Prs("verify --sig").code, 4);
  EXPECT_EQ(Prs("bench --sizes 0 --trials 1").code, 4);
}

TEST_F(CliTest, HonestFlowSignsAndVerifies) {
  Delegate();
  EXPECT_EQ(KindOf(P("token.hex")), wire::Kind::kDelegationToken);
  EXPECT_EQ(KindOf(ks_ / "bob.pkey"), wire::Kind::kProxyKey);

  Result s = Prs("sign --key bob --ring" + Ring({"carol", "bob", "dave"}) +
              " --message " + P("msg") + " --out " + P("sig"));
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(s.err, "");
  EXPECT_EQ(KindOf(P("sig")), wire::Kind::kRingSignature);

  Result v = Prs("verify --sig " + P("sig") + " --message " + P("msg") +
              " --stats");
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  EXPECT_NE(v.out.find("accept"), std::string::npos);
  EXPECT_NE(v.out.find("pairings: 2\n"), std::string::npos) << v.out;

  // Explicit index, armored output.
  ASSERT_EQ(Prs("sign --key bob --index 1 --ring" +
                Ring({"carol", "bob", "dave"}) + " --message " + P("msg") +
                " --out " + P("sig.hex"))
                .code,
            0);
  EXPECT_EQ(Prs("verify --sig " + P("sig.hex") + " --message " + P("msg"))
                .code,
            0);
}

TEST_F(CliTest, DelegateRejectsEmptyAndDuplicateProxyLists) {
  ASSERT_EQ(Prs("keygen alice").code, 0);
  ASSERT_EQ(Prs("keygen bob").code, 0);
  Write("terms", "x");
  EXPECT_EQ(Prs("delegate --from alice --body " + P("terms") + " --out " +
                P("t"))
                .code,
            4);
  EXPECT_EQ(Prs("delegate --from alice --body " + P("terms") + " --proxy " +
                Pub("bob") + " " + Pub("bob") + " --out " + P("t"))
                .code,
            4);
  EXPECT_FALSE(fs::exists(P("t")));
  EXPECT_EQ(Prs("delegate --from nobody --body " + P("terms") + " --proxy " +
                Pub("bob") + " --out " + P("t"))
                .code,
            4);
}

TEST_F(CliTest, DelegatePrintsWarrantDigest) {
  Delegate();
  const DelegationToken token =
      wire::DecodeToken(Suite(), wire::Dearmor(ReadFileBytes(P("token.hex"))));
  ASSERT_EQ(Prs("keygen x").code, 0);
  Result r = Prs("delegate --from alice --body " + P("terms") + " --proxy " +
              Pub("x") + " --out " + P("t2"));
  ASSERT_EQ(r.code, 0);
  const DelegationToken t2 =
      wire::DecodeToken(Suite(), ReadFileBytes(P("t2")));
  EXPECT_EQ(r.out, "warrant digest: " +
                       ToHex(Sha256(wire::EncodeWarrantPayload(t2.warrant))) +
                       "\n");
  EXPECT_NE(token.warrant, t2.warrant);
}

TEST_F(CliTest, ProxyAcceptTamperedTokenIsMalformed) {
  Delegate();
  Bytes env = wire::Dearmor(ReadFileBytes(P("token.hex")));
  // Flip a byte in the warrant body: decodes, but the signature no longer
  // matches, so the token is invalid input.
  Bytes body_edit = env;
  body_edit[kHeader + 4] ^= 0x01;
  WriteFile(P("tok1"), body_edit);
  EXPECT_EQ(Prs("proxy-accept --token " + P("tok1") + " --key carol").code, 2);
  // Truncated.
  Bytes cut(env.begin(), env.end() - 3);
  WriteFile(P("tok2"), cut);
  EXPECT_EQ(Prs("proxy-accept --token " + P("tok2") + " --key carol").code, 2);
  // Corrupted signature point.
  Bytes sig_edit = env;
  sig_edit[env.size() - 10] ^= 0x40;
  WriteFile(P("tok3"), sig_edit);
  EXPECT_EQ(Prs("proxy-accept --token " + P("tok3") + " --key carol").code, 2);
  EXPECT_FALSE(fs::exists(ks_ / "carol.pkey"));
}

TEST_F(CliTest, ProxyAcceptUnlistedProxyIsUnauthorized) {
  Delegate();
  Result r = Prs("proxy-accept --token " + P("token.hex") + " --key mallory");
  EXPECT_EQ(r.code, 3) << r.err;
  EXPECT_FALSE(fs::exists(ks_ / "mallory.pkey"));
}

TEST_F(CliTest, SignIndexErrors) {
  Delegate();
  const std::string tail = " --message " + P("msg") + " --out " + P("sig");
  EXPECT_EQ(Prs("sign --key bob --index 3 --ring" +
                Ring({"carol", "bob", "dave"}) + tail)
                .code,
            4);
  EXPECT_EQ(Prs("sign --key bob --index 0 --ring" +
                Ring({"carol", "bob", "dave"}) + tail)
                .code,
            4);
  EXPECT_EQ(Prs("sign --key bob --ring" + Ring({"carol", "dave"}) + tail).code,
            4);
  EXPECT_EQ(Prs("sign --key bob --ring" + Ring({"bob", "bob"}) + tail).code, 4);
  EXPECT_FALSE(fs::exists(P("sig")));
}

TEST_F(CliTest, SignWithUnlistedMemberIsUnauthorized) {
  Delegate();
  EXPECT_EQ(Prs("sign --key bob --ring" + Ring({"bob", "mallory"}) +
                " --message " + P("msg") + " --out " + P("sig"))
                .code,
            3);
}

TEST_F(CliTest, SingletonRingWarnsButSucceeds) {
  Delegate();
  Result s = Prs("sign --key bob --ring" + Ring({"bob"}) + " --message " +
              P("msg") + " --out " + P("sig"));
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.err.find("warning"), std::string::npos);
  EXPECT_NE(s.err.find("anonymous"), std::string::npos);
  EXPECT_EQ(Prs("verify --sig " + P("sig") + " --message " + P("msg")).code, 0);
}

TEST_F(CliTest, VerifyRejectsWithCause) {
  Delegate();
  ASSERT_EQ(Prs("sign --key bob --ring" + Ring({"carol", "bob"}) +
                " --message " + P("msg") + " --out " + P("sig"))
                .code,
            0);

  std::string m = Slurp(P("msg"));
  m[0] ^= 0x01;
  Write("msg2", m);
  Result bad = Prs("verify --sig " + P("sig") + " --message " + P("msg2"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "reject: bad-signature\n");

  // Swap in a member the warrant never listed.
  const PairingSuite& s = Suite();
  ProxyRingSignature sig = wire::DecodeSignature(s, ReadFileBytes(P("sig")));
  sig.ring.members[0] = wire::DecodePublicKey(
      s, wire::Dearmor(ReadFileBytes(Pub("mallory"))));
  WriteFile(P("sig-unauth"), wire::EncodeSignature(s, sig));
  Result unauth = Prs("verify --sig " + P("sig-unauth") + " --message " + P("msg"));
  EXPECT_EQ(unauth.code, 1);
  EXPECT_EQ(unauth.out, "reject: unauthorized-ring\n");

  Bytes raw = ReadFileBytes(P("sig"));
  raw.pop_back();
  WriteFile(P("sig-cut"), raw);
  Result mal = Prs("verify --sig " + P("sig-cut") + " --message " + P("msg"));
  EXPECT_EQ(mal.code, 1);
  EXPECT_EQ(mal.out, "reject: malformed\n");

  WriteFile(P("garbage"), BytesOf("not an envelope"));
  EXPECT_EQ(Prs("verify --sig " + P("garbage") + " --message " + P("msg")).out,
            "reject: malformed\n");

  EXPECT_EQ(Prs("verify --sig " + P("missing") + " --message " + P("msg")).code,
            4);
}

TEST_F(CliTest, SeededFlowIsReproducible) {
  auto flow = [&](const std::string& tag) {
    int step = 0;
    auto seeded = [&] {
      return "--test-entropy-seed " + std::to_string(100 + step++) + " ";
    };
    ks_ = dir_ / ("ks-" + tag);
    for (const char* l : {"o", "p", "q"}) {
      EXPECT_EQ(Prs(seeded() + "keygen " + l, true).code, 0);
    }
    Write("terms", "seeded");
    Write("msg", "seeded message");
    EXPECT_EQ(Prs(seeded() + "delegate --from o --body " + P("terms") +
                      " --proxy " + Pub("p") + " " + Pub("q") + " --out " +
                      P("tok-" + tag),
                  true)
                  .code,
              0);
    EXPECT_EQ(Prs(seeded() + "proxy-accept --token " + P("tok-" + tag) +
                      " --key q",
                  true)
                  .code,
              0);
    EXPECT_EQ(Prs(seeded() + "sign --key q --ring " + Pub("p") + " " + Pub("q") +
                      " --message " + P("msg") + " --out " + P("sig-" + tag),
                  true)
                  .code,
              0);
    return Slurp(ks_ / "o.sec") + Slurp(P("tok-" + tag)) +
           Slurp(ks_ / "q.pkey") + Slurp(P("sig-" + tag));
  };
  const std::string a = flow("a");
  const std::string b = flow("b");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, b);
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

TEST_F(CliTest, BenchCsv) {
  Result r = Prs("bench --sizes 1,2,5,10 --trials 1 --csv");
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::string> lines = Split(r.out, '\n');
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[0], "n,sign_ms,verify_ms,verify_pairings,verify_kmults");
  const std::vector<int> sizes = {1, 2, 5, 10};
  long prev_kmults = -1;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> f = Split(lines[i], ',');
    ASSERT_EQ(f.size(), 5u) << lines[i];
    EXPECT_EQ(std::stoi(f[0]), sizes[i - 1]);
    EXPECT_GT(std::stod(f[1]), 0.0);
    EXPECT_GT(std::stod(f[2]), 0.0);
    EXPECT_EQ(f[3], "2");
    const long kmults = std::stol(f[4]);
    EXPECT_EQ(kmults, sizes[i - 1] + 1);
    EXPECT_GT(kmults, prev_kmults);
    prev_kmults = kmults;
  }
}

TEST_F(CliTest, BenchTableHasSameRows) {
  Result r = Prs("bench --sizes 3 --trials 1");
  ASSERT_EQ(r.code, 0);
  std::vector<std::string> lines = Split(r.out, '\n');
  ASSERT_EQ(lines.size(), 2u);
  std::istringstream row(lines[1]);
  int n, pairings, kmults;
  double sign_ms, verify_ms;
  row >> n >> sign_ms >> verify_ms >> pairings >> kmults;
  EXPECT_EQ(n, 3);
  EXPECT_EQ(pairings, 2);
  EXPECT_EQ(kmults, 4);
}

// Keystore library surface.

TEST(KeystoreTest, LabelRules) {
  EXPECT_TRUE(IsValidLabel("alice"));
  EXPECT_TRUE(IsValidLabel("a.b-c_9"));
  EXPECT_FALSE(IsValidLabel(""));
  EXPECT_FALSE(IsValidLabel(".hidden"));
  EXPECT_FALSE(IsValidLabel("a/b"));
  EXPECT_FALSE(IsValidLabel(std::string(65, 'a')));
  EXPECT_TRUE(IsValidLabel(std::string(64, 'a')));
}

TEST(KeystoreTest, StoreLoadRoundtrip) {
  const fs::path root = fs::temp_directory_path() /
                        ("prs-ks-" + std::to_string(::getpid()));
  fs::remove_all(root);
  Keystore ks(root);
  SeededEntropy e(3);
  const KeyPair kp = pbsss::GenerateKeyPair(Suite(), e);
  EXPECT_FALSE(ks.Contains("k"));
  ks.StoreKeyPair(Suite(), "k", kp);
  EXPECT_TRUE(ks.Contains("k"));
  EXPECT_EQ(ks.LoadSecret(Suite(), "k").s, kp.secret.s);
  EXPECT_EQ(ks.LoadPublic(Suite(), "k"), kp.public_key);
  EXPECT_THROW(ks.StoreKeyPair(Suite(), "k", kp), UsageError);
  EXPECT_THROW(ks.LoadSecret(Suite(), "nope"), UsageError);
  EXPECT_THROW(ks.LoadProxyKey(Suite(), "k"), UsageError);
  fs::remove_all(root);
}

}  // namespace
}  // namespace proxyring
