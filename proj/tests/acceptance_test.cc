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


// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any failed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "proxyring/errors.h"
#include "test_util.h"

namespace proxyring {
namespace {

using testing::LoadGolden;
using testing::MakeScenario;
using testing::ObjectPool;
using testing::Scenario;
using testing::Suite;

struct Outcome {
  bool ok = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

Bytes RandomBytes(EntropySource& e, std::size_t n) {
  Bytes b(n);
  e.Fill(b);
  return b;
}

std::size_t Below(EntropySource& e, std::size_t n) {
  std::uint8_t b[4];
  e.Fill(b);
  return ((std::size_t{b[0]} << 24) | (std::size_t{b[1]} << 16) |
          (std::size_t{b[2]} << 8) | b[3]) % n;
}

// ---------------------------------------------------------------------------

Outcome Completeness() {
  const PairingSuite& s = Suite();
  SeededEntropy e(101);
  Outcome out;
  int failures = 0, total = 0;
  for (std::size_t n : {1u, 2u, 3u, 5u, 10u}) {
    Scenario sc = MakeScenario(n, e);
    for (std::size_t k = 0; k < n; ++k) {
      for (int trial = 0; trial < 50; ++trial) {
        const Bytes msg = RandomBytes(e, 1 + Below(e, 64));
        const ProxyRingSignature sig =
            ringsig::RingSign(s, sc.materials[k], sc.ring, k, msg, e);
        ++total;
        if (ringsig::RingVerify(s, sig, msg) != Verdict::kAccept) {
          ++failures;
          out.Fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    }
  }
  out.detail = std::to_string(total - failures) + "/" + std::to_string(total) +
               " accepted" + (out.ok ? "" : ", first failure " + out.detail);
  return out;
}

// prod c_i against a right-hand side built from n separate pairings, one per
// ring position, instead of the verifier's aggregated two.
Outcome Telescoping() {
  const PairingSuite& s = Suite();
  SeededEntropy e(102);
  Outcome out;
  int equal = 0;
  for (int inst = 0; inst < 25; ++inst) {
    const std::size_t n = 1 + Below(e, 6);
    Scenario sc = MakeScenario(n, e);
    const std::size_t k = Below(e, n);
    const Bytes msg = RandomBytes(e, 32);
    const ProxyRingSignature sig =
        ringsig::RingSign(s, sc.materials[k], sc.ring, k, msg, e);

    TElem lhs;
    for (const TElem& c : sig.glue) lhs *= c;

    const Scalar h = ringsig::ComputeChallenge(s, msg, sig.ring).h;
    const HPoint hw = delegation::WarrantPoint(s, sig.warrant);
    TElem rhs = s.Pair(sig.t_sum, s.generator());
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar g = ringsig::GlueScalar(s, sig.glue[i]);
      rhs *= s.Pair(s.Mul(hw, h * g),
                    sig.ring.original.pk + sig.ring.members[i].pk);
    }
    if (lhs.ToBytes() == rhs.ToBytes()) {
      ++equal;
    } else {
      out.Fail("instance " + std::to_string(inst));
    }
  }
  out.detail = std::to_string(equal) + "/25 bit-equal" +
               (out.ok ? "" : ", first mismatch " + out.detail);
  return out;
}

Outcome Closure() {
  const PairingSuite& s = Suite();
  SeededEntropy e(103);
  Outcome out;
  int checked = 0;
  for (std::size_t n : {1u, 2u, 3u, 5u, 10u}) {
    Scenario sc = MakeScenario(n, e);
    for (std::size_t k = 0; k < n; ++k) {
      const Bytes msg = RandomBytes(e, 16);
      SigningTrace trace;
      const ProxyRingSignature sig =
          ringsig::RingSign(s, sc.materials[k], sc.ring, k, msg, e, &trace);
      const Challenge h = ringsig::ComputeChallenge(s, msg, sc.ring);

      // Rebuild the chain from c_{k+1} = e(A, P), going all the way round
      // so the last step (at k, using the closing T_k) lands back on it.
      std::vector<TElem> glue(n);
      glue[(k + 1) % n] = s.Pair(trace.a, s.generator());
      bool ok = true;
      for (std::size_t step = 1; step <= n; ++step) {
        const std::size_t j = (k + step) % n;
        const TElem next = ringsig::RecurrenceStep(
            s, sig.warrant, sig.ring, h, j, glue[j], trace.t[j]);
        if (step == n) {
          ok = ok && next == glue[(k + 1) % n];
        } else {
          glue[(j + 1) % n] = next;
        }
      }
      HPoint t_sum;
      for (const HPoint& t : trace.t) t_sum += t;
      ok = ok && glue == sig.glue && t_sum == sig.t_sum;
      ++checked;
      if (!ok) {
        out.Fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
  }
  out.detail = std::to_string(checked) + " (n,k) pairs" +
               (out.ok ? " reproduce glue and T" : ", mismatch " + out.detail);
  return out;
}

Outcome TamperRejection() {
  const PairingSuite& s = Suite();
  SeededEntropy e(104);
  Scenario sc = MakeScenario(4, e);
  const TElem base = s.Pair(HPoint::Generator(), s.generator());

  using Mutation = std::function<void(ProxyRingSignature&, Bytes&)>;
  const std::vector<std::pair<std::string, Mutation>> classes = {
      {"message bit-flip",
       [&](ProxyRingSignature&, Bytes& m) {
         m[Below(e, m.size())] ^= std::uint8_t(1u << Below(e, 8));
       }},
      {"warrant body edit",
       [&](ProxyRingSignature& sig, Bytes& m) {
         (void)m;
         Bytes& b = sig.warrant.body;
         if (Below(e, 2) == 0) {
           b[Below(e, b.size())] ^= std::uint8_t(1 + Below(e, 255));
         } else {
           b.push_back(std::uint8_t(Below(e, 256)));
         }
       }},
      {"swap two ring members",
       [&](ProxyRingSignature& sig, Bytes&) {
         const std::size_t i = Below(e, 4);
         const std::size_t j = (i + 1 + Below(e, 3)) % 4;
         std::swap(sig.ring.members[i], sig.ring.members[j]);
       }},
      {"replace one c_i",
       [&](ProxyRingSignature& sig, Bytes&) {
         sig.glue[Below(e, sig.glue.size())] =
             s.Pow(base, s.RandomScalar(e));
       }},
      {"replace T",
       [&](ProxyRingSignature& sig, Bytes&) { sig.t_sum = s.RandomHPoint(e); }},
      {"substitute unlisted member",
       [&](ProxyRingSignature& sig, Bytes&) {
         sig.ring.members[Below(e, 4)] =
             pbsss::GenerateKeyPair(s, e).public_key;
       }},
  };

  Outcome out;
  std::string detail;
  for (const auto& [name, mutate] : classes) {
    int accepts = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t k = Below(e, 4);
      Bytes msg = RandomBytes(e, 24);
      ProxyRingSignature sig =
          ringsig::RingSign(s, sc.materials[k], sc.ring, k, msg, e);
      mutate(sig, msg);
      if (ringsig::RingVerify(s, sig, msg) == Verdict::kAccept) ++accepts;
    }
    if (accepts != 0) out.Fail(name + ": " + std::to_string(accepts));
    if (!detail.empty()) detail += ", ";
    detail += name + " " + std::to_string(accepts) + "/50";
  }
  out.detail = "false accepts: " + detail;
  return out;
}

Outcome VerifierCost() {
  const PairingSuite& s = Suite();
  Outcome out;
  std::uint64_t max_pairings = 0, min_pairings = ~0ull;
  for (std::size_t n = 1; n <= 50; ++n) {
    const OpCounter c = ringsig::CountVerifyCost(s, n);
    max_pairings = std::max(max_pairings, c.pairings);
    min_pairings = std::min(min_pairings, c.pairings);
    if (c.pairings != 2) {
      out.Fail("n=" + std::to_string(n) + " used " +
               std::to_string(c.pairings));
    }
  }

  SeededEntropy e(105);
  const KeyPair kp = pbsss::GenerateKeyPair(s, e);
  const Bytes msg = BytesOf("cost");
  const ShortSignature sm = pbsss::Sign(s, kp.secret, kTagMessage, msg);
  OpCounter pb;
  if (pbsss::Verify(s, kp.public_key, kTagMessage, msg, sm, &pb) !=
          Verdict::kAccept ||
      pb.pairings != 2) {
    out.Fail("short signature verify used " + std::to_string(pb.pairings));
  }
  Scenario sc = MakeScenario(3, e);
  OpCounter dg;
  if (delegation::VerifyDelegation(s, sc.token, &dg) != Verdict::kAccept ||
      dg.pairings != 2) {
    out.Fail("delegation verify used " + std::to_string(dg.pairings));
  }
  if (out.ok) {
    out.detail = "ring verify " + std::to_string(min_pairings) + ".." +
                 std::to_string(max_pairings) +
                 " pairings for n=1..50; short sig 2; delegation 2";
  }
  return out;
}

// Asymptotic Kolmogorov distribution tail.
double KolmogorovQ(double lambda) {
  if (lambda < 1e-3) return 1.0;
  double sum = 0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 == 1 ? term : -term);
    if (term < 1e-12) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

double KsPValue(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(double(i) / a.size() - double(j) / b.size()));
  }
  const double ne = double(a.size()) * b.size() / (a.size() + b.size());
  const double sq = std::sqrt(ne);
  return KolmogorovQ((sq + 0.12 + 0.11 / sq) * d);
}

// Top 53 bits of the big-endian scalar as a fraction.
double ScalarToUnit(const Scalar& x) {
  const auto b = x.ToBytes();
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | b[i];
  return double(v >> 11) / double(1ull << 53);
}

Outcome SignerAmbiguity() {
  const PairingSuite& s = Suite();
  SeededEntropy e(106);
  Scenario sc = MakeScenario(3, e);
  const Bytes msg = BytesOf("fixed message for the ambiguity test");
  constexpr int kPerSigner = 200;

  std::vector<Bytes> env[2];
  std::vector<double> samples[2][3];
  for (int signer = 0; signer < 2; ++signer) {
    for (int i = 0; i < kPerSigner; ++i) {
      const ProxyRingSignature sig = ringsig::RingSign(
          s, sc.materials[signer], sc.ring, signer, msg, e);
      for (std::size_t pos = 0; pos < 3; ++pos) {
        samples[signer][pos].push_back(
            ScalarToUnit(ringsig::GlueScalar(s, sig.glue[pos])));
      }
      env[signer].push_back(wire::EncodeSignature(s, sig));
    }
  }

  Outcome out;
  std::string pvals;
  for (std::size_t pos = 0; pos < 3; ++pos) {
    const double p = KsPValue(samples[0][pos], samples[1][pos]);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", p);
    pvals += (pos ? "," : "") + std::string(buf);
    if (p < 0.01) out.Fail("KS p=" + std::string(buf) + " at c_" +
                           std::to_string(pos));
  }

  // No byte offset may be constant within each signer's set yet differ
  // between the sets, and every envelope has the same length.
  const std::size_t len = env[0][0].size();
  std::size_t fixed_bytes = 0;
  for (int signer = 0; signer < 2; ++signer) {
    for (const Bytes& b : env[signer]) {
      if (b.size() != len) out.Fail("envelope length depends on signer");
    }
  }
  for (std::size_t off = 0; off < len; ++off) {
    bool constant[2] = {true, true};
    for (int signer = 0; signer < 2; ++signer) {
      for (const Bytes& b : env[signer]) {
        if (b.size() == len && b[off] != env[signer][0][off]) {
          constant[signer] = false;
        }
      }
    }
    if (constant[0] && constant[1]) {
      ++fixed_bytes;
      if (env[0][0][off] != env[1][0][off]) {
        out.Fail("byte " + std::to_string(off) + " encodes the signer");
      }
    }
  }
  if (out.ok) {
    out.detail = "KS p-values " + pvals + " (alpha 0.01); " +
                 std::to_string(fixed_bytes) + "/" + std::to_string(len) +
                 " fixed bytes identical across signers";
  }
  return out;
}

Outcome Forgery() {
  const PairingSuite& s = Suite();
  SeededEntropy e(107);
  Outcome out;

  // (a) key without the delegation term: S' = s_x * H2(w).
  int accepts_a = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Scenario sc = MakeScenario(1 + Below(e, 3), e);
    const std::size_t k = Below(e, sc.ring.size());
    ProxyKeyMaterial forged = sc.materials[k];
    const HPoint hw = delegation::WarrantPoint(s, sc.warrant);
    const Scalar sx =
        trial % 2 == 0 ? sc.proxies[k].secret.s : s.RandomScalar(e);
    forged.s_key = s.Mul(hw, sx);
    const Bytes msg = RandomBytes(e, 20);
    const ProxyRingSignature sig =
        ringsig::RingSign(s, forged, sc.ring, k, msg, e);
    if (ringsig::RingVerify(s, sig, msg) == Verdict::kAccept) ++accepts_a;
  }

  // (b) a key derived under w1 used with a warrant w2 for the same group.
  int accepts_b = 0;
  for (int trial = 0; trial < 50; ++trial) {
    Scenario sc = MakeScenario(1 + Below(e, 3), e, "warrant one");
    const Warrant w2 = delegation::MakeWarrant(
        BytesOf(trial % 2 == 0 ? "warrant one" : "warrant two"),
        sc.original.public_key, sc.warrant.authorized, e);
    const std::size_t k = Below(e, sc.ring.size());
    ProxyKeyMaterial moved = sc.materials[k];
    moved.warrant = w2;
    const Bytes msg = RandomBytes(e, 20);
    const ProxyRingSignature sig =
        ringsig::RingSign(s, moved, sc.ring, k, msg, e);
    if (ringsig::RingVerify(s, sig, msg) == Verdict::kAccept) ++accepts_b;
  }
  if (accepts_a) out.Fail("(a) " + std::to_string(accepts_a) + " accepts");
  if (accepts_b) out.Fail("(b) " + std::to_string(accepts_b) + " accepts");
  if (out.ok) out.detail = "(a) 0/50, (b) 0/50 false accepts";
  return out;
}

// ---------------------------------------------------------------------------

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

// Encodes the object, decodes it back and re-encodes; records the encoding
// so that two different objects never share one.
template <class T>
bool RoundTrip(const T& obj, const std::function<Bytes(const T&)>& enc,
               const std::function<T(ByteSpan)>& dec,
               std::map<Bytes, T>& seen) {
  const Bytes b = enc(obj);
  const T back = dec(b);
  if (!(back == obj) || enc(back) != b) return false;
  auto [it, inserted] = seen.emplace(b, obj);
  return inserted || it->second == obj;
}

bool ProxyKeyConsistent(const PairingSuite& s, const ProxyKeyMaterial& m) {
  if (!m.warrant.Authorizes(m.proxy_pk)) return false;
  const HPoint hw = delegation::WarrantPoint(s, m.warrant);
  return s.Pair(m.s_key, s.generator()) ==
         s.Pair(hw, m.warrant.original.pk + m.proxy_pk.pk);
}

Outcome WireStability() {
  const PairingSuite& s = Suite();
  Outcome out;

  // Golden fixtures.
  for (const auto& [name, digest] : kGoldenDigests) {
    Bytes b;
    try {
      b = LoadGolden(name);
    } catch (const Error& err) {
      out.Fail(name + ": " + err.what());
      continue;
    }
    if (ToHex(Sha256(b)) != digest) out.Fail(name + " changed");
  }
  if (!out.ok) return out;
  const Bytes g_pk = LoadGolden("public_key.hex");
  const Bytes g_sk = LoadGolden("secret_key.hex");
  const Bytes g_w = LoadGolden("warrant.hex");
  const Bytes g_tok = LoadGolden("token.hex");
  const Bytes g_sig = LoadGolden("signature.hex");
  const Bytes g_pkey = LoadGolden("proxy_key.hex");
  try {
    if (wire::EncodePublicKey(s, wire::DecodePublicKey(s, g_pk)) != g_pk ||
        wire::EncodeSecretKey(s, wire::DecodeSecretKey(s, g_sk)) != g_sk ||
        wire::EncodeWarrant(s, wire::DecodeWarrant(s, g_w)) != g_w ||
        wire::EncodeToken(s, wire::DecodeToken(s, g_tok)) != g_tok ||
        wire::EncodeSignature(s, wire::DecodeSignature(s, g_sig)) != g_sig ||
        wire::EncodeProxyKey(s, wire::DecodeProxyKey(s, g_pkey)) != g_pkey) {
      out.Fail("golden fixture does not re-encode byte-exactly");
    }
  } catch (const Error& err) {
    out.Fail(std::string("golden fixture decode: ") + err.what());
  }
  if (!out.ok) return out;

  // Random roundtrips.
  ObjectPool pool(108);
  std::map<Bytes, PublicKey> seen_pk;
  std::map<Bytes, Warrant> seen_w;
  std::map<Bytes, DelegationToken> seen_tok;
  std::map<Bytes, ProxyRingSignature> seen_sig;
  std::map<Bytes, ProxyKeyMaterial> seen_pkey;
  std::map<Bytes, Scalar> seen_sk;
  int roundtrip_failures = 0;
  constexpr int kRoundTrips = 10000;
  for (int i = 0; i < kRoundTrips; ++i) {
    bool ok = true;
    switch (i % 6) {
      case 0:
        ok = RoundTrip<PublicKey>(
            pool.Key().public_key,
            [&](const PublicKey& x) { return wire::EncodePublicKey(s, x); },
            [&](ByteSpan b) { return wire::DecodePublicKey(s, b); }, seen_pk);
        break;
      case 1: {
        const Scalar x = s.RandomScalar(pool.entropy());
        ok = RoundTrip<Scalar>(
            x,
            [&](const Scalar& v) {
              return wire::EncodeSecretKey(s, SecretKey{v});
            },
            [&](ByteSpan b) { return wire::DecodeSecretKey(s, b).s; },
            seen_sk);
        break;
      }
      case 2:
        ok = RoundTrip<Warrant>(
            pool.RandomWarrant(),
            [&](const Warrant& x) { return wire::EncodeWarrant(s, x); },
            [&](ByteSpan b) { return wire::DecodeWarrant(s, b); }, seen_w);
        break;
      case 3:
        ok = RoundTrip<DelegationToken>(
            pool.RandomToken(),
            [&](const DelegationToken& x) { return wire::EncodeToken(s, x); },
            [&](ByteSpan b) { return wire::DecodeToken(s, b); }, seen_tok);
        break;
      case 4:
        ok = RoundTrip<ProxyRingSignature>(
            pool.RandomSignature(),
            [&](const ProxyRingSignature& x) {
              return wire::EncodeSignature(s, x);
            },
            [&](ByteSpan b) { return wire::DecodeSignature(s, b); },
            seen_sig);
        break;
      default:
        ok = RoundTrip<ProxyKeyMaterial>(
            pool.RandomProxyKey(),
            [&](const ProxyKeyMaterial& x) {
              return wire::EncodeProxyKey(s, x);
            },
            [&](ByteSpan b) { return wire::DecodeProxyKey(s, b); },
            seen_pkey);
        break;
    }
    if (!ok) ++roundtrip_failures;
  }
  if (roundtrip_failures) {
    out.Fail(std::to_string(roundtrip_failures) + " roundtrip failures");
  }

  // Single-byte mutations of the golden objects. A mutation that decodes
  // must give a different canonical object that its own check rejects.
  const PublicKey pk = wire::DecodePublicKey(s, g_pk);
  const SecretKey sk = wire::DecodeSecretKey(s, g_sk);
  const Warrant w = wire::DecodeWarrant(s, g_w);
  const DelegationToken tok = wire::DecodeToken(s, g_tok);
  const ProxyRingSignature sig = wire::DecodeSignature(s, g_sig);
  const ProxyKeyMaterial pkey = wire::DecodeProxyKey(s, g_pkey);
  const Bytes golden_msg = BytesOf("golden fixture message");

  SeededEntropy me(109);
  testing::MutationStats total;
  auto add = [&](const testing::MutationStats& m) {
    total.rejected += m.rejected;
    total.changed += m.changed;
    total.silent_equal += m.silent_equal;
    total.non_canonical += m.non_canonical;
    total.still_valid += m.still_valid;
  };
  constexpr int kEach = 1000 / 5;
  add(testing::MutateEnvelope<PublicKey>(
      g_pk, pk, [&](ByteSpan b) { return wire::DecodePublicKey(s, b); },
      [&](const PublicKey& x) { return wire::EncodePublicKey(s, x); }, me,
      kEach / 2,
      // Any other decodable key counts: nothing ties a bare key to its
      // holder, so it must not happen at all.
      [&](const PublicKey&) { return true; }));
  add(testing::MutateEnvelope<Scalar>(
      g_sk, sk.s, [&](ByteSpan b) { return wire::DecodeSecretKey(s, b).s; },
      [&](const Scalar& x) { return wire::EncodeSecretKey(s, SecretKey{x}); },
      me, kEach / 2,
      [&](const Scalar& x) { return s.Mul(s.generator(), x) == pk.pk; }));
  add(testing::MutateEnvelope<Warrant>(
      g_w, w, [&](ByteSpan b) { return wire::DecodeWarrant(s, b); },
      [&](const Warrant& x) { return wire::EncodeWarrant(s, x); }, me, kEach,
      [&](const Warrant& x) {
        return delegation::VerifyDelegation(s, {x, tok.w_sig}) ==
               Verdict::kAccept;
      }));
  add(testing::MutateEnvelope<DelegationToken>(
      g_tok, tok, [&](ByteSpan b) { return wire::DecodeToken(s, b); },
      [&](const DelegationToken& x) { return wire::EncodeToken(s, x); }, me,
      kEach, [&](const DelegationToken& x) {
        return delegation::VerifyDelegation(s, x) == Verdict::kAccept;
      }));
  add(testing::MutateEnvelope<ProxyRingSignature>(
      g_sig, sig, [&](ByteSpan b) { return wire::DecodeSignature(s, b); },
      [&](const ProxyRingSignature& x) { return wire::EncodeSignature(s, x); },
      me, kEach, [&](const ProxyRingSignature& x) {
        return ringsig::RingVerify(s, x, golden_msg) == Verdict::kAccept;
      }));
  add(testing::MutateEnvelope<ProxyKeyMaterial>(
      g_pkey, pkey, [&](ByteSpan b) { return wire::DecodeProxyKey(s, b); },
      [&](const ProxyKeyMaterial& x) { return wire::EncodeProxyKey(s, x); },
      me, kEach,
      [&](const ProxyKeyMaterial& x) { return ProxyKeyConsistent(s, x); }));

  const int mutations = total.rejected + total.changed + total.silent_equal +
                        total.non_canonical;
  if (total.silent_equal || total.non_canonical || total.still_valid) {
    out.Fail("mutations: " + std::to_string(total.silent_equal) +
             " silent, " + std::to_string(total.non_canonical) +
             " non-canonical, " + std::to_string(total.still_valid) +
             " still valid");
  }
  if (out.ok) {
    out.detail = "6 golden kinds byte-exact; " + std::to_string(kRoundTrips) +
                 " roundtrips; " + std::to_string(mutations) +
                 " mutations (" + std::to_string(total.rejected) +
                 " rejected, " + std::to_string(total.changed) +
                 " decoded to a different object that fails its check)";
  }
  return out;
}

}  // namespace
}  // namespace proxyring

int main() {
  using namespace proxyring;
  struct Criterion {
    const char* id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"AC1", "completeness", Completeness},
      {"AC2", "telescoping identity", Telescoping},
      {"AC3", "ring closure", Closure},
      {"AC4", "tamper rejection", TamperRejection},
      {"AC5", "verifier cost", VerifierCost},
      {"AC6", "signer ambiguity", SignerAmbiguity},
      {"AC7", "forgery smoke", Forgery},
      {"AC8", "wire stability", WireStability},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    std::printf("%s %s %s: %s (%.1fs)\n", o.ok ? "PASS" : "FAIL", c.id,
                c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
