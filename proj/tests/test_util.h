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

#ifndef PROXYRING_TESTS_TEST_UTIL_H_
#define PROXYRING_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "proxyring/algebra.h"
#include "proxyring/delegation.h"
#include "proxyring/entropy.h"
#include "proxyring/errors.h"
#include "proxyring/keystore.h"
#include "proxyring/pbsss.h"
#include "proxyring/ringsig.h"
#include "proxyring/wire.h"

namespace proxyring::testing {

inline const PairingSuite& Suite() { return PairingSuite::Bls12381(); }

// An original signer, `n` proxies all listed in one warrant, and every
// proxy's derived key. The ring is all proxies in warrant order.
struct Scenario {
  KeyPair original;
  std::vector<KeyPair> proxies;
  Warrant warrant;
  DelegationToken token;
  std::vector<ProxyKeyMaterial> materials;
  RingSpec ring;
};

inline Scenario MakeScenario(std::size_t n, EntropySource& entropy,
                             std::string_view body = "sign purchase orders") {
  const PairingSuite& suite = Suite();
  Scenario s;
  s.original = pbsss::GenerateKeyPair(suite, entropy);
  std::vector<PublicKey> pks;
  for (std::size_t i = 0; i < n; ++i) {
    s.proxies.push_back(pbsss::GenerateKeyPair(suite, entropy));
    pks.push_back(s.proxies.back().public_key);
  }
  s.warrant = delegation::MakeWarrant(BytesOf(body), s.original.public_key,
                                      pks, entropy);
  s.token = delegation::MakeDelegation(suite, s.original.secret, s.warrant);
  for (const KeyPair& kp : s.proxies) {
    s.materials.push_back(
        delegation::DeriveProxyKey(suite, s.token, kp.secret));
  }
  s.ring = RingSpec{s.original.public_key, pks};
  return s;
}

inline Scalar S(std::uint64_t v) { return Scalar::FromUint64(v); }

// Cheap random wire objects: group elements are drawn from small
// precomputed pools, everything else (bodies, nonces, sizes, order) is
// fresh randomness.
class ObjectPool {
 public:
  explicit ObjectPool(std::uint64_t seed, std::size_t pool_size = 48)
      : entropy_(seed) {
    const PairingSuite& s = Suite();
    const TElem base = s.Pair(HPoint::Generator(), KPoint::Generator());
    for (std::size_t i = 0; i < pool_size; ++i) {
      keys_.push_back(pbsss::GenerateKeyPair(s, entropy_));
      h_.push_back(s.RandomHPoint(entropy_));
      t_.push_back(s.Pow(base, s.RandomScalar(entropy_)));
    }
  }

  std::size_t Below(std::size_t n) {
    std::uint8_t b[4];
    entropy_.Fill(b);
    return ((std::size_t{b[0]} << 24) | (std::size_t{b[1]} << 16) |
            (std::size_t{b[2]} << 8) | b[3]) % n;
  }

  const KeyPair& Key() { return keys_[Below(keys_.size())]; }
  const HPoint& H() { return h_[Below(h_.size())]; }
  const TElem& T() { return t_[Below(t_.size())]; }

  // 1..max distinct keys.
  std::vector<PublicKey> KeyList(std::size_t max) {
    std::vector<PublicKey> out;
    const std::size_t n = 1 + Below(max);
    while (out.size() < n) {
      const PublicKey& pk = Key().public_key;
      if (std::find(out.begin(), out.end(), pk) == out.end()) out.push_back(pk);
    }
    return out;
  }

  Warrant RandomWarrant() {
    Warrant w;
    w.body.resize(Below(48));
    entropy_.Fill(w.body);
    w.original = Key().public_key;
    w.authorized = KeyList(4);
    entropy_.Fill(w.nonce);
    return w;
  }

  DelegationToken RandomToken() { return {RandomWarrant(), H()}; }

  ProxyRingSignature RandomSignature() {
    ProxyRingSignature sig;
    sig.warrant = RandomWarrant();
    sig.ring = RingSpec{Key().public_key, KeyList(5)};
    for (std::size_t i = 0; i < sig.ring.size(); ++i) sig.glue.push_back(T());
    sig.t_sum = H();
    return sig;
  }

  ProxyKeyMaterial RandomProxyKey() {
    return {RandomWarrant(), Key().public_key, H()};
  }

  EntropySource& entropy() { return entropy_; }

 private:
  SeededEntropy entropy_;
  std::vector<KeyPair> keys_;
  std::vector<HPoint> h_;
  std::vector<TElem> t_;
};

#ifdef PROXYRING_GOLDEN_DIR
// Raw envelope bytes of tests/golden/<name>.
inline Bytes LoadGolden(std::string_view name) {
  return wire::Dearmor(ReadFileBytes(std::filesystem::path(
      PROXYRING_GOLDEN_DIR) / std::string(name)));
}
#endif

// Outcome of flipping single bytes of a valid envelope.
struct MutationStats {
  int rejected = 0;         // DecodeError
  int changed = 0;          // decoded to a different, canonical object
  int silent_equal = 0;     // decoded to the original object: a bug
  int non_canonical = 0;    // decoded, but re-encodes to other bytes: a bug
  int still_valid = 0;      // `valid` accepted a changed object
};

// Flips one random byte (xor with a random nonzero mask) `trials` times and
// classifies the decode. `valid` is an optional semantic check (e.g.
// signature verification) applied to objects that do decode.
template <class T>
MutationStats MutateEnvelope(
    ByteSpan original, const T& object,
    const std::function<T(ByteSpan)>& decode,
    const std::function<Bytes(const T&)>& encode, EntropySource& entropy,
    int trials, const std::function<bool(const T&)>& valid = nullptr) {
  MutationStats stats;
  for (int i = 0; i < trials; ++i) {
    std::uint8_t r[5];
    entropy.Fill(r);
    const std::size_t pos =
        ((std::size_t{r[0]} << 16) | (std::size_t{r[1]} << 8) | r[2]) %
        original.size();
    const std::uint8_t mask = r[3] == 0 ? 0x01 : r[3];
    Bytes mutated(original.begin(), original.end());
    mutated[pos] ^= mask;
    try {
      T got = decode(mutated);
      if (got == object) {
        ++stats.silent_equal;
      } else if (encode(got) != mutated) {
        ++stats.non_canonical;
      } else {
        ++stats.changed;
        if (valid && valid(got)) ++stats.still_valid;
      }
    } catch (const DecodeError&) {
      ++stats.rejected;
    }
  }
  return stats;
}

}  // namespace proxyring::testing

#endif  // PROXYRING_TESTS_TEST_UTIL_H_
