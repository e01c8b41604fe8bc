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

#ifndef PROXYRING_ALGEBRA_H_
#define PROXYRING_ALGEBRA_H_

// Bilinear group environment over BLS12-381.
//
// The scheme is written for a symmetric pairing; here it runs on an
// asymmetric one with fixed slot roles:
//   HPoint  (G1, 48-byte compressed)  hash outputs, signatures, proxy keys, T
//   KPoint  (G2, 96-byte compressed)  generator P and every public key
//   TElem   (GT, 576 bytes)           pairing outputs and glue values
// Every formula puts keys and P in the K slot.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "blst.h"
#include "proxyring/bytes.h"
#include "proxyring/entropy.h"

namespace proxyring {

// Domain-separation tags. H2-tags feed hash-to-group, H1-tags feed
// hash-to-scalar.
inline constexpr std::string_view kTagWarrant = "PRS:H2:warrant";
inline constexpr std::string_view kTagMessage = "PRS:H2:msg";
inline constexpr std::string_view kTagChallenge = "PRS:H1:chal";
inline constexpr std::string_view kTagGlue = "PRS:H1:glue";

// Caller-owned tally of expensive group operations.
struct OpCounter {
  std::uint64_t pairings = 0;
  std::uint64_t h_mults = 0;
  std::uint64_t k_mults = 0;
  std::uint64_t t_exps = 0;
  std::uint64_t hashes = 0;

  OpCounter& operator+=(const OpCounter& other);
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

// Element of Z_q, q the BLS12-381 subgroup order.
class Scalar {
 public:
  static constexpr std::size_t kEncodedSize = 32;

  Scalar();  // zero

  static Scalar FromUint64(std::uint64_t v);
  // Canonical big-endian decode; throws DecodeError on wrong size or
  // value >= q.
  static Scalar FromBytes(ByteSpan bytes);
  // Big-endian integer of any length reduced mod q.
  static Scalar FromBytesReduced(ByteSpan bytes);

  std::array<std::uint8_t, kEncodedSize> ToBytes() const;
  bool IsZero() const;
  // Throws UsageError on zero.
  Scalar Inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Little-endian canonical form as used by blst point multiplication.
  blst_scalar ToBlst() const;

 private:
  blst_fr fr_;
};

class HPoint {
 public:
  static constexpr std::size_t kEncodedSize = 48;

  HPoint();  // identity
  explicit HPoint(const blst_p1& p) : p_(p) {}

  // Fixed base point G_H used for random sampling.
  static HPoint Generator();
  // Compressed decode; rejects off-curve and out-of-subgroup encodings.
  static HPoint FromBytes(ByteSpan bytes);

  std::array<std::uint8_t, kEncodedSize> ToBytes() const;
  bool IsIdentity() const;

  friend HPoint operator+(const HPoint& a, const HPoint& b);
  friend HPoint operator-(const HPoint& a, const HPoint& b);
  HPoint operator-() const;
  HPoint& operator+=(const HPoint& other);
  friend bool operator==(const HPoint& a, const HPoint& b);

  const blst_p1& raw() const { return p_; }

 private:
  blst_p1 p_;
};

class KPoint {
 public:
  static constexpr std::size_t kEncodedSize = 96;

  KPoint();  // identity
  explicit KPoint(const blst_p2& p) : p_(p) {}

  static KPoint Generator();
  static KPoint FromBytes(ByteSpan bytes);

  std::array<std::uint8_t, kEncodedSize> ToBytes() const;
  bool IsIdentity() const;

  friend KPoint operator+(const KPoint& a, const KPoint& b);
  friend KPoint operator-(const KPoint& a, const KPoint& b);
  KPoint operator-() const;
  KPoint& operator+=(const KPoint& other);
  friend bool operator==(const KPoint& a, const KPoint& b);

  const blst_p2& raw() const { return p_; }

 private:
  blst_p2 p_;
};

// Element of the order-q target group, written multiplicatively.
class TElem {
 public:
  static constexpr std::size_t kEncodedSize = 576;

  TElem();  // one
  explicit TElem(const blst_fp12& f) : f_(f) {}

  // Twelve big-endian base-field coordinates; rejects non-canonical
  // coordinates and anything outside the order-q subgroup.
  static TElem FromBytes(ByteSpan bytes);

  std::array<std::uint8_t, kEncodedSize> ToBytes() const;
  bool IsOne() const;
  TElem Inverse() const;

  friend TElem operator*(const TElem& a, const TElem& b);
  TElem& operator*=(const TElem& other);
  friend bool operator==(const TElem& a, const TElem& b);

  const blst_fp12& raw() const { return f_; }

 private:
  blst_fp12 f_;
};

// Immutable bundle of the public parameters: groups, generator P, both
// hash functions. Counters are optional out-parameters on every costly call.
class PairingSuite {
 public:
  static const PairingSuite& Bls12381();

  std::string_view id() const { return id_; }
  // The published generator P of the key group.
  const KPoint& generator() const { return generator_; }

  TElem Pair(const HPoint& a, const KPoint& b, OpCounter* ctr = nullptr) const;
  // prod_i e(a[i], b[i]) with a single final exponentiation. Counts one
  // pairing per factor. Sizes must match (UsageError).
  TElem PairProduct(std::span<const HPoint> a, std::span<const KPoint> b,
                    OpCounter* ctr = nullptr) const;

  HPoint Mul(const HPoint& p, const Scalar& s, OpCounter* ctr = nullptr) const;
  KPoint Mul(const KPoint& p, const Scalar& s, OpCounter* ctr = nullptr) const;
  TElem Pow(const TElem& t, const Scalar& s, OpCounter* ctr = nullptr) const;

  // H1. `tag` must be kTagChallenge or kTagGlue, else UsageError. Never
  // returns zero: a zero digest is mapped to one.
  Scalar HashToScalar(std::string_view tag, ByteSpan msg,
                      OpCounter* ctr = nullptr) const;
  // H2 (hash-to-curve, SSWU random oracle). `tag` must be kTagWarrant or
  // kTagMessage.
  HPoint HashToGroup(std::string_view tag, ByteSpan msg,
                     OpCounter* ctr = nullptr) const;

  // Uniform element of [1, q-1].
  Scalar RandomScalar(EntropySource& entropy) const;
  // r * G_H for a uniform nonzero r.
  HPoint RandomHPoint(EntropySource& entropy, OpCounter* ctr = nullptr) const;

 private:
  PairingSuite();

  std::string_view id_;
  KPoint generator_;
};

}  // namespace proxyring

#endif  // PROXYRING_ALGEBRA_H_
