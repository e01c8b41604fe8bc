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

#include <algorithm>
#include <cstring>
#include <string>

#include "proxyring/errors.h"

namespace proxyring {

namespace {

constexpr std::size_t kFpSize = 48;
// Bits needed for any exponent below q.
constexpr std::size_t kScalarBits = 255;
// 48 bytes = 384 bits, enough headroom that reduction mod q is close to
// uniform.
constexpr std::size_t kWideBytes = 48;

void RequireTag(std::string_view tag, std::string_view a, std::string_view b,
                const char* what) {
  if (tag != a && tag != b) {
    throw UsageError(std::string("unknown ") + what + " tag: " +
                     std::string(tag));
  }
}

}  // namespace

OpCounter& OpCounter::operator+=(const OpCounter& other) {
  pairings += other.pairings;
  h_mults += other.h_mults;
  k_mults += other.k_mults;
  t_exps += other.t_exps;
  hashes += other.hashes;
  return *this;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() { std::memset(&fr_, 0, sizeof(fr_)); }

Scalar Scalar::FromUint64(std::uint64_t v) {
  const std::uint64_t limbs[4] = {v, 0, 0, 0};
  Scalar out;
  blst_fr_from_uint64(&out.fr_, limbs);
  return out;
}

Scalar Scalar::FromBytes(ByteSpan bytes) {
  if (bytes.size() != kEncodedSize) {
    throw DecodeError("scalar encoding must be 32 bytes");
  }
  blst_scalar s;
  blst_scalar_from_bendian(&s, bytes.data());
  if (!blst_scalar_fr_check(&s)) {
    throw DecodeError("scalar encoding is not reduced mod q");
  }
  Scalar out;
  blst_fr_from_scalar(&out.fr_, &s);
  return out;
}

Scalar Scalar::FromBytesReduced(ByteSpan bytes) {
  blst_scalar s;
  blst_scalar_from_be_bytes(&s, bytes.data(), bytes.size());
  Scalar out;
  blst_fr_from_scalar(&out.fr_, &s);
  return out;
}

std::array<std::uint8_t, Scalar::kEncodedSize> Scalar::ToBytes() const {
  blst_scalar s = ToBlst();
  std::array<std::uint8_t, kEncodedSize> out;
  blst_bendian_from_scalar(out.data(), &s);
  return out;
}

blst_scalar Scalar::ToBlst() const {
  blst_scalar s;
  blst_scalar_from_fr(&s, &fr_);
  return s;
}

bool Scalar::IsZero() const { return *this == Scalar(); }

Scalar Scalar::Inverse() const {
  if (IsZero()) throw UsageError("inverse of zero scalar");
  Scalar out;
  blst_fr_inverse(&out.fr_, &fr_);
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar out;
  blst_fr_add(&out.fr_, &a.fr_, &b.fr_);
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  Scalar out;
  blst_fr_sub(&out.fr_, &a.fr_, &b.fr_);
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar out;
  blst_fr_mul(&out.fr_, &a.fr_, &b.fr_);
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out;
  blst_fr_cneg(&out.fr_, &fr_, true);
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.ToBytes() == b.ToBytes();
}

// ---------------------------------------------------------------- HPoint

HPoint::HPoint() { std::memset(&p_, 0, sizeof(p_)); }

HPoint HPoint::Generator() { return HPoint(*blst_p1_generator()); }

HPoint HPoint::FromBytes(ByteSpan bytes) {
  if (bytes.size() != kEncodedSize) {
    throw DecodeError("G1 point encoding must be 48 bytes");
  }
  blst_p1_affine aff;
  if (blst_p1_uncompress(&aff, bytes.data()) != BLST_SUCCESS) {
    throw DecodeError("invalid G1 point encoding");
  }
  if (!blst_p1_affine_in_g1(&aff)) {
    throw DecodeError("G1 point outside prime-order subgroup");
  }
  blst_p1 p;
  blst_p1_from_affine(&p, &aff);
  return HPoint(p);
}

std::array<std::uint8_t, HPoint::kEncodedSize> HPoint::ToBytes() const {
  std::array<std::uint8_t, kEncodedSize> out;
  blst_p1_compress(out.data(), &p_);
  return out;
}

bool HPoint::IsIdentity() const { return blst_p1_is_inf(&p_); }

HPoint operator+(const HPoint& a, const HPoint& b) {
  blst_p1 out;
  blst_p1_add_or_double(&out, &a.p_, &b.p_);
  return HPoint(out);
}

HPoint HPoint::operator-() const {
  blst_p1 out = p_;
  blst_p1_cneg(&out, true);
  return HPoint(out);
}

HPoint operator-(const HPoint& a, const HPoint& b) { return a + (-b); }

HPoint& HPoint::operator+=(const HPoint& other) {
  blst_p1_add_or_double(&p_, &p_, &other.p_);
  return *this;
}

bool operator==(const HPoint& a, const HPoint& b) {
  return blst_p1_is_equal(&a.p_, &b.p_);
}

// ---------------------------------------------------------------- KPoint

KPoint::KPoint() { std::memset(&p_, 0, sizeof(p_)); }

KPoint KPoint::Generator() { return KPoint(*blst_p2_generator()); }

KPoint KPoint::FromBytes(ByteSpan bytes) {
  if (bytes.size() != kEncodedSize) {
    throw DecodeError("G2 point encoding must be 96 bytes");
  }
  blst_p2_affine aff;
  if (blst_p2_uncompress(&aff, bytes.data()) != BLST_SUCCESS) {
    throw DecodeError("invalid G2 point encoding");
  }
  if (!blst_p2_affine_in_g2(&aff)) {
    throw DecodeError("G2 point outside prime-order subgroup");
  }
  blst_p2 p;
  blst_p2_from_affine(&p, &aff);
  return KPoint(p);
}

std::array<std::uint8_t, KPoint::kEncodedSize> KPoint::ToBytes() const {
  std::array<std::uint8_t, kEncodedSize> out;
  blst_p2_compress(out.data(), &p_);
  return out;
}

bool KPoint::IsIdentity() const { return blst_p2_is_inf(&p_); }

KPoint operator+(const KPoint& a, const KPoint& b) {
  blst_p2 out;
  blst_p2_add_or_double(&out, &a.p_, &b.p_);
  return KPoint(out);
}

KPoint KPoint::operator-() const {
  blst_p2 out = p_;
  blst_p2_cneg(&out, true);
  return KPoint(out);
}

KPoint operator-(const KPoint& a, const KPoint& b) { return a + (-b); }

KPoint& KPoint::operator+=(const KPoint& other) {
  blst_p2_add_or_double(&p_, &p_, &other.p_);
  return *this;
}

bool operator==(const KPoint& a, const KPoint& b) {
  return blst_p2_is_equal(&a.p_, &b.p_);
}

// ----------------------------------------------------------------- TElem

TElem::TElem() : f_(*blst_fp12_one()) {}

TElem TElem::FromBytes(ByteSpan bytes) {
  if (bytes.size() != kEncodedSize) {
    throw DecodeError("target group encoding must be 576 bytes");
  }
  // Same coordinate order as blst_bendian_from_fp12.
  blst_fp12 f;
  const std::uint8_t* in = bytes.data();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        blst_fp_from_bendian(&f.fp6[j].fp2[i].fp[k], in);
        in += kFpSize;
      }
    }
  }
  TElem out(f);
  auto round_trip = out.ToBytes();
  if (!std::equal(round_trip.begin(), round_trip.end(), bytes.begin())) {
    throw DecodeError("non-canonical target group coordinate");
  }
  if (!blst_fp12_in_group(&f)) {
    throw DecodeError("target group element outside order-q subgroup");
  }
  return out;
}

std::array<std::uint8_t, TElem::kEncodedSize> TElem::ToBytes() const {
  std::array<std::uint8_t, kEncodedSize> out;
  blst_bendian_from_fp12(out.data(), &f_);
  return out;
}

bool TElem::IsOne() const { return blst_fp12_is_one(&f_); }

TElem TElem::Inverse() const {
  blst_fp12 out;
  blst_fp12_inverse(&out, &f_);
  return TElem(out);
}

TElem operator*(const TElem& a, const TElem& b) {
  blst_fp12 out;
  blst_fp12_mul(&out, &a.f_, &b.f_);
  return TElem(out);
}

TElem& TElem::operator*=(const TElem& other) {
  blst_fp12_mul(&f_, &f_, &other.f_);
  return *this;
}

bool operator==(const TElem& a, const TElem& b) {
  return blst_fp12_is_equal(&a.f_, &b.f_);
}

// ---------------------------------------------------------- PairingSuite

PairingSuite::PairingSuite()
    : id_("BLS12-381"), generator_(KPoint::Generator()) {}

const PairingSuite& PairingSuite::Bls12381() {
  static const PairingSuite suite;
  return suite;
}

TElem PairingSuite::Pair(const HPoint& a, const KPoint& b,
                         OpCounter* ctr) const {
  if (ctr) ++ctr->pairings;
  if (a.IsIdentity() || b.IsIdentity()) return TElem();
  blst_p1_affine a_aff;
  blst_p2_affine b_aff;
  blst_p1_to_affine(&a_aff, &a.raw());
  blst_p2_to_affine(&b_aff, &b.raw());
  blst_fp12 f;
  blst_miller_loop(&f, &b_aff, &a_aff);
  blst_final_exp(&f, &f);
  return TElem(f);
}

TElem PairingSuite::PairProduct(std::span<const HPoint> a,
                                std::span<const KPoint> b,
                                OpCounter* ctr) const {
  if (a.size() != b.size()) throw UsageError("pairing product size mismatch");
  if (ctr) ctr->pairings += a.size();
  blst_fp12 acc = *blst_fp12_one();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].IsIdentity() || b[i].IsIdentity()) continue;
    blst_p1_affine a_aff;
    blst_p2_affine b_aff;
    blst_p1_to_affine(&a_aff, &a[i].raw());
    blst_p2_to_affine(&b_aff, &b[i].raw());
    blst_fp12 f;
    blst_miller_loop(&f, &b_aff, &a_aff);
    blst_fp12_mul(&acc, &acc, &f);
  }
  blst_final_exp(&acc, &acc);
  return TElem(acc);
}

HPoint PairingSuite::Mul(const HPoint& p, const Scalar& s,
                         OpCounter* ctr) const {
  if (ctr) ++ctr->h_mults;
  blst_scalar k = s.ToBlst();
  blst_p1 out;
  blst_p1_mult(&out, &p.raw(), k.b, kScalarBits);
  return HPoint(out);
}

KPoint PairingSuite::Mul(const KPoint& p, const Scalar& s,
                         OpCounter* ctr) const {
  if (ctr) ++ctr->k_mults;
  blst_scalar k = s.ToBlst();
  blst_p2 out;
  blst_p2_mult(&out, &p.raw(), k.b, kScalarBits);
  return KPoint(out);
}

TElem PairingSuite::Pow(const TElem& t, const Scalar& s,
                        OpCounter* ctr) const {
  if (ctr) ++ctr->t_exps;
  // Fixed 4-bit window. Every TElem lies in the cyclotomic subgroup, so the
  // cheaper cyclotomic squaring applies.
  std::array<blst_fp12, 16> table;
  table[0] = *blst_fp12_one();
  table[1] = t.raw();
  for (std::size_t i = 2; i < table.size(); ++i) {
    blst_fp12_mul(&table[i], &table[i - 1], &t.raw());
  }
  const blst_scalar k = s.ToBlst();
  blst_fp12 acc = *blst_fp12_one();
  for (int byte = static_cast<int>(sizeof(k.b)) - 1; byte >= 0; --byte) {
    for (int shift = 4; shift >= 0; shift -= 4) {
      for (int i = 0; i < 4; ++i) blst_fp12_cyclotomic_sqr(&acc, &acc);
      const unsigned nibble = (k.b[byte] >> shift) & 0x0f;
      if (nibble != 0) blst_fp12_mul(&acc, &acc, &table[nibble]);
    }
  }
  return TElem(acc);
}

Scalar PairingSuite::HashToScalar(std::string_view tag, ByteSpan msg,
                                  OpCounter* ctr) const {
  RequireTag(tag, kTagChallenge, kTagGlue, "hash-to-scalar");
  if (ctr) ++ctr->hashes;
  std::array<std::uint8_t, kWideBytes> uniform;
  blst_expand_message_xmd(uniform.data(), uniform.size(), msg.data(),
                          msg.size(),
                          reinterpret_cast<const byte*>(tag.data()),
                          tag.size());
  Scalar out = Scalar::FromBytesReduced(uniform);
  if (out.IsZero()) return Scalar::FromUint64(1);
  return out;
}

HPoint PairingSuite::HashToGroup(std::string_view tag, ByteSpan msg,
                                 OpCounter* ctr) const {
  RequireTag(tag, kTagWarrant, kTagMessage, "hash-to-group");
  if (ctr) ++ctr->hashes;
  blst_p1 out;
  blst_hash_to_g1(&out, msg.data(), msg.size(),
                  reinterpret_cast<const byte*>(tag.data()), tag.size(),
                  nullptr, 0);
  if (blst_p1_is_inf(&out)) {
    // Probability 1/q; treated as a broken hash rather than handled.
    throw Error("hash-to-group produced the identity");
  }
  return HPoint(out);
}

Scalar PairingSuite::RandomScalar(EntropySource& entropy) const {
  std::array<std::uint8_t, 64> buf;
  for (;;) {
    entropy.Fill(buf);
    Scalar s = Scalar::FromBytesReduced(buf);
    if (!s.IsZero()) return s;
  }
}

HPoint PairingSuite::RandomHPoint(EntropySource& entropy,
                                  OpCounter* ctr) const {
  return Mul(HPoint::Generator(), RandomScalar(entropy), ctr);
}

}  // namespace proxyring
