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

#include <algorithm>
#include <cctype>
#include <string>

#include "proxyring/errors.h"

namespace proxyring::wire {

namespace {

class Reader {
 public:
  explicit Reader(ByteSpan data) : data_(data) {}

  ByteSpan Take(std::size_t n) {
    if (n > data_.size() - pos_) throw DecodeError("truncated input");
    ByteSpan out = data_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::uint8_t U8() { return Take(1)[0]; }

  std::uint32_t U32() {
    ByteSpan b = Take(4);
    return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
           (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
  }

  ByteSpan Rest() { return Take(data_.size() - pos_); }

  void Finish() const {
    if (pos_ != data_.size()) throw DecodeError("trailing bytes");
  }

 private:
  ByteSpan data_;
  std::size_t pos_ = 0;
};

std::uint32_t CheckedCount(std::size_t n, const char* what) {
  if (n > 0xffffffffu) throw UsageError(std::string(what) + " too long");
  return static_cast<std::uint32_t>(n);
}

void PutPublicKey(Bytes& out, const PublicKey& pk) {
  Append(out, pk.pk.ToBytes());
}

PublicKey ReadPublicKey(Reader& r) {
  PublicKey pk{KPoint::FromBytes(r.Take(KPoint::kEncodedSize))};
  if (pk.pk.IsIdentity()) throw DecodeError("public key is the identity");
  return pk;
}

// Count-prefixed key list; rejects duplicates. Each key is at least
// kEncodedSize bytes, so the count is bounded by the remaining input before
// anything is allocated.
std::vector<PublicKey> ReadKeyList(Reader& r) {
  std::uint32_t n = r.U32();
  std::vector<PublicKey> keys;
  for (std::uint32_t i = 0; i < n; ++i) {
    PublicKey pk = ReadPublicKey(r);
    if (std::find(keys.begin(), keys.end(), pk) != keys.end()) {
      throw DecodeError("duplicate key in list");
    }
    keys.push_back(pk);
  }
  return keys;
}

Warrant ReadWarrant(Reader& r) {
  Warrant w;
  ByteSpan body = r.Take(r.U32());
  w.body.assign(body.begin(), body.end());
  w.original = ReadPublicKey(r);
  ByteSpan nonce = r.Take(Warrant::kNonceSize);
  std::copy(nonce.begin(), nonce.end(), w.nonce.begin());
  w.authorized = ReadKeyList(r);
  if (w.authorized.empty()) throw DecodeError("warrant authorizes no proxy");
  return w;
}

RingSpec ReadRing(Reader& r) {
  RingSpec ring;
  ring.original = ReadPublicKey(r);
  ring.members = ReadKeyList(r);
  if (ring.members.empty()) throw DecodeError("empty ring");
  return ring;
}

std::uint8_t ReadPlaintextFlag(Reader& r) {
  std::uint8_t flag = r.U8();
  if (flag != kPlaintextFlag) {
    throw DecodeError("unsupported secret encryption flag");
  }
  return flag;
}

Bytes Wrap(const PairingSuite& suite, Kind kind, Bytes payload) {
  return EncodeEnvelope(
      Envelope{std::string(suite.id()), kind, std::move(payload)});
}

bool IsKnownKind(std::uint8_t k) { return k >= 0x01 && k <= 0x06; }

}  // namespace

std::string_view KindName(Kind kind) {
  switch (kind) {
    case Kind::kPublicKey:
      return "public-key";
    case Kind::kSecretKey:
      return "secret-key";
    case Kind::kRingSignature:
      return "ring-signature";
    case Kind::kDelegationToken:
      return "delegation-token";
    case Kind::kWarrant:
      return "warrant";
    case Kind::kProxyKey:
      return "proxy-key";
  }
  return "unknown";
}

Bytes EncodeEnvelope(const Envelope& env) {
  Bytes out(kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  AppendU32(out, CheckedCount(env.suite_id.size(), "suite id"));
  Append(out, AsBytes(env.suite_id));
  out.push_back(static_cast<std::uint8_t>(env.kind));
  Append(out, env.payload);
  return out;
}

Envelope DecodeEnvelope(ByteSpan bytes) {
  Reader r(bytes);
  ByteSpan magic = r.Take(kMagic.size());
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) {
    throw DecodeError("bad magic");
  }
  if (r.U8() != kVersion) throw DecodeError("unsupported version");
  ByteSpan id = r.Take(r.U32());
  std::uint8_t kind = r.U8();
  if (!IsKnownKind(kind)) throw DecodeError("unknown envelope kind");
  ByteSpan payload = r.Rest();
  return Envelope{std::string(id.begin(), id.end()), static_cast<Kind>(kind),
                  Bytes(payload.begin(), payload.end())};
}

ByteSpan ExpectEnvelope(const PairingSuite& suite, ByteSpan bytes,
                        Kind kind) {
  Reader r(bytes);
  ByteSpan magic = r.Take(kMagic.size());
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) {
    throw DecodeError("bad magic");
  }
  if (r.U8() != kVersion) throw DecodeError("unsupported version");
  ByteSpan id = r.Take(r.U32());
  if (!std::equal(id.begin(), id.end(), suite.id().begin(),
                  suite.id().end())) {
    throw DecodeError("envelope is for a different suite");
  }
  std::uint8_t got = r.U8();
  if (!IsKnownKind(got)) throw DecodeError("unknown envelope kind");
  if (got != static_cast<std::uint8_t>(kind)) {
    throw DecodeError("expected " + std::string(KindName(kind)) + ", got " +
                      std::string(KindName(static_cast<Kind>(got))));
  }
  return r.Rest();
}

Bytes EncodeMessage(ByteSpan msg) {
  Bytes out;
  out.reserve(4 + msg.size());
  AppendU32(out, CheckedCount(msg.size(), "message"));
  Append(out, msg);
  return out;
}

Bytes EncodeRingMembers(std::span<const PublicKey> keys) {
  Bytes out;
  out.reserve(4 + keys.size() * KPoint::kEncodedSize);
  AppendU32(out, CheckedCount(keys.size(), "key list"));
  for (const PublicKey& pk : keys) PutPublicKey(out, pk);
  return out;
}

Bytes EncodeRingPayload(const RingSpec& ring) {
  Bytes out;
  PutPublicKey(out, ring.original);
  Append(out, EncodeRingMembers(ring.members));
  return out;
}

Bytes EncodeWarrantPayload(const Warrant& w) {
  Bytes out;
  AppendU32(out, CheckedCount(w.body.size(), "warrant body"));
  Append(out, w.body);
  PutPublicKey(out, w.original);
  Append(out, w.nonce);
  Append(out, EncodeRingMembers(w.authorized));
  return out;
}

Bytes EncodePublicKey(const PairingSuite& suite, const PublicKey& pk) {
  Bytes payload;
  PutPublicKey(payload, pk);
  return Wrap(suite, Kind::kPublicKey, std::move(payload));
}

PublicKey DecodePublicKey(const PairingSuite& suite, ByteSpan bytes) {
  Reader r(ExpectEnvelope(suite, bytes, Kind::kPublicKey));
  PublicKey pk = ReadPublicKey(r);
  r.Finish();
  return pk;
}

Bytes EncodeSecretKey(const PairingSuite& suite, const SecretKey& sk) {
  Bytes payload{kPlaintextFlag};
  Append(payload, sk.s.ToBytes());
  return Wrap(suite, Kind::kSecretKey, std::move(payload));
}

SecretKey DecodeSecretKey(const PairingSuite& suite, ByteSpan bytes) {
  Reader r(ExpectEnvelope(suite, bytes, Kind::kSecretKey));
  ReadPlaintextFlag(r);
  SecretKey sk{Scalar::FromBytes(r.Take(Scalar::kEncodedSize))};
  r.Finish();
  if (sk.s.IsZero()) throw DecodeError("secret key is zero");
  return sk;
}

Bytes EncodeWarrant(const PairingSuite& suite, const Warrant& w) {
  return Wrap(suite, Kind::kWarrant, EncodeWarrantPayload(w));
}

Warrant DecodeWarrant(const PairingSuite& suite, ByteSpan bytes) {
  Reader r(ExpectEnvelope(suite, bytes, Kind::kWarrant));
  Warrant w = ReadWarrant(r);
  r.Finish();
  return w;
}

Bytes EncodeToken(const PairingSuite& suite, const DelegationToken& token) {
  Bytes payload = EncodeWarrantPayload(token.warrant);
  Append(payload, token.w_sig.ToBytes());
  return Wrap(suite, Kind::kDelegationToken, std::move(payload));
}

DelegationToken DecodeToken(const PairingSuite& suite, ByteSpan bytes) {
  Reader r(ExpectEnvelope(suite, bytes, Kind::kDelegationToken));
  DelegationToken token;
  token.warrant = ReadWarrant(r);
  token.w_sig = HPoint::FromBytes(r.Take(HPoint::kEncodedSize));
  r.Finish();
  return token;
}

Bytes EncodeSignature(const PairingSuite& suite,
                      const ProxyRingSignature& sig) {
  Bytes payload = EncodeWarrantPayload(sig.warrant);
  Append(payload, EncodeRingPayload(sig.ring));
  AppendU32(payload, CheckedCount(sig.glue.size(), "glue vector"));
  for (const TElem& c : sig.glue) Append(payload, c.ToBytes());
  Append(payload, sig.t_sum.ToBytes());
  return Wrap(suite, Kind::kRingSignature, std::move(payload));
}

ProxyRingSignature DecodeSignature(const PairingSuite& suite,
                                   ByteSpan bytes) {
  Reader r(ExpectEnvelope(suite, bytes, Kind::kRingSignature));
  ProxyRingSignature sig;
  sig.warrant = ReadWarrant(r);
  sig.ring = ReadRing(r);
  std::uint32_t n = r.U32();
  if (n != sig.ring.size()) {
    throw DecodeError("glue count does not match ring size");
  }
  sig.glue.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    sig.glue.push_back(TElem::FromBytes(r.Take(TElem::kEncodedSize)));
  }
  sig.t_sum = HPoint::FromBytes(r.Take(HPoint::kEncodedSize));
  r.Finish();
  return sig;
}

Bytes EncodeProxyKey(const PairingSuite& suite, const ProxyKeyMaterial& key) {
  Bytes payload{kPlaintextFlag};
  Append(payload, EncodeWarrantPayload(key.warrant));
  PutPublicKey(payload, key.proxy_pk);
  Append(payload, key.s_key.ToBytes());
  return Wrap(suite, Kind::kProxyKey, std::move(payload));
}

ProxyKeyMaterial DecodeProxyKey(const PairingSuite& suite, ByteSpan bytes) {
  Reader r(ExpectEnvelope(suite, bytes, Kind::kProxyKey));
  ReadPlaintextFlag(r);
  ProxyKeyMaterial key;
  key.warrant = ReadWarrant(r);
  key.proxy_pk = ReadPublicKey(r);
  key.s_key = HPoint::FromBytes(r.Take(HPoint::kEncodedSize));
  r.Finish();
  return key;
}

std::string Armor(ByteSpan envelope) { return ToHex(envelope) + "\n"; }

Bytes Dearmor(ByteSpan file_contents) {
  if (file_contents.size() >= kMagic.size() &&
      std::equal(kMagic.begin(), kMagic.end(), file_contents.begin())) {
    return Bytes(file_contents.begin(), file_contents.end());
  }
  std::string_view text(reinterpret_cast<const char*>(file_contents.data()),
                        file_contents.size());
  auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  return FromHex(text);
}

}  // namespace proxyring::wire
