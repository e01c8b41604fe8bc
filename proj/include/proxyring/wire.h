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

#ifndef PROXYRING_WIRE_H_
#define PROXYRING_WIRE_H_

// Canonical byte formats.
//
// Envelope:  "PRS1" | 0x01 | u32 len | suite id | kind | payload
//
// All integers are big-endian, every variable-length field carries a u32
// length or count, points are compressed. Payload decoders consume the
// payload exactly; trailing bytes are an error.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "proxyring/algebra.h"
#include "proxyring/bytes.h"
#include "proxyring/delegation.h"
#include "proxyring/pbsss.h"
#include "proxyring/ringsig.h"

namespace proxyring::wire {

inline constexpr std::array<std::uint8_t, 4> kMagic = {'P', 'R', 'S', '1'};
inline constexpr std::uint8_t kVersion = 0x01;

enum class Kind : std::uint8_t {
  kPublicKey = 0x01,
  kSecretKey = 0x02,
  kRingSignature = 0x03,
  kDelegationToken = 0x04,
  kWarrant = 0x05,
  kProxyKey = 0x06,
};

std::string_view KindName(Kind kind);

// Secret-bearing payloads start with this flag; only plaintext exists.
inline constexpr std::uint8_t kPlaintextFlag = 0x00;

struct Envelope {
  std::string suite_id;
  Kind kind;
  Bytes payload;
};

Bytes EncodeEnvelope(const Envelope& env);
// Rejects bad magic, version, kind, and truncation.
Envelope DecodeEnvelope(ByteSpan bytes);
// Decodes the header and checks suite id and kind; returns the payload.
ByteSpan ExpectEnvelope(const PairingSuite& suite, ByteSpan bytes, Kind kind);

// Canonical pieces that also feed the hash functions.
Bytes EncodeMessage(ByteSpan msg);                         // len | m
Bytes EncodeRingMembers(std::span<const PublicKey> keys);  // n | keys
Bytes EncodeRingPayload(const RingSpec& ring);             // PK_o | n | keys
Bytes EncodeWarrantPayload(const Warrant& w);

Bytes EncodePublicKey(const PairingSuite& suite, const PublicKey& pk);
PublicKey DecodePublicKey(const PairingSuite& suite, ByteSpan bytes);

Bytes EncodeSecretKey(const PairingSuite& suite, const SecretKey& sk);
SecretKey DecodeSecretKey(const PairingSuite& suite, ByteSpan bytes);

Bytes EncodeWarrant(const PairingSuite& suite, const Warrant& w);
Warrant DecodeWarrant(const PairingSuite& suite, ByteSpan bytes);

Bytes EncodeToken(const PairingSuite& suite, const DelegationToken& token);
DelegationToken DecodeToken(const PairingSuite& suite, ByteSpan bytes);

Bytes EncodeSignature(const PairingSuite& suite,
                      const ProxyRingSignature& sig);
ProxyRingSignature DecodeSignature(const PairingSuite& suite, ByteSpan bytes);

Bytes EncodeProxyKey(const PairingSuite& suite, const ProxyKeyMaterial& key);
ProxyKeyMaterial DecodeProxyKey(const PairingSuite& suite, ByteSpan bytes);

// Lowercase hex of an envelope, newline-terminated.
std::string Armor(ByteSpan envelope);
// Accepts either a raw envelope or its hex armor (surrounding whitespace
// ignored).
Bytes Dearmor(ByteSpan file_contents);

}  // namespace proxyring::wire

#endif  // PROXYRING_WIRE_H_
