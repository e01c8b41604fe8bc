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

#ifndef PROXYRING_BYTES_H_
#define PROXYRING_BYTES_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace proxyring {

using Bytes = std::vector<std::uint8_t>;
using ByteSpan = std::span<const std::uint8_t>;

inline ByteSpan AsBytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

inline Bytes BytesOf(std::string_view s) {
  const ByteSpan view = AsBytes(s);
  return Bytes(view.begin(), view.end());
}

// Lowercase hex.
std::string ToHex(ByteSpan data);

// Accepts upper or lower case; throws DecodeError on odd length or a
// non-hex character.
Bytes FromHex(std::string_view hex);

std::array<std::uint8_t, 32> Sha256(ByteSpan data);

void AppendU32(Bytes& out, std::uint32_t v);
void Append(Bytes& out, ByteSpan data);

}  // namespace proxyring

#endif  // PROXYRING_BYTES_H_
