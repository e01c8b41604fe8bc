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

#ifndef PROXYRING_ENTROPY_H_
#define PROXYRING_ENTROPY_H_

#include <array>
#include <cstdint>
#include <span>

namespace proxyring {

// Source of uniform random bytes. Implementations are not required to be
// thread-safe; each signer owns its own source.
class EntropySource {
 public:
  virtual ~EntropySource() = default;

  // Fills `out` completely or throws EntropyError.
  virtual void Fill(std::span<std::uint8_t> out) = 0;
};

// Operating-system randomness (getrandom(2)).
class SystemEntropy final : public EntropySource {
 public:
  void Fill(std::span<std::uint8_t> out) override;
};

// Deterministic stream SHA-256(seed || counter) for tests and reproducible
// fixtures. Never use for real keys.
class SeededEntropy final : public EntropySource {
 public:
  explicit SeededEntropy(std::uint64_t seed);

  void Fill(std::span<std::uint8_t> out) override;

 private:
  void Refill();

  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t used_ = 32;
};

}  // namespace proxyring

#endif  // PROXYRING_ENTROPY_H_
