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

#include "proxyring/entropy.h"

#include <sys/random.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <string>

#include "proxyring/bytes.h"
#include "proxyring/errors.h"

namespace proxyring {

void SystemEntropy::Fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    ssize_t got = getrandom(out.data() + done, out.size() - done, 0);
    if (got < 0) {
      if (errno == EINTR) continue;
      throw EntropyError(std::string("getrandom failed: ") +
                         std::strerror(errno));
    }
    done += static_cast<std::size_t>(got);
  }
}

SeededEntropy::SeededEntropy(std::uint64_t seed) : seed_(seed) {}

void SeededEntropy::Refill() {
  std::array<std::uint8_t, 16> input;
  for (int i = 0; i < 8; ++i) {
    input[i] = static_cast<std::uint8_t>(seed_ >> (56 - 8 * i));
    input[8 + i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
  }
  ++counter_;
  block_ = Sha256(input);
  used_ = 0;
}

void SeededEntropy::Fill(std::span<std::uint8_t> out) {
  std::size_t done = 0;
  while (done < out.size()) {
    if (used_ == block_.size()) Refill();
    std::size_t n = std::min(out.size() - done, block_.size() - used_);
    std::copy_n(block_.begin() + used_, n, out.begin() + done);
    used_ += n;
    done += n;
  }
}

}  // namespace proxyring
