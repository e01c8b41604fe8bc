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

#ifndef PROXYRING_KEYSTORE_H_
#define PROXYRING_KEYSTORE_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "proxyring/algebra.h"
#include "proxyring/bytes.h"
#include "proxyring/delegation.h"
#include "proxyring/pbsss.h"

namespace proxyring {

// Directory of labelled envelopes:
//   <label>.pub   public key      (kind 0x01)
//   <label>.sec   secret key      (kind 0x02, mode 0600)
//   <label>.pkey  proxy key       (kind 0x06, mode 0600)
class Keystore {
 public:
  explicit Keystore(std::filesystem::path root);

  // $PRS_KEYSTORE, or ./.prs-keystore when unset.
  static Keystore FromEnvironment();

  const std::filesystem::path& root() const { return root_; }

  std::filesystem::path PublicPath(std::string_view label) const;
  std::filesystem::path SecretPath(std::string_view label) const;
  std::filesystem::path ProxyKeyPath(std::string_view label) const;

  // True if any entry uses `label`.
  bool Contains(std::string_view label) const;

  // Throws UsageError if the label is invalid or already taken.
  void StoreKeyPair(const PairingSuite& suite, std::string_view label,
                    const KeyPair& kp) const;
  void StoreProxyKey(const PairingSuite& suite, std::string_view label,
                     const ProxyKeyMaterial& key) const;

  // Throw UsageError for a missing entry and DecodeError for a corrupt one.
  PublicKey LoadPublic(const PairingSuite& suite, std::string_view label) const;
  SecretKey LoadSecret(const PairingSuite& suite, std::string_view label) const;
  ProxyKeyMaterial LoadProxyKey(const PairingSuite& suite,
                                std::string_view label) const;

 private:
  std::filesystem::path root_;
};

// Labels are 1-64 characters from [A-Za-z0-9._-] and may not start with '.'.
bool IsValidLabel(std::string_view label);

// Whole-file helpers shared with the CLI.
Bytes ReadFileBytes(const std::filesystem::path& path);
// Creates the file exclusively; `owner_only` sets mode 0600. Throws
// UsageError if it already exists.
void WriteNewFile(const std::filesystem::path& path, ByteSpan data,
                  bool owner_only);
// Replaces the file if present.
void WriteFile(const std::filesystem::path& path, ByteSpan data);

}  // namespace proxyring

#endif  // PROXYRING_KEYSTORE_H_
