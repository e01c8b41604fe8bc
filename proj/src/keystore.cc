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

#include "proxyring/keystore.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>

#include "proxyring/errors.h"
#include "proxyring/wire.h"

namespace proxyring {

namespace fs = std::filesystem;

namespace {

std::string CheckedLabel(std::string_view label) {
  if (!IsValidLabel(label)) {
    throw UsageError("invalid key label '" + std::string(label) + "'");
  }
  return std::string(label);
}

Bytes LoadEntry(const fs::path& path, std::string_view what,
                std::string_view label) {
  if (!fs::exists(path)) {
    throw UsageError("no " + std::string(what) + " labelled '" +
                     std::string(label) + "' in keystore");
  }
  return wire::Dearmor(ReadFileBytes(path));
}

}  // namespace

bool IsValidLabel(std::string_view label) {
  if (label.empty() || label.size() > 64 || label.front() == '.') return false;
  for (char c : label) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

Bytes ReadFileBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in),
               std::istreambuf_iterator<char>());
}

void WriteNewFile(const fs::path& path, ByteSpan data, bool owner_only) {
  const mode_t mode = owner_only ? 0600 : 0644;
  int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC, mode);
  if (fd < 0) {
    if (errno == EEXIST) throw UsageError(path.string() + " already exists");
    throw UsageError("cannot create " + path.string() + ": " +
                     std::strerror(errno));
  }
  std::size_t done = 0;
  while (done < data.size()) {
    ssize_t n = ::write(fd, data.data() + done, data.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      ::close(fd);
      throw Error("write to " + path.string() + " failed");
    }
    done += static_cast<std::size_t>(n);
  }
  ::close(fd);
}

void WriteFile(const fs::path& path, ByteSpan data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw Error("write to " + path.string() + " failed");
}

Keystore::Keystore(fs::path root) : root_(std::move(root)) {}

Keystore Keystore::FromEnvironment() {
  const char* env = std::getenv("PRS_KEYSTORE");
  return Keystore(env != nullptr && *env != '\0' ? fs::path(env)
                                                 : fs::path(".prs-keystore"));
}

fs::path Keystore::PublicPath(std::string_view label) const {
  return root_ / (CheckedLabel(label) + ".pub");
}

fs::path Keystore::SecretPath(std::string_view label) const {
  return root_ / (CheckedLabel(label) + ".sec");
}

fs::path Keystore::ProxyKeyPath(std::string_view label) const {
  return root_ / (CheckedLabel(label) + ".pkey");
}

bool Keystore::Contains(std::string_view label) const {
  return fs::exists(PublicPath(label)) || fs::exists(SecretPath(label)) ||
         fs::exists(ProxyKeyPath(label));
}

void Keystore::StoreKeyPair(const PairingSuite& suite, std::string_view label,
                            const KeyPair& kp) const {
  if (Contains(label)) {
    throw UsageError("label '" + std::string(label) + "' already in use");
  }
  fs::create_directories(root_);
  WriteNewFile(SecretPath(label), wire::EncodeSecretKey(suite, kp.secret),
               /*owner_only=*/true);
  WriteNewFile(PublicPath(label), wire::EncodePublicKey(suite, kp.public_key),
               /*owner_only=*/false);
}

void Keystore::StoreProxyKey(const PairingSuite& suite, std::string_view label,
                             const ProxyKeyMaterial& key) const {
  if (fs::exists(ProxyKeyPath(label))) {
    throw UsageError("proxy key '" + std::string(label) + "' already exists");
  }
  fs::create_directories(root_);
  WriteNewFile(ProxyKeyPath(label), wire::EncodeProxyKey(suite, key),
               /*owner_only=*/true);
}

PublicKey Keystore::LoadPublic(const PairingSuite& suite,
                               std::string_view label) const {
  return wire::DecodePublicKey(
      suite, LoadEntry(PublicPath(label), "public key", label));
}

SecretKey Keystore::LoadSecret(const PairingSuite& suite,
                               std::string_view label) const {
  return wire::DecodeSecretKey(
      suite, LoadEntry(SecretPath(label), "secret key", label));
}

ProxyKeyMaterial Keystore::LoadProxyKey(const PairingSuite& suite,
                                        std::string_view label) const {
  return wire::DecodeProxyKey(
      suite, LoadEntry(ProxyKeyPath(label), "proxy key", label));
}

}  // namespace proxyring
