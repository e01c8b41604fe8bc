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

// Writes the golden envelopes under tests/golden/. The inputs are fully
// seeded, so rerunning reproduces the committed files; a diff means the
// wire format changed.

#include <filesystem>
#include <iostream>

#include "proxyring/keystore.h"
#include "proxyring/wire.h"
#include "test_util.h"

using namespace proxyring;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_golden <output-dir>\n";
    return 4;
  }
  const std::filesystem::path dir = argv[1];
  const PairingSuite& s = testing::Suite();
  SeededEntropy e(2026);
  testing::Scenario sc = testing::MakeScenario(3, e, "golden fixture warrant");
  auto sig = ringsig::RingSign(s, sc.materials[1], sc.ring, 1,
                               BytesOf("golden fixture message"), e);

  auto put = [&](const char* name, const Bytes& env) {
    const std::string text = wire::Armor(env);
    WriteFile(dir / name, AsBytes(text));
  };
  put("public_key.hex", wire::EncodePublicKey(s, sc.original.public_key));
  put("secret_key.hex", wire::EncodeSecretKey(s, sc.original.secret));
  put("warrant.hex", wire::EncodeWarrant(s, sc.warrant));
  put("token.hex", wire::EncodeToken(s, sc.token));
  put("signature.hex", wire::EncodeSignature(s, sig));
  put("proxy_key.hex", wire::EncodeProxyKey(s, sc.materials[1]));
  return 0;
}
