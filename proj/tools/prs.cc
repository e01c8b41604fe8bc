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

// prs: command-line front end for proxy ring signatures.
//
//   prs keygen LABEL
//   prs delegate --from LABEL --body FILE --proxy PUB... --out TOKEN
//   prs proxy-accept --token TOKEN --key LABEL [--as LABEL]
//   prs sign --key LABEL --ring PUB... [--index K] --message FILE --out SIG
//   prs verify --sig SIG --message FILE [--stats]
//   prs bench [--sizes 1,2,5,10,50] [--trials T] [--csv]
//
// Exit codes: 0 ok, 1 rejected, 2 malformed input, 3 unauthorized, 4 usage.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "proxyring/algebra.h"
#include "proxyring/delegation.h"
#include "proxyring/entropy.h"
#include "proxyring/errors.h"
#include "proxyring/keystore.h"
#include "proxyring/pbsss.h"
#include "proxyring/ringsig.h"
#include "proxyring/wire.h"

namespace proxyring::cli {
namespace {

namespace fs = std::filesystem;

enum ExitCode : int {
  kOk = 0,
  kRejected = 1,
  kMalformed = 2,
  kUnauthorized = 3,
  kUsage = 4,
};

struct Context {
  const PairingSuite& suite = PairingSuite::Bls12381();
  Keystore keystore = Keystore::FromEnvironment();
  std::unique_ptr<EntropySource> entropy;
};

bool EndsWith(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// `.hex` paths get the armored form, anything else raw bytes.
void WriteEnvelope(const std::string& path, const Bytes& envelope) {
  if (EndsWith(path, ".hex")) {
    const std::string text = wire::Armor(envelope);
    WriteFile(path, AsBytes(text));
  } else {
    WriteFile(path, envelope);
  }
}

Bytes ReadEnvelope(const std::string& path) {
  return wire::Dearmor(ReadFileBytes(path));
}

std::vector<PublicKey> ReadPublicKeys(const Context& ctx,
                                      const std::vector<std::string>& paths) {
  std::vector<PublicKey> keys;
  for (const std::string& p : paths) {
    keys.push_back(wire::DecodePublicKey(ctx.suite, ReadEnvelope(p)));
  }
  return keys;
}

// ------------------------------------------------------------------ keygen

struct KeygenArgs {
  std::string label;
};

int RunKeygen(Context& ctx, const KeygenArgs& args) {
  if (ctx.keystore.Contains(args.label)) {
    throw UsageError("label '" + args.label + "' already in use");
  }
  const KeyPair kp = pbsss::GenerateKeyPair(ctx.suite, *ctx.entropy);
  ctx.keystore.StoreKeyPair(ctx.suite, args.label, kp);
  std::cout << wire::Armor(wire::EncodePublicKey(ctx.suite, kp.public_key));
  return kOk;
}

// ---------------------------------------------------------------- delegate

struct DelegateArgs {
  std::string from;
  std::string body;
  std::vector<std::string> proxies;
  std::string out;
};

int RunDelegate(Context& ctx, const DelegateArgs& args) {
  if (args.proxies.empty()) throw UsageError("at least one --proxy required");
  const SecretKey sk = ctx.keystore.LoadSecret(ctx.suite, args.from);
  const PublicKey pk = ctx.keystore.LoadPublic(ctx.suite, args.from);
  const Warrant warrant =
      delegation::MakeWarrant(ReadFileBytes(args.body), pk,
                              ReadPublicKeys(ctx, args.proxies), *ctx.entropy);
  const DelegationToken token =
      delegation::MakeDelegation(ctx.suite, sk, warrant);
  WriteEnvelope(args.out, wire::EncodeToken(ctx.suite, token));
  std::cout << "warrant digest: "
            << ToHex(Sha256(wire::EncodeWarrantPayload(warrant))) << "\n";
  return kOk;
}

// ------------------------------------------------------------ proxy-accept

struct AcceptArgs {
  std::string token;
  std::string key;
  std::string as;
};

int RunProxyAccept(Context& ctx, const AcceptArgs& args) {
  const DelegationToken token =
      wire::DecodeToken(ctx.suite, ReadEnvelope(args.token));
  const SecretKey sk = ctx.keystore.LoadSecret(ctx.suite, args.key);
  const ProxyKeyMaterial material =
      delegation::DeriveProxyKey(ctx.suite, token, sk);
  const std::string label = args.as.empty() ? args.key : args.as;
  ctx.keystore.StoreProxyKey(ctx.suite, label, material);
  std::cout << "proxy key stored as '" << label << "'\n";
  return kOk;
}

// -------------------------------------------------------------------- sign

struct SignArgs {
  std::string key;
  std::vector<std::string> ring;
  std::optional<std::size_t> index;
  std::string message;
  std::string out;
};

int RunSign(Context& ctx, const SignArgs& args) {
  const ProxyKeyMaterial material =
      ctx.keystore.LoadProxyKey(ctx.suite, args.key);
  RingSpec ring{material.warrant.original, ReadPublicKeys(ctx, args.ring)};
  ring.Validate();

  std::size_t k;
  if (args.index) {
    k = *args.index;
    if (k >= ring.size()) {
      throw UsageError("--index " + std::to_string(k) +
                       " out of range for ring of size " +
                       std::to_string(ring.size()));
    }
  } else {
    std::optional<std::size_t> found = ring.IndexOf(material.proxy_pk);
    if (!found) throw UsageError("signer key is not in the ring");
    k = *found;
  }
  if (ring.size() == 1) {
    std::cerr << "warning: ring of size 1 identifies the signer; "
                 "the signature is not anonymous\n";
  }
  const ProxyRingSignature sig = ringsig::RingSign(
      ctx.suite, material, ring, k, ReadFileBytes(args.message), *ctx.entropy);
  WriteEnvelope(args.out, wire::EncodeSignature(ctx.suite, sig));
  return kOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string sig;
  std::string message;
  bool stats = false;
};

int RunVerify(Context& ctx, const VerifyArgs& args) {
  const Bytes raw = ReadFileBytes(args.sig);
  const Bytes msg = ReadFileBytes(args.message);
  Bytes envelope;
  try {
    envelope = wire::Dearmor(raw);
  } catch (const DecodeError&) {
    envelope.clear();
  }
  OpCounter ctr;
  const Verdict v =
      ringsig::RingVerifyEncoded(ctx.suite, envelope, msg, &ctr);
  if (v == Verdict::kAccept) {
    std::cout << "accept\n";
  } else {
    std::cout << "reject: " << VerdictCause(v) << "\n";
  }
  if (args.stats) {
    std::cout << "pairings: " << ctr.pairings << "\n"
              << "key-group mults: " << ctr.k_mults << "\n"
              << "hash-group mults: " << ctr.h_mults << "\n"
              << "target exps: " << ctr.t_exps << "\n"
              << "hashes: " << ctr.hashes << "\n";
  }
  return v == Verdict::kAccept ? kOk : kRejected;
}

// ------------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::size_t> sizes = {1, 2, 5, 10, 50};
  std::size_t trials = 5;
  bool csv = false;
};

struct BenchRow {
  std::size_t n;
  double sign_ms;
  double verify_ms;
  std::uint64_t verify_pairings;
  std::uint64_t verify_kmults;
};

BenchRow BenchOne(Context& ctx, std::size_t n, std::size_t trials) {
  using Clock = std::chrono::steady_clock;
  const PairingSuite& s = ctx.suite;
  EntropySource& e = *ctx.entropy;

  const KeyPair original = pbsss::GenerateKeyPair(s, e);
  std::vector<KeyPair> proxies;
  std::vector<PublicKey> members;
  for (std::size_t i = 0; i < n; ++i) {
    proxies.push_back(pbsss::GenerateKeyPair(s, e));
    members.push_back(proxies.back().public_key);
  }
  const Warrant warrant = delegation::MakeWarrant(
      BytesOf("benchmark"), original.public_key, members, e);
  const DelegationToken token =
      delegation::MakeDelegation(s, original.secret, warrant);
  const RingSpec ring{original.public_key, members};
  const Bytes msg = BytesOf("benchmark message");

  BenchRow row{n, 0, 0, 0, 0};
  double sign_total = 0, verify_total = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t k = t % n;
    const ProxyKeyMaterial material =
        delegation::DeriveProxyKey(s, token, proxies[k].secret);

    auto t0 = Clock::now();
    const ProxyRingSignature sig =
        ringsig::RingSign(s, material, ring, k, msg, e);
    auto t1 = Clock::now();
    OpCounter ctr;
    const Verdict v = ringsig::RingVerify(s, sig, msg, &ctr);
    auto t2 = Clock::now();
    if (v != Verdict::kAccept) throw Error("benchmark signature rejected");

    sign_total += std::chrono::duration<double, std::milli>(t1 - t0).count();
    verify_total += std::chrono::duration<double, std::milli>(t2 - t1).count();
    row.verify_pairings = std::max(row.verify_pairings, ctr.pairings);
    row.verify_kmults = std::max(row.verify_kmults, ctr.k_mults);
  }
  row.sign_ms = sign_total / static_cast<double>(trials);
  row.verify_ms = verify_total / static_cast<double>(trials);
  return row;
}

int RunBench(Context& ctx, const BenchArgs& args) {
  if (args.trials == 0) throw UsageError("--trials must be positive");
  if (args.csv) {
    std::cout << "n,sign_ms,verify_ms,verify_pairings,verify_kmults\n";
  } else {
    std::cout << std::setw(6) << "n" << std::setw(12) << "sign_ms"
              << std::setw(12) << "verify_ms" << std::setw(18)
              << "verify_pairings" << std::setw(16) << "verify_kmults"
              << "\n";
  }
  for (std::size_t n : args.sizes) {
    if (n == 0) throw UsageError("ring sizes must be positive");
    const BenchRow r = BenchOne(ctx, n, args.trials);
    if (args.csv) {
      std::cout << r.n << ',' << std::fixed << std::setprecision(3)
                << r.sign_ms << ',' << r.verify_ms << ',' << r.verify_pairings
                << ',' << r.verify_kmults << "\n";
    } else {
      std::cout << std::setw(6) << r.n << std::fixed << std::setprecision(3)
                << std::setw(12) << r.sign_ms << std::setw(12) << r.verify_ms
                << std::setw(18) << r.verify_pairings << std::setw(16)
                << r.verify_kmults << "\n";
    }
    std::cout.flush();
  }
  return kOk;
}

bool TestModeEnabled() {
  const char* v = std::getenv("PRS_TEST_MODE");
  return v != nullptr && std::string(v) == "1";
}

int Main(int argc, char** argv) {
  CLI::App app{"Proxy ring signatures: delegate, sign anonymously, verify"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  app.add_option("--test-entropy-seed", seed)->group("");

  KeygenArgs keygen;
  auto* keygen_cmd = app.add_subcommand("keygen", "Create a key pair");
  keygen_cmd->add_option("label", keygen.label, "Keystore label")->required();

  DelegateArgs delegate;
  auto* delegate_cmd =
      app.add_subcommand("delegate", "Issue a delegation token to proxies");
  delegate_cmd->add_option("--from", delegate.from, "Original signer label")
      ->required();
  delegate_cmd->add_option("--body", delegate.body, "Warrant terms file")
      ->required();
  delegate_cmd->add_option("--proxy", delegate.proxies,
                           "Proxy public key file (repeatable)");
  delegate_cmd->add_option("--out", delegate.out, "Token output file")
      ->required();

  AcceptArgs accept;
  auto* accept_cmd = app.add_subcommand(
      "proxy-accept", "Check a token and derive this proxy's signing key");
  accept_cmd->add_option("--token", accept.token, "Delegation token file")
      ->required();
  accept_cmd->add_option("--key", accept.key, "Proxy secret key label")
      ->required();
  accept_cmd->add_option("--as", accept.as,
                         "Label for the proxy key (default: --key)");

  SignArgs sign;
  auto* sign_cmd = app.add_subcommand("sign", "Produce a ring signature");
  sign_cmd->add_option("--key", sign.key, "Proxy key label")->required();
  sign_cmd->add_option("--ring", sign.ring, "Ring member public key files")
      ->required();
  sign_cmd->add_option("--index", sign.index,
                       "Signer position in the ring (default: locate)");
  sign_cmd->add_option("--message", sign.message, "Message file")->required();
  sign_cmd->add_option("--out", sign.out, "Signature output file")->required();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a ring signature");
  verify_cmd->add_option("--sig", verify.sig, "Signature file")->required();
  verify_cmd->add_option("--message", verify.message, "Message file")
      ->required();
  verify_cmd->add_flag("--stats", verify.stats, "Print operation counts");

  BenchArgs bench;
  auto* bench_cmd =
      app.add_subcommand("bench", "Time signing and verification");
  bench_cmd->add_option("--sizes", bench.sizes, "Ring sizes")->delimiter(',');
  bench_cmd->add_option("--trials", bench.trials, "Trials per size");
  bench_cmd->add_flag("--csv", bench.csv, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  Context ctx;
  if (seed) {
    if (!TestModeEnabled()) {
      std::cerr << "error: --test-entropy-seed requires PRS_TEST_MODE=1\n";
      return kUsage;
    }
    ctx.entropy = std::make_unique<SeededEntropy>(*seed);
  } else {
    ctx.entropy = std::make_unique<SystemEntropy>();
  }

  try {
    if (*keygen_cmd) return RunKeygen(ctx, keygen);
    if (*delegate_cmd) return RunDelegate(ctx, delegate);
    if (*accept_cmd) return RunProxyAccept(ctx, accept);
    if (*sign_cmd) return RunSign(ctx, sign);
    if (*verify_cmd) return RunVerify(ctx, verify);
    if (*bench_cmd) return RunBench(ctx, bench);
  } catch (const AuthorizationError& e) {
    std::cerr << "error: unauthorized: " << e.what() << "\n";
    return kUnauthorized;
  } catch (const DecodeError& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const ValidationError& e) {
    std::cerr << "error: invalid input: " << e.what() << "\n";
    return kMalformed;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace
}  // namespace proxyring::cli

int main(int argc, char** argv) { return proxyring::cli::Main(argc, argv); }
