// Copyright 2026 The matchgame Authors.
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

#include "cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "matchgame/game_io.hpp"
#include "matchgame/leastcore.hpp"
#include "matchgame/maschler.hpp"
#include "matchgame/oracle.hpp"
#include "matchgame/random_game.hpp"

namespace matchgame::cli {
namespace {

using Json = nlohmann::ordered_json;

// Largest game for which --check runs the oracle.
constexpr int kCheckMaxNodes = 8;
constexpr size_t kThetaHead = 20;

struct Settings {
  std::string command;
  std::string input;
  std::string method = "auto";
  std::string format = "json";
  std::string dump_lp;
  bool check = false;
  bool timing = false;
  std::uint64_t seed = 1;
  int suite = 0;
  int suite_nodes = 6;
  size_t max_enum = SolverOptions{}.max_enum_edges;
};

class CheckMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CoreNonempty : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json AllocationJson(const GameInstance& game, const Allocation& x) {
  Json out = Json::object();
  for (NodeId v = 0; v < game.node_count(); ++v) out[game.label(v)] = x[v].ToString();
  return out;
}

Json RationalList(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& r : values) out.push_back(r.ToString());
  return out;
}

Json NodeList(const GameInstance& game, const std::vector<NodeId>& nodes) {
  Json out = Json::array();
  for (NodeId v : nodes) out.push_back(game.label(v));
  return out;
}

Json EdgeList(const GameInstance& game, const std::vector<EdgeId>& edges) {
  Json out = Json::array();
  for (EdgeId e : edges)
    out.push_back(Json::array({game.label(game.edge(e).u), game.label(game.edge(e).v)}));
  return out;
}

Json NucleolusJson(const GameInstance& game, const NucleolusResult& r) {
  Json out;
  out["allocation"] = AllocationJson(game, r.allocation);
  out["epsilons"] = RationalList(r.epsilons);
  out["rounds"] = r.rounds;
  out["method"] = ToString(r.method);
  return out;
}

Json DecompositionJson(const GameInstance& game, const Decomposition& d) {
  Json out;
  out["epsilon1"] = d.epsilon1.ToString();
  out["x_star"] = AllocationJson(game, d.x_star);
  Json laminar = Json::array();
  for (const Coalition& s : d.laminar.sets) laminar.push_back(NodeList(game, s.members()));
  out["laminar"] = std::move(laminar);
  Json maximal = Json::array();
  for (const Coalition& s : d.maximal_sets) maximal.push_back(NodeList(game, s.members()));
  out["maximal_sets"] = std::move(maximal);
  out["representatives"] = NodeList(game, d.representatives);
  out["W"] = NodeList(game, d.W.members());
  out["F"] = EdgeList(game, d.F);
  out["M_star"] = EdgeList(game, d.M_star.edges());
  out["E_plus"] = EdgeList(game, d.E_plus);
  out["E_star"] = EdgeList(game, d.E_star);
  return out;
}

std::string ReadInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GameError(GameError::Kind::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteText(std::ostream& out, const Json& report) {
  out << report["command"].get<std::string>() << "\n";
  for (const auto& [key, value] : report["result"].items()) {
    out << "  " << key << ": ";
    if (value.is_object()) {
      bool first = true;
      for (const auto& [k, v] : value.items()) {
        out << (first ? "" : ", ") << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
        first = false;
      }
    } else if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
    out << "\n";
  }
  if (report.contains("checks_passed") && !report["checks_passed"].empty())
    out << "  checks: " << report["checks_passed"].dump() << "\n";
  if (report.contains("timing_ms"))
    out << "  timing_ms: " << report["timing_ms"].get<long long>() << "\n";
}

// The P1 rows hold at x, checked by separation.
bool InLeastcore(const GameInstance& game, const Allocation& x, const Rational& eps1) {
  Rational total;
  for (const Rational& r : x) {
    if (r.sign() < 0) return false;
    total += r;
  }
  return total == GameValue(game) &&
         MaxWeightMatching(game, ReducedWeights(game, x)).value <= -eps1;
}

Json RunSolve(const GameInstance& game, const Settings& s, const SolverOptions& opts,
              Json& checks) {
  NucleolusMethod method = NucleolusMethod::kCompact;
  if (s.method == "bruteforce") method = NucleolusMethod::kBruteForce;
  const NucleolusResult r = Nucleolus(game, method, opts);
  if (s.check) {
    const LeastcoreResult lc = SolveLeastcore(game, opts);
    if (!InLeastcore(game, r.allocation, lc.epsilon1))
      throw CheckMismatch("allocation is not in the leastcore");
    checks.push_back("leastcore-member");
    if (r.rounds > game.node_count()) throw CheckMismatch("more rounds than nodes");
    checks.push_back("round-bound");
    if (game.node_count() <= kCheckMaxNodes) {
      const NucleolusResult o = method == NucleolusMethod::kBruteForce
                                    ? Nucleolus(game, NucleolusMethod::kCompact, opts)
                                    : BruteNucleolus(game, opts);
      if (o.allocation != r.allocation)
        throw CheckMismatch("oracle allocation " + FormatAllocation(game, o.allocation) +
                            " differs from " + FormatAllocation(game, r.allocation));
      if (o.epsilons != r.epsilons) throw CheckMismatch("per-round eps differ");
      checks.push_back("oracle-match");
      if (!PrekernelCheck(game, r.allocation)) throw CheckMismatch("not in the prekernel");
      checks.push_back("prekernel");
    }
  }
  return NucleolusJson(game, r);
}

Json RunLeastcore(const GameInstance& game, const SolverOptions& opts) {
  const LeastcoreResult lc = SolveLeastcore(game, opts);
  Json out;
  out["epsilon1"] = lc.epsilon1.ToString();
  out["core_empty"] = CoreIsEmpty(lc);
  out["witness"] = AllocationJson(game, lc.witness);
  out["generated_rows"] = static_cast<int>(lc.generated_constraints.size());
  return out;
}

Json RunDecompose(const GameInstance& game, const SolverOptions& opts) {
  const LeastcoreResult lc = SolveLeastcore(game, opts);
  if (!CoreIsEmpty(lc))
    throw CoreNonempty("core is not empty (eps1 = " + lc.epsilon1.ToString() +
                       "); the decomposition is defined for empty cores only");
  const Allocation x_star = UniversalAllocation(game, lc, opts);
  const FaceDescription face = BuildFaceDescription(game, x_star, true);
  return DecompositionJson(game, BuildDecomposition(game, x_star, lc.epsilon1, face, opts));
}

Json RunOracle(const GameInstance& game, const SolverOptions& opts) {
  const NucleolusResult r = BruteNucleolus(game, opts);
  Json out = NucleolusJson(game, r);
  const std::vector<Rational> theta = ThetaVector(game, r.allocation);
  out["theta_head"] = RationalList(std::vector<Rational>(
      theta.begin(), theta.begin() + std::min(theta.size(), kThetaHead)));
  out["prekernel"] = PrekernelCheck(game, r.allocation);
  return out;
}

// Random instances: compact chain against the oracle.
Json RunSuite(const Settings& s, const SolverOptions& opts) {
  Json cases = Json::array();
  int mismatches = 0;
  for (int i = 0; i < s.suite; ++i) {
    const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(i);
    const GameInstance game = RandomGame(s.suite_nodes, seed);
    const NucleolusResult c = Nucleolus(game, NucleolusMethod::kCompact, opts);
    const NucleolusResult o = BruteNucleolus(game, opts);
    const bool match = c.allocation == o.allocation && c.epsilons == o.epsilons;
    if (!match) ++mismatches;
    Json row;
    row["seed"] = seed;
    row["edges"] = game.edge_count();
    row["method"] = ToString(c.method);
    row["match"] = match;
    cases.push_back(std::move(row));
  }
  Json out;
  out["instances"] = s.suite;
  out["mismatches"] = mismatches;
  out["cases"] = std::move(cases);
  if (mismatches > 0)
    throw CheckMismatch(std::to_string(mismatches) + " suite instances disagree");
  return out;
}

int Execute(const Settings& s, std::ostream& out, std::ostream& err) {
  SolverOptions opts;
  opts.max_enum_edges = s.max_enum;
  std::ofstream dump_file;
  std::ostream* dump = nullptr;
  if (!s.dump_lp.empty()) {
    if (s.dump_lp == "-") {
      dump = &err;
    } else {
      dump_file.open(s.dump_lp);
      if (!dump_file) throw GameError(GameError::Kind::kIo, "cannot write " + s.dump_lp);
      dump = &dump_file;
    }
    opts.lp_observer = [dump](const std::string& label, const LpProblem& p) {
      WriteLpText(*dump, p, label);
    };
  }

  Json report;
  report["command"] = s.command;
  Json checks = Json::array();
  const auto start = std::chrono::steady_clock::now();
  if (s.command == "oracle" && s.suite > 0) {
    report["input_digest"] = nullptr;
    report["result"] = RunSuite(s, opts);
  } else {
    if (s.input.empty()) throw CLI::RequiredError("an input file is required");
    const std::string bytes = ReadInput(s.input);
    const GameInstance game = LoadGameString(bytes, SniffFormat(bytes));
    report["input_digest"] = "sha256:" + Sha256Hex(bytes);
    if (s.command == "solve") {
      report["result"] = RunSolve(game, s, opts, checks);
    } else if (s.command == "leastcore") {
      report["result"] = RunLeastcore(game, opts);
    } else if (s.command == "decompose") {
      report["result"] = RunDecompose(game, opts);
    } else {
      report["result"] = RunOracle(game, opts);
    }
  }
  report["checks_passed"] = std::move(checks);
  if (s.timing) {
    report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  }
  if (s.format == "text") {
    WriteText(out, report);
  } else {
    out << report.dump(2) << "\n";
  }
  return kExitOk;
}

}  // namespace

std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app("Exact nucleolus of weighted matching games", "matchgame");
  app.require_subcommand(1);
  app.add_option("--format", s.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-enum", s.max_enum, "Largest |E| for matching enumeration");
  app.add_option("--dump-lp", s.dump_lp, "Write every solved LP to this file ('-' for stderr)");
  app.add_flag("--timing", s.timing, "Report wall time in milliseconds");

  CLI::App* solve = app.add_subcommand("solve", "Compute the nucleolus");
  solve->add_option("input", s.input, "Game file (JSON or edge list)")->required();
  solve->add_option("--method", s.method, "compact, bruteforce or auto")
      ->check(CLI::IsMember({"compact", "bruteforce", "auto"}));
  solve->add_flag("--check", s.check, "Cross-verify against the oracle when n <= 8");

  CLI::App* leastcore = app.add_subcommand("leastcore", "Leastcore value and a witness");
  leastcore->add_option("input", s.input, "Game file")->required();

  CLI::App* decompose = app.add_subcommand("decompose", "Blossom decomposition");
  decompose->add_option("input", s.input, "Game file")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force nucleolus and theta head");
  oracle->add_option("input", s.input, "Game file");
  oracle->add_option("--suite", s.suite, "Run this many random instances instead");
  oracle->add_option("--nodes", s.suite_nodes, "Node count for --suite")
      ->check(CLI::Range(2, kOracleMaxNodes));
  app.add_option("--seed", s.seed, "First seed for random suites");

  for (CLI::App* sub : {solve, leastcore, decompose, oracle}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  s.command = app.get_subcommands().front()->get_name();
  if (s.command == "oracle" && s.suite == 0 && s.input.empty()) {
    err << "oracle: give an input file or --suite N\n";
    return kExitInput;
  }

  try {
    return Execute(s, out, err);
  } catch (const GameError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kExitInput;
  } catch (const CheckMismatch& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const CoreNonempty& e) {
    err << "decompose: " << e.what() << "\n";
    return kExitCoreNonempty;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace matchgame::cli
