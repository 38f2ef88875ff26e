// Copyright 2026 The sirtp Authors
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


#include "sirtp/cli.h"

#include <chrono>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "sirtp/analysis.h"
#include "sirtp/bench.h"
#include "sirtp/core.h"
#include "sirtp/document.h"
#include "sirtp/oracle.h"
#include "sirtp/solver.h"
#include "sirtp/svg.h"

namespace sirtp {

namespace {

// Input problems: bad arguments, unreadable or malformed files.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A freshly built object failed its own verification.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text) || !file.flush()) {
    throw UsageError("cannot write " + path);
  }
}

// Writes to path, or to out when path is "-".
void Deliver(const std::string& path, const std::string& text,
             std::ostream& out) {
  if (path == "-") {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

void RequireVerified(const PartitionPair& pair) {
  const CheckReport report = VerifyPair(pair);
  if (!report.ok) {
    throw InternalError("constructed pair failed verification:\n" +
                        report.ToString());
  }
}

struct SolveArgs {
  Int p = 0;
  Int q = 0;
  std::string algorithm = "algsirtp";
  std::string emit;
  std::string svg;
  int scale = 16;
  bool trace = false;
  bool reduce_gcd = false;
};

int Solve(const SolveArgs& args, std::ostream& out) {
  const SirtpInstance inst(args.p, args.q);
  const bool square_transfer = args.algorithm == "square-transfer";
  if (square_transfer && (inst.Longer() != inst.Shorter() + 1 ||
                          inst.Shorter() < 2)) {
    throw UsageError("square-transfer needs q = p + 1 with p >= 2");
  }

  Int size = 0;
  SolveTrace trace;
  if (args.algorithm == "algsirtp") {
    SizeResult r = AlgSirtpSize(inst);
    size = r.size;
    trace = std::move(r.trace);
  } else if (args.algorithm == "euclid") {
    size = EuclidSirtpSize(inst);
  } else {
    size = SquareTransferSize(inst.Shorter());
  }
  out << size << "\n";
  if (args.trace) {
    if (args.algorithm != "algsirtp") {
      throw UsageError("--trace is only available for --algorithm algsirtp");
    }
    for (size_t i = 0; i < trace.rounds.size(); ++i) {
      const TraceRound& r = trace.rounds[i];
      out << "round " << i << ": p=" << r.p << " q=" << r.q
          << " delta=" << r.delta << " branch=" << BranchName(r.branch)
          << " added=" << r.added << "\n";
    }
    out << "depth " << trace.depth << "\n";
  }
  if (args.emit.empty() && args.svg.empty()) return kExitOk;

  if (size > kMaxMaterializedModules) {
    throw UsageError("refusing to materialize " + std::to_string(size) +
                     " modules (limit " +
                     std::to_string(kMaxMaterializedModules) + ")");
  }
  SolveOptions options;
  options.reduce_by_gcd = args.reduce_gcd;
  PartitionPair pair;
  if (args.algorithm == "algsirtp") {
    pair = AlgSirtpPartition(inst, options);
  } else if (args.algorithm == "euclid") {
    pair = EuclidSirtp(inst, options);
  } else {
    pair = SquareTransferPair(inst.Shorter());
  }
  if (pair.size() != size) {
    throw InternalError("geometry has " + std::to_string(pair.size()) +
                        " modules, expected " + std::to_string(size));
  }
  RequireVerified(pair);
  // Rendering validates its limits before anything is written.
  const std::string svg = args.svg.empty() ? "" : RenderSvg(pair, args.scale);
  if (!args.emit.empty()) Deliver(args.emit, WritePairDocument(pair), out);
  if (!args.svg.empty()) Deliver(args.svg, svg, out);
  return kExitOk;
}

int Verify(const std::string& path, const std::string& mode,
           std::ostream& out) {
  PartitionPair pair = ReadPairDocument(ReadFile(path));
  if (mode == "strict") pair.mode = IsomorphismMode::kStrict;
  if (mode == "rotational") pair.mode = IsomorphismMode::kRotational;
  const CheckReport report = VerifyPair(pair);
  if (!report.ok) {
    out << report.ToString();
    return kExitCheckFailed;
  }
  out << "ok " << pair.size() << " modules\n";
  return kExitOk;
}

struct OracleArgs {
  Int p = 0;
  Int q = 0;
  Int max_area = kDefaultOracleArea;
  long long budget_ms = 0;
  std::string emit;
};

int Oracle(const OracleArgs& args, std::ostream& out) {
  const SirtpInstance inst(args.p, args.q);
  if (Area(Dims(inst.p, inst.q)) > args.max_area) {
    throw UsageError("p*q exceeds --max-area " +
                     std::to_string(args.max_area) +
                     "; raise it (at most " + std::to_string(kMaxOracleArea) +
                     ") to search anyway");
  }
  OracleBudget budget;
  budget.max_area = args.max_area;
  budget.time_limit = std::chrono::milliseconds(args.budget_ms);
  const OracleResult result = MinSirtp(inst, budget);
  out << result.min_size << "\n";
  if (!result.exhausted) out << "exhausted=false\n";
  if (!args.emit.empty()) {
    Deliver(args.emit, WriteOracleDocument(inst, result), out);
  }
  return kExitOk;
}

struct BenchArgs {
  std::string family = "successor";
  Int from = 2;
  Int to = 10;
  int n = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.5;
  Int oracle_max_area = kDefaultOracleArea;
  long long oracle_budget_ms = 10000;
  bool timings = false;
  std::string out = "-";
};

int Bench(const BenchArgs& args, std::ostream& out) {
  static const std::map<std::string, FamilyKind> kFamilies = {
      {"successor", FamilyKind::kSuccessor},
      {"coprime", FamilyKind::kCoprimeRandom},
      {"ratio", FamilyKind::kRatioBand}};
  FamilySpec spec;
  spec.kind = kFamilies.at(args.family);
  spec.p_min = args.from;
  spec.p_max = args.to;
  spec.count = args.n;
  spec.seed = args.seed;
  spec.epsilon = args.epsilon;
  BenchOptions options;
  options.oracle_max_area = args.oracle_max_area;
  options.oracle_time_limit = std::chrono::milliseconds(args.oracle_budget_ms);
  options.include_timings = args.timings;
  Deliver(args.out, EmitCsv(RunFamily(spec, options), args.timings), out);
  return kExitOk;
}

int Render(const std::string& path, const std::string& svg_path, int scale,
           std::ostream& out) {
  const PartitionPair pair = ReadPairDocument(ReadFile(path));
  const CheckReport report = VerifyPair(pair);
  if (!report.ok) {
    out << report.ToString();
    return kExitCheckFailed;
  }
  Deliver(svg_path, RenderSvg(pair, scale), out);
  return kExitOk;
}

int Reduce(const std::string& a, const std::string& b, const std::string& c,
           const std::string& d, std::ostream& out) {
  const SrtpReduction r = ReduceSrtp(Rational::Parse(a), Rational::Parse(b),
                                     Rational::Parse(c), Rational::Parse(d));
  out << "sirtp " << r.instance.p << " " << r.instance.q << "\n"
      << "sides_swapped=" << (r.sides_swapped ? "true" : "false") << "\n"
      << "horizontal_stretch=" << r.horizontal_stretch.ToString() << "\n"
      << "vertical_stretch=" << r.vertical_stretch.ToString() << "\n"
      << "size=" << AlgSirtpSize(r.instance).size << "\n";
  return kExitOk;
}

int Irtp(Int a, Int b, Int c, Int d, const std::string& rule_name,
         const std::string& emit, std::ostream& out) {
  static const std::map<std::string, AlignmentRule> kRules = {
      {"greedy", AlignmentRule::kGreedy},
      {"align-long", AlignmentRule::kAlignLong},
      {"align-short", AlignmentRule::kAlignShort}};
  const IrtpResult result =
      EuclidIrtp(IrtpInstance(a, b, c, d), kRules.at(rule_name));
  out << result.size << "\n";
  if (!emit.empty()) {
    if (result.size > kMaxMaterializedModules) {
      throw UsageError("refusing to write " + std::to_string(result.size) +
                       " modules");
    }
    RequireVerified(result.pair);
    Deliver(emit, WritePairDocument(result.pair), out);
  }
  return kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Strict integral rectangle transformations: p x q into q x p "
               "by two partitions with identical modules."};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve SIRTP(p, q).");
  solve->add_option("p", solve_args.p, "First side")
      ->required()
      ->check(CLI::PositiveNumber);
  solve->add_option("q", solve_args.q, "Second side")
      ->required()
      ->check(CLI::PositiveNumber);
  solve->add_option("--algorithm", solve_args.algorithm)
      ->check(CLI::IsMember({"algsirtp", "euclid", "square-transfer"}))
      ->capture_default_str();
  solve->add_option("--emit", solve_args.emit,
                    "Write the verified pair as JSON ('-' for stdout)");
  solve->add_option("--svg", solve_args.svg,
                    "Write an SVG drawing ('-' for stdout)");
  solve->add_option("--scale", solve_args.scale, "Pixels per unit")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  solve->add_flag("--trace", solve_args.trace, "Print the recursion rounds");
  solve->add_flag("--reduce-gcd", solve_args.reduce_gcd,
                  "Build the geometry on (p/g, q/g), g = gcd(p, q)");

  std::string verify_path;
  std::string verify_mode;
  CLI::App* verify =
      app.add_subcommand("verify", "Check a pair document; exit 1 on failure.");
  verify->add_option("path", verify_path)->required();
  verify->add_option("--mode", verify_mode,
                     "Isomorphism mode; defaults to the document's")
      ->check(CLI::IsMember({"strict", "rotational"}));

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Exhaustive integer-grid minimum for small p * q.");
  oracle->add_option("p", oracle_args.p)->required()->check(
      CLI::PositiveNumber);
  oracle->add_option("q", oracle_args.q)->required()->check(
      CLI::PositiveNumber);
  oracle->add_option("--max-area", oracle_args.max_area,
                     "Largest p * q searched")
      ->check(CLI::Range(Int{1}, kMaxOracleArea))
      ->capture_default_str();
  oracle->add_option("--budget-ms", oracle_args.budget_ms,
                     "Wall-time budget, 0 for none")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  oracle->add_option("--emit", oracle_args.emit, "Write the oracle document");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Emit a CSV over a family.");
  bench->add_option("--family", bench_args.family)
      ->check(CLI::IsMember({"successor", "coprime", "ratio"}))
      ->capture_default_str();
  bench->add_option("--from", bench_args.from, "Smallest p")
      ->capture_default_str();
  bench->add_option("--to,--pmax", bench_args.to, "Largest p (or side)")
      ->capture_default_str();
  bench->add_option("--n", bench_args.n, "Instances for random families")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench->add_option("--seed", bench_args.seed)->capture_default_str();
  bench->add_option("--epsilon", bench_args.epsilon, "Ratio band width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--oracle-max-area", bench_args.oracle_max_area)
      ->check(CLI::Range(Int{0}, kMaxOracleArea))
      ->capture_default_str();
  bench->add_option("--oracle-budget-ms", bench_args.oracle_budget_ms)
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench->add_flag("--timings", bench_args.timings,
                  "Add wall-time columns (output is then not reproducible)");
  bench->add_option("--out", bench_args.out, "CSV path ('-' for stdout)")
      ->capture_default_str();

  std::string render_path;
  std::string render_svg = "-";
  int render_scale = 16;
  CLI::App* render = app.add_subcommand("render", "Draw a pair document.");
  render->add_option("path", render_path)->required();
  render->add_option("--svg", render_svg, "Output path ('-' for stdout)")
      ->capture_default_str();
  render->add_option("--scale", render_scale)
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();

  std::string ra, rb, rc, rd;
  CLI::App* reduce = app.add_subcommand(
      "reduce",
      "Reduce the strict transformation of a x b into c x d (a parallel to "
      "c) with rational sides to SIRTP(p, q). When the side ratio is "
      "irrational no finite solution exists, so only rationals are accepted.");
  reduce->add_option("a", ra, "Rational 'n' or 'n/d'")->required();
  reduce->add_option("b", rb)->required();
  reduce->add_option("c", rc)->required();
  reduce->add_option("d", rd)->required();

  Int ia = 0, ib = 0, ic = 0, id = 0;
  std::string irtp_rule = "greedy";
  std::string irtp_emit;
  CLI::App* irtp = app.add_subcommand(
      "irtp", "Euclidean transform of a x b into c x d, rotation allowed.");
  irtp->add_option("a", ia)->required()->check(CLI::PositiveNumber);
  irtp->add_option("b", ib)->required()->check(CLI::PositiveNumber);
  irtp->add_option("c", ic)->required()->check(CLI::PositiveNumber);
  irtp->add_option("d", id)->required()->check(CLI::PositiveNumber);
  irtp->add_option("--rule", irtp_rule)
      ->check(CLI::IsMember({"greedy", "align-long", "align-short"}))
      ->capture_default_str();
  irtp->add_option("--emit", irtp_emit, "Write the pair as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return Solve(solve_args, out);
    if (verify->parsed()) return Verify(verify_path, verify_mode, out);
    if (oracle->parsed()) return Oracle(oracle_args, out);
    if (bench->parsed()) return Bench(bench_args, out);
    if (render->parsed()) {
      return Render(render_path, render_svg, render_scale, out);
    }
    if (reduce->parsed()) return Reduce(ra, rb, rc, rd, out);
    if (irtp->parsed()) {
      return Irtp(ia, ib, ic, id, irtp_rule, irtp_emit, out);
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::logic_error& e) {
    // invalid_argument and domain errors derive from logic_error; anything
    // else of that family is a broken invariant.
    if (dynamic_cast<const std::invalid_argument*>(&e) ||
        dynamic_cast<const std::out_of_range*>(&e)) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::runtime_error& e) {
    // Usage, document, oracle budget and overflow errors.
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  std::vector<const char*> argv = {"sirtp"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sirtp
