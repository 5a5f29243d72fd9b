// Copyright 2026 The Choremarket Authors
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

#include "choremarket/cli.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "choremarket/graphs.h"
#include "choremarket/io.h"
#include "choremarket/oracle.h"
#include "choremarket/plot.h"
#include "choremarket/rounding.h"
#include "choremarket/solver.h"

namespace choremarket {
namespace {

struct Flags {
  std::string file;
  std::string out;
  std::string mode = "auto";
  bool all_allocations = false;
  bool oracle_check = false;
  std::string weights;
};

void Emit(const Flags& flags, const std::string& text, std::ostream& out) {
  if (flags.out.empty()) {
    out << text;
  } else {
    WriteFile(flags.out, text);
  }
}

PreparedInstance LoadInstance(const std::string& path) {
  return ValidateInstance(ParseInstanceJson(ReadFile(path)));
}

RationalVector ParseWeights(const std::string& text) {
  RationalVector weights;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    weights.push_back(ParseRational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return weights;
}

int Solve(const Flags& flags, std::ostream& out, std::ostream& err) {
  const PreparedInstance prepared = LoadInstance(flags.file);
  const Instance& inst = prepared.instance;
  SolveOptions options;
  options.mode = ParseEnumerationMode(flags.mode);
  options.threads = WorkerThreads();
  const SolutionSet solution = SolveAll(inst, options);
  SolutionDocument doc = MakeSolutionDocument(prepared, solution);

  if (flags.all_allocations) {
    const AllAllocationsResult all = AllAllocations(inst, solution);
    doc.meta.degenerate = all.degenerate;
    if (all.degenerate) {
      doc.refusal = all.explanation;
    } else {
      std::vector<Allocation> expanded;
      for (const auto& z : all.allocations) {
        expanded.push_back(ExpandAllocation(prepared, z));
      }
      doc.allocations = std::move(expanded);
    }
  } else {
    try {
      doc.meta.degenerate = IsDegenerate(inst);
    } catch (const CapExceeded&) {
      // Left undetermined; only --all-allocations insists on an answer.
    }
  }

  int code = kExitOk;
  if (flags.oracle_check) {
    const OracleReport report = BruteForceCu(inst);
    if (report.profiles != solution.profiles) {
      err << "oracle mismatch: solver found " << solution.profiles.size()
          << " profiles, brute force found " << report.profiles.size() << "\n";
      code = kExitOracleMismatch;
    }
  }
  Emit(flags, SolutionToJson(doc), out);
  return code;
}

int Round(const Flags& flags, std::ostream& out, std::ostream& err) {
  const PreparedInstance prepared = LoadInstance(flags.file);
  const Instance& inst = prepared.instance;
  RationalVector weights;
  if (flags.weights.empty()) {
    for (const auto& b : inst.budgets()) weights.push_back(-b);
  } else {
    weights = ParseWeights(flags.weights);
  }
  if (static_cast<int>(weights.size()) != inst.agents()) {
    throw InstanceError("expected " + std::to_string(inst.agents()) +
                        " weights, got " + std::to_string(weights.size()));
  }
  for (const auto& w : weights) {
    if (sgn(w) <= 0) throw InstanceError("weights must be strictly positive");
  }
  SolveOptions options = DefaultRoundingOptions();
  options.threads = WorkerThreads();
  const FairRounding rounding = RoundFair(inst, weights, options);
  Emit(flags, RoundingToJson(prepared, weights, rounding), out);
  if (!rounding.AllCertified()) {
    err << "rounding certificate failed\n";
    return kExitCertificateFailure;
  }
  return kExitOk;
}

int Plot(const Flags& flags, std::ostream& out, std::ostream&) {
  const PreparedInstance prepared = LoadInstance(flags.file);
  const Instance& inst = prepared.instance;
  if (inst.agents() != 2) {
    throw InstanceError("plot needs exactly 2 agents, got " +
                        std::to_string(inst.agents()));
  }
  SolveOptions options;
  options.threads = WorkerThreads();
  const SolutionSet solution = SolveAll(inst, options);
  Emit(flags, RenderUtilitySvg(inst, solution.profiles), out);
  return kExitOk;
}

}  // namespace

int WorkerThreads() {
  int threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("CHOREMARKET_THREADS")) {
    int value = 0;
    const char* end = cap + std::char_traits<char>::length(cap);
    auto [ptr, ec] = std::from_chars(cap, end, value);
    if (ec == std::errc() && ptr == end && value > 0) {
      threads = std::min(threads, value);
    }
  }
  return threads;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact competitive division of chores"};
  app.require_subcommand(1);
  Flags flags;

  auto* solve = app.add_subcommand("solve", "all competitive utility profiles");
  solve->add_option("file", flags.file, "instance JSON")->required();
  solve->add_option("--mode", flags.mode, "graph enumeration")
      ->check(CLI::IsMember({"direct", "dual", "auto"}));
  solve->add_flag("--all-allocations", flags.all_allocations,
                  "unique allocation per profile (non-degenerate only)");
  solve->add_flag("--oracle-check", flags.oracle_check,
                  "cross-check against brute force");
  solve->add_option("--out", flags.out, "output path");

  auto* round = app.add_subcommand("round", "fair indivisible allocation");
  round->add_option("file", flags.file, "instance JSON")->required();
  round->add_option("--weights", flags.weights,
                    "comma-separated positive weights (default -budgets)");
  round->add_option("--out", flags.out, "output path");

  auto* plot = app.add_subcommand("plot", "SVG of a two-agent utility set");
  plot->add_option("file", flags.file, "instance JSON")->required();
  plot->add_option("--out", flags.out, "output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    for (auto* sub : {solve, round, plot}) {
      if (sub->parsed()) {
        err << e.what() << "\n" << sub->help();
        return kExitInputError;
      }
    }
    err << e.what() << "\n" << app.help();
    return kExitInputError;
  }

  try {
    if (solve->parsed()) return Solve(flags, out, err);
    if (round->parsed()) return Round(flags, out, err);
    return Plot(flags, out, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NotParetoOptimal& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCertificateFailure;
  } catch (const NotRealizable& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCertificateFailure;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace choremarket
