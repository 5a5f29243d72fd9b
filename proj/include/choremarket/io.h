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

#ifndef CHOREMARKET_IO_H_
#define CHOREMARKET_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "choremarket/core.h"
#include "choremarket/rounding.h"
#include "choremarket/solver.h"

namespace choremarket {

// Malformed JSON or a document of the wrong shape.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// {"values": [[...], ...], "budgets": [...]} where every entry is a JSON
// number or a "p/q" string. Numbers are read from their literal text, so
// -0.5 becomes exactly -1/2.
RawInstance ParseInstanceJson(const std::string& text);
std::string InstanceToJson(const RawInstance& raw);

struct OutcomeRecord {
  UtilityProfile u;
  Allocation z;
  PriceVector p;
  bool operator==(const OutcomeRecord&) const = default;
};

struct SolutionMeta {
  std::uint64_t graphs_enumerated = 0;
  std::string mode;
  std::optional<bool> degenerate;  // null when not determined
  SolveStats stats;
  std::vector<Preassignment> preassigned;
  bool operator==(const SolutionMeta&) const = default;
};

// What `solve` writes. Outcomes cover the original chores: zero-valued
// chores appear with their preassigned owner and price 0.
struct SolutionDocument {
  std::vector<UtilityProfile> profiles;
  std::vector<OutcomeRecord> outcomes;
  SolutionMeta meta;
  // Present only when unique allocations were requested and exist.
  std::optional<std::vector<Allocation>> allocations;
  std::optional<std::string> refusal;
  bool operator==(const SolutionDocument&) const = default;
};

// Re-inserts preassigned chores into an allocation or price vector of the
// residual instance.
Allocation ExpandAllocation(const PreparedInstance& prepared,
                            const Allocation& z);
PriceVector ExpandPrices(const PreparedInstance& prepared,
                         const PriceVector& p);

SolutionDocument MakeSolutionDocument(const PreparedInstance& prepared,
                                      const SolutionSet& solution);

// Deterministic field order; rationals as strings, indices 1-based.
std::string SolutionToJson(const SolutionDocument& doc);
SolutionDocument ParseSolutionJson(const std::string& text);

// Rounding report for the original chores.
std::string RoundingToJson(const PreparedInstance& prepared,
                           const RationalVector& weights,
                           const FairRounding& rounding);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace choremarket

#endif  // CHOREMARKET_IO_H_
