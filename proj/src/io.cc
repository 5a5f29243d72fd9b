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

#include "choremarket/io.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace choremarket {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Builds the usual DOM but keeps floating-point literals as their source
// text, so they can be converted to rationals without rounding.
class ExactNumberParser : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using json_sax_dom_parser::json_sax_dom_parser;
  bool number_float(number_float_t /*value*/, const string_t& literal) {
    string_t copy = literal;
    return json_sax_dom_parser::string(copy);
  }
};

Json ParseExact(const std::string& text) {
  Json root;
  ExactNumberParser parser(root);
  try {
    Json::sax_parse(text, &parser);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  return root;
}

Rational RationalFromJson(const Json& value, const std::string& where) {
  try {
    if (value.is_string()) return ParseRational(value.get<std::string>());
    if (value.is_number_integer()) return ParseRational(value.dump());
  } catch (const std::invalid_argument& e) {
    throw FormatError(where + ": " + e.what());
  }
  throw FormatError(where + ": expected a number or a \"p/q\" string");
}

const Json& Member(const Json& object, const char* key) {
  if (!object.is_object()) throw FormatError("expected a JSON object");
  auto it = object.find(key);
  if (it == object.end()) {
    throw FormatError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

const Json& ArrayOf(const Json& value, const std::string& where) {
  if (!value.is_array()) throw FormatError(where + ": expected an array");
  return value;
}

RationalVector VectorFromJson(const Json& value, const std::string& where) {
  RationalVector out;
  for (const auto& entry : ArrayOf(value, where)) {
    out.push_back(RationalFromJson(entry, where));
  }
  return out;
}

Allocation MatrixFromJson(const Json& value, const std::string& where) {
  const Json& rows = ArrayOf(value, where);
  if (rows.empty()) return Allocation();
  std::vector<RationalVector> parsed;
  for (const auto& row : rows) parsed.push_back(VectorFromJson(row, where));
  const int cols = static_cast<int>(parsed.front().size());
  Allocation out(static_cast<int>(parsed.size()), cols);
  for (int r = 0; r < out.rows(); ++r) {
    if (static_cast<int>(parsed[r].size()) != cols) {
      throw FormatError(where + ": ragged matrix");
    }
    for (int c = 0; c < cols; ++c) out(r, c) = parsed[r][c];
  }
  return out;
}

OrderedJson ToJson(const RationalVector& values) {
  OrderedJson out = OrderedJson::array();
  for (const auto& value : values) out.push_back(ToString(value));
  return out;
}

OrderedJson ToJson(const Matrix<Rational>& matrix) {
  OrderedJson out = OrderedJson::array();
  for (int r = 0; r < matrix.rows(); ++r) {
    OrderedJson row = OrderedJson::array();
    for (int c = 0; c < matrix.cols(); ++c) row.push_back(ToString(matrix(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

OrderedJson StatsToJson(const SolveStats& stats) {
  return OrderedJson{
      {"graphs_enumerated", stats.graphs_enumerated},
      {"graphs_pruned", stats.graphs_pruned},
      {"rejected_nonnegative", stats.rejected_nonnegative},
      {"rejected_sum_mismatch", stats.rejected_sum_mismatch},
      {"rejected_flow_deficit", stats.rejected_flow_deficit},
      {"certified", stats.certified},
      {"duplicate_candidates", stats.duplicate_candidates},
  };
}

std::uint64_t Count(const Json& object, const char* key) {
  const Json& value = Member(object, key);
  if (!value.is_number_unsigned() && !value.is_number_integer()) {
    throw FormatError(std::string(key) + ": expected a count");
  }
  return value.get<std::uint64_t>();
}

SolveStats StatsFromJson(const Json& object) {
  SolveStats stats;
  stats.graphs_enumerated = Count(object, "graphs_enumerated");
  stats.graphs_pruned = Count(object, "graphs_pruned");
  stats.rejected_nonnegative = Count(object, "rejected_nonnegative");
  stats.rejected_sum_mismatch = Count(object, "rejected_sum_mismatch");
  stats.rejected_flow_deficit = Count(object, "rejected_flow_deficit");
  stats.certified = Count(object, "certified");
  stats.duplicate_candidates = Count(object, "duplicate_candidates");
  return stats;
}

}  // namespace

RawInstance ParseInstanceJson(const std::string& text) {
  const Json root = ParseExact(text);
  RawInstance raw;
  for (const auto& row : ArrayOf(Member(root, "values"), "values")) {
    raw.values.push_back(VectorFromJson(row, "values"));
  }
  raw.budgets = VectorFromJson(Member(root, "budgets"), "budgets");
  return raw;
}

std::string InstanceToJson(const RawInstance& raw) {
  OrderedJson values = OrderedJson::array();
  for (const auto& row : raw.values) values.push_back(ToJson(row));
  OrderedJson root{{"values", std::move(values)},
                   {"budgets", ToJson(raw.budgets)}};
  return root.dump(2) + "\n";
}

Allocation ExpandAllocation(const PreparedInstance& prepared,
                            const Allocation& z) {
  Allocation out(z.rows(), prepared.original_chores);
  for (int r = 0; r < z.rows(); ++r) {
    for (int c = 0; c < z.cols(); ++c) {
      out(r, prepared.residual_chores[c]) = z(r, c);
    }
  }
  for (const auto& pre : prepared.preassigned) out(pre.agent, pre.chore) = 1;
  return out;
}

PriceVector ExpandPrices(const PreparedInstance& prepared,
                         const PriceVector& p) {
  PriceVector out(prepared.original_chores);
  for (std::size_t c = 0; c < p.size(); ++c) {
    out[prepared.residual_chores[c]] = p[c];
  }
  return out;
}

SolutionDocument MakeSolutionDocument(const PreparedInstance& prepared,
                                      const SolutionSet& solution) {
  SolutionDocument doc;
  doc.profiles = solution.profiles;
  for (const auto& outcome : solution.outcomes) {
    doc.outcomes.push_back({outcome.u, ExpandAllocation(prepared, outcome.z),
                            ExpandPrices(prepared, outcome.p)});
  }
  doc.meta.graphs_enumerated = solution.stats.graphs_enumerated;
  doc.meta.mode = ToString(solution.mode);
  doc.meta.stats = solution.stats;
  doc.meta.preassigned = prepared.preassigned;
  return doc;
}

std::string SolutionToJson(const SolutionDocument& doc) {
  OrderedJson profiles = OrderedJson::array();
  for (const auto& profile : doc.profiles) profiles.push_back(ToJson(profile));
  OrderedJson outcomes = OrderedJson::array();
  for (const auto& outcome : doc.outcomes) {
    outcomes.push_back(OrderedJson{{"u", ToJson(outcome.u)},
                                   {"z", ToJson(outcome.z)},
                                   {"p", ToJson(outcome.p)}});
  }
  OrderedJson preassigned = OrderedJson::array();
  for (const auto& pre : doc.meta.preassigned) {
    preassigned.push_back(
        OrderedJson{{"chore", pre.chore + 1}, {"agent", pre.agent + 1}});
  }
  OrderedJson meta{{"graphs_enumerated", doc.meta.graphs_enumerated},
                   {"mode", doc.meta.mode}};
  meta["degenerate"] = doc.meta.degenerate.has_value()
                           ? OrderedJson(*doc.meta.degenerate)
                           : OrderedJson(nullptr);
  meta["stats"] = StatsToJson(doc.meta.stats);
  meta["preassigned"] = std::move(preassigned);

  OrderedJson root{{"profiles", std::move(profiles)},
                   {"outcomes", std::move(outcomes)},
                   {"meta", std::move(meta)}};
  if (doc.allocations) {
    OrderedJson allocations = OrderedJson::array();
    for (const auto& z : *doc.allocations) allocations.push_back(ToJson(z));
    root["allocations"] = std::move(allocations);
  }
  if (doc.refusal) root["refusal"] = *doc.refusal;
  return root.dump(2) + "\n";
}

SolutionDocument ParseSolutionJson(const std::string& text) {
  const Json root = ParseExact(text);
  SolutionDocument doc;
  for (const auto& profile : ArrayOf(Member(root, "profiles"), "profiles")) {
    doc.profiles.push_back(VectorFromJson(profile, "profiles"));
  }
  for (const auto& outcome : ArrayOf(Member(root, "outcomes"), "outcomes")) {
    doc.outcomes.push_back({VectorFromJson(Member(outcome, "u"), "u"),
                            MatrixFromJson(Member(outcome, "z"), "z"),
                            VectorFromJson(Member(outcome, "p"), "p")});
  }
  const Json& meta = Member(root, "meta");
  doc.meta.graphs_enumerated = Count(meta, "graphs_enumerated");
  const Json& mode = Member(meta, "mode");
  if (!mode.is_string()) throw FormatError("mode: expected a string");
  doc.meta.mode = mode.get<std::string>();
  const Json& degenerate = Member(meta, "degenerate");
  if (degenerate.is_boolean()) {
    doc.meta.degenerate = degenerate.get<bool>();
  } else if (!degenerate.is_null()) {
    throw FormatError("degenerate: expected a boolean or null");
  }
  doc.meta.stats = StatsFromJson(Member(meta, "stats"));
  for (const auto& pre : ArrayOf(Member(meta, "preassigned"), "preassigned")) {
    doc.meta.preassigned.push_back(
        {static_cast<int>(Count(pre, "chore")) - 1,
         static_cast<int>(Count(pre, "agent")) - 1});
  }
  if (root.contains("allocations")) {
    std::vector<Allocation> allocations;
    for (const auto& z : ArrayOf(root["allocations"], "allocations")) {
      allocations.push_back(MatrixFromJson(z, "allocations"));
    }
    doc.allocations = std::move(allocations);
  }
  if (root.contains("refusal")) {
    if (!root["refusal"].is_string()) throw FormatError("refusal: expected a string");
    doc.refusal = root["refusal"].get<std::string>();
  }
  return doc;
}

std::string RoundingToJson(const PreparedInstance& prepared,
                           const RationalVector& weights,
                           const FairRounding& rounding) {
  std::vector<int> owner(prepared.original_chores);
  for (std::size_t c = 0; c < rounding.allocation.owner.size(); ++c) {
    owner[prepared.residual_chores[c]] = rounding.allocation.owner[c];
  }
  for (const auto& pre : prepared.preassigned) owner[pre.chore] = pre.agent;
  OrderedJson owners = OrderedJson::array();
  for (int agent : owner) owners.push_back(agent + 1);

  OrderedJson root{
      {"owner", std::move(owners)},
      {"b_prime", ToJson(rounding.allocation.b_prime)},
      {"p", ToJson(ExpandPrices(prepared, rounding.p))},
      {"weights", ToJson(weights)},
      {"certificates", OrderedJson{{"ef11", rounding.ef11},
                                   {"prop1", rounding.prop1},
                                   {"budgets_close", rounding.budgets_close},
                                   {"pareto_optimal", rounding.pareto_optimal}}},
  };
  return root.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace choremarket
