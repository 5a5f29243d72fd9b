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

#include "choremarket/graphs.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace choremarket {

std::string TwoAgentGraph::Label() const {
  return (kind == PairGraphKind::kSplit ? "split(" : "cut(") +
         std::to_string(k) + ")";
}

std::vector<TwoAgentGraph> TwoAgentMww(const Matrix<Rational>& pair_values) {
  if (pair_values.rows() != 2) {
    throw std::invalid_argument("two-agent MWW needs exactly two rows");
  }
  const int m = pair_values.cols();
  std::vector<Rational> ratio(m);
  for (int j = 0; j < m; ++j) {
    ratio[j] = pair_values(0, j) / pair_values(1, j);  // = |v0j| / |v1j|
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return ratio[x] < ratio[y]; });

  auto split = [&](int k) {
    TwoAgentGraph g{PairGraphKind::kSplit, k, ConsumptionGraph(2, m)};
    for (int pos = 0; pos < m; ++pos) g.edges.SetEdge(pos < k ? 0 : 1, order[pos]);
    return g;
  };
  auto cut = [&](int k) {
    const Rational& pivot = ratio[order[k - 1]];
    TwoAgentGraph g{PairGraphKind::kCut, k, ConsumptionGraph(2, m)};
    for (int j = 0; j < m; ++j) {
      const int c = cmp(ratio[j], pivot);
      if (c <= 0) g.edges.SetEdge(0, j);
      if (c >= 0) g.edges.SetEdge(1, j);
    }
    return g;
  };

  std::vector<TwoAgentGraph> out;
  for (int k = 0; k <= m; ++k) {
    if (k == 0 || k == m || ratio[order[k - 1]] < ratio[order[k]]) {
      out.push_back(split(k));
    }
    // Cuts at equal ratios coincide; keep the first of each ratio class.
    if (k < m && (k == 0 || ratio[order[k - 1]] != ratio[order[k]])) {
      out.push_back(cut(k + 1));
    }
  }
  return out;
}

ConsumptionGraph MwwGraphForWeights(const Matrix<Rational>& values,
                                    const WeightVector& tau) {
  const int n = values.rows();
  const int m = values.cols();
  if (static_cast<int>(tau.size()) != n) {
    throw std::invalid_argument("weight vector length mismatch");
  }
  for (const auto& t : tau) {
    if (sgn(t) <= 0) throw std::invalid_argument("weights must be positive");
  }
  ConsumptionGraph g(n, m);
  std::vector<Rational> weighted(n);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) weighted[i] = -tau[i] * values(i, j);
    const Rational& least = *std::min_element(weighted.begin(), weighted.end());
    for (int i = 0; i < n; ++i) g.SetEdge(i, j, weighted[i] == least);
  }
  return g;
}

ConsumptionGraph MwwGraphForWeights(const Instance& inst,
                                    const WeightVector& tau) {
  return MwwGraphForWeights(inst.values(), tau);
}

bool KeepGraph(const ConsumptionGraph& graph) {
  for (int i = 0; i < graph.agents(); ++i) {
    if (graph.AgentDegree(i) == 0) return false;
  }
  for (int j = 0; j < graph.chores(); ++j) {
    if (graph.ChoreDegree(j) == 0) return false;
  }
  return true;
}

bool KeepGraph(const Instance& inst, const ConsumptionGraph& graph,
               bool drop_inefficient) {
  if (!KeepGraph(graph)) return false;
  return !(drop_inefficient && HasProfitableCycle(inst, graph));
}

std::string ToString(EnumerationMode mode) {
  switch (mode) {
    case EnumerationMode::kDirect:
      return "direct";
    case EnumerationMode::kDual:
      return "dual";
    case EnumerationMode::kAuto:
      return "auto";
  }
  return "unknown";
}

EnumerationMode ParseEnumerationMode(const std::string& text) {
  if (text == "direct") return EnumerationMode::kDirect;
  if (text == "dual") return EnumerationMode::kDual;
  if (text == "auto") return EnumerationMode::kAuto;
  throw std::invalid_argument("unknown mode '" + text +
                              "' (expected direct, dual or auto)");
}

mpz_class DirectFamilyBound(int agents, int chores) {
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 2ul * chores + 1,
                static_cast<unsigned long>(agents) * (agents - 1) / 2);
  return bound;
}

mpz_class DualFamilyBound(int agents, int chores) {
  return DirectFamilyBound(chores, agents);
}

EnumerationMode ResolveMode(EnumerationMode mode, int agents, int chores) {
  if (mode != EnumerationMode::kAuto) return mode;
  return DualFamilyBound(agents, chores) < DirectFamilyBound(agents, chores)
             ? EnumerationMode::kDual
             : EnumerationMode::kDirect;
}

namespace internal {

WeightSystem::WeightSystem(int size)
    : size_(size), bounds_(static_cast<std::size_t>(size) * size) {
  for (int x = 0; x < size; ++x) at(x, x) = Bound{true, Rational(1), false};
}

bool WeightSystem::Add(int from, int to, const Rational& w, bool strict) {
  const Bound& back = at(to, from);
  if (back.finite) {
    Rational cycle = w * back.w;
    if (cycle < 1 || (cycle == 1 && (strict || back.strict))) return false;
  }
  // Snapshot the columns/rows through the new arc before updating in place.
  std::vector<Bound> into(size_), out_of(size_);
  for (int x = 0; x < size_; ++x) into[x] = at(x, from);
  for (int y = 0; y < size_; ++y) out_of[y] = at(to, y);
  Rational candidate;
  for (int x = 0; x < size_; ++x) {
    if (!into[x].finite) continue;
    for (int y = 0; y < size_; ++y) {
      if (!out_of[y].finite) continue;
      candidate = into[x].w * w * out_of[y].w;
      const bool cand_strict = into[x].strict || strict || out_of[y].strict;
      Bound& cur = at(x, y);
      if (!cur.finite || candidate < cur.w ||
          (candidate == cur.w && cand_strict && !cur.strict)) {
        cur.finite = true;
        cur.w = candidate;
        cur.strict = cand_strict;
      }
    }
  }
  return true;
}

}  // namespace internal

namespace {

std::vector<std::uint64_t> RowMask(const ConsumptionGraph& g, int row,
                                   int words) {
  std::vector<std::uint64_t> mask(words, 0);
  for (int j = 0; j < g.chores(); ++j) {
    if (g.HasEdge(row, j)) mask[j / 64] |= std::uint64_t{1} << (j % 64);
  }
  return mask;
}

}  // namespace

RichFamily::RichFamily(const Matrix<Rational>& values, EnumerationMode mode,
                       EnumerationOptions options)
    : mode_(ResolveMode(mode, values.rows(), values.cols())),
      options_(options) {
  const Matrix<Rational> work =
      mode_ == EnumerationMode::kDual ? values.Transposed() : values;
  agents_ = work.rows();
  chores_ = work.cols();
  words_ = (chores_ + 63) / 64;
  for (int a = 0; a < agents_; ++a) {
    for (int b = a + 1; b < agents_; ++b) {
      Pair pair;
      pair.a = a;
      pair.b = b;
      Matrix<Rational> rows(2, chores_);
      for (int j = 0; j < chores_; ++j) {
        rows(0, j) = work(a, j);
        rows(1, j) = work(b, j);
      }
      pair.graphs = TwoAgentMww(rows);

      // Sorted ratios |v_aj| / |v_bj| locate each graph's interval for
      // x = tau_b / tau_a: a split(k) needs r_k < x < r_{k+1}, a cut needs
      // x equal to its ratio.
      std::vector<Rational> ratio(chores_);
      for (int j = 0; j < chores_; ++j) ratio[j] = rows(0, j) / rows(1, j);
      std::vector<Rational> sorted = ratio;
      std::sort(sorted.begin(), sorted.end());
      for (const auto& g : pair.graphs) {
        pair.mask_a.push_back(RowMask(g.edges, 0, words_));
        pair.mask_b.push_back(RowMask(g.edges, 1, words_));
        Pair::Interval iv{};
        if (g.kind == PairGraphKind::kCut) {
          iv.lower = iv.upper = sorted[g.k - 1];
          iv.has_lower = iv.has_upper = true;
          iv.strict = false;
        } else {
          iv.has_lower = g.k > 0;
          iv.has_upper = g.k < chores_;
          if (iv.has_lower) iv.lower = sorted[g.k - 1];
          if (iv.has_upper) iv.upper = sorted[g.k];
          iv.strict = true;
        }
        pair.intervals.push_back(std::move(iv));
      }
      pairs_.push_back(std::move(pair));
    }
  }
}

int RichFamily::first_level_size() const {
  return pairs_.empty() ? 1 : static_cast<int>(pairs_.front().graphs.size());
}

const std::vector<TwoAgentGraph>& RichFamily::pair_graphs(int pair) const {
  return pairs_.at(pair).graphs;
}

mpz_class RichFamily::combination_count() const {
  mpz_class count = 1;
  for (const auto& p : pairs_) count *= static_cast<unsigned long>(p.graphs.size());
  return count;
}

RichFamily::Stream RichFamily::Enumerate() const {
  return Stream(this, 0, first_level_size());
}

RichFamily::Stream RichFamily::Enumerate(int first_begin, int first_end) const {
  return Stream(this, std::max(0, first_begin),
                std::min(first_end, first_level_size()));
}

RichFamily::Stream::Stream(const RichFamily* family, int first_begin,
                           int first_end)
    : family_(family), first_begin_(first_begin), first_end_(first_end) {
  const int levels = family_->pair_count();
  digits_.assign(levels, -1);
  masks_.assign(levels + 1,
                std::vector<std::uint64_t>(
                    static_cast<std::size_t>(family_->agents_) * family_->words_, 0));
  // Level 0 holds the full graph (padding bits cleared).
  auto& full = masks_[0];
  for (int i = 0; i < family_->agents_; ++i) {
    for (int j = 0; j < family_->chores_; ++j) {
      full[static_cast<std::size_t>(i) * family_->words_ + j / 64] |=
          std::uint64_t{1} << (j % 64);
    }
  }
  if (family_->options_.realizable_only) {
    systems_.assign(levels + 1, internal::WeightSystem(family_->agents_));
  }
  if (first_begin_ >= first_end_) done_ = true;
}

bool RichFamily::Stream::ApplyLevel(int level) {
  const Pair& pair = family_->pairs_[level];
  const int choice = digits_[level];
  const int words = family_->words_;
  auto& mask = masks_[level + 1];
  mask = masks_[level];
  for (int w = 0; w < words; ++w) {
    mask[static_cast<std::size_t>(pair.a) * words + w] &= pair.mask_a[choice][w];
    mask[static_cast<std::size_t>(pair.b) * words + w] &= pair.mask_b[choice][w];
  }
  if (family_->options_.skip_isolated_rows) {
    // Rows only lose bits at deeper levels, so an empty row stays empty.
    for (int row : {pair.a, pair.b}) {
      bool empty = true;
      for (int w = 0; w < words && empty; ++w) {
        empty = mask[static_cast<std::size_t>(row) * words + w] == 0;
      }
      if (empty) return false;
    }
  }
  if (!family_->options_.realizable_only) return true;

  systems_[level + 1] = systems_[level];
  auto& system = systems_[level + 1];
  const auto& iv = pair.intervals[choice];
  // tau_b <= upper * tau_a and tau_a <= tau_b / lower.
  if (iv.has_upper && !system.Add(pair.a, pair.b, iv.upper, iv.strict)) {
    return false;
  }
  if (iv.has_lower &&
      !system.Add(pair.b, pair.a, Rational(1) / iv.lower, iv.strict)) {
    return false;
  }
  return true;
}

bool RichFamily::Stream::Advance() {
  const int levels = family_->pair_count();
  if (done_) return false;
  if (levels == 0) {
    if (started_) {
      done_ = true;
      return false;
    }
    started_ = true;
    return true;
  }
  if (!started_) {
    started_ = true;
    level_ = 0;
    digits_[0] = first_begin_ - 1;
  }
  while (true) {
    const int limit = level_ == 0
                          ? first_end_
                          : static_cast<int>(family_->pairs_[level_].graphs.size());
    if (++digits_[level_] >= limit) {
      if (level_ == 0) {
        done_ = true;
        return false;
      }
      digits_[level_] = -1;
      --level_;
      continue;
    }
    if (!ApplyLevel(level_)) continue;
    if (level_ == levels - 1) return true;
    ++level_;
    digits_[level_] = -1;
  }
}

bool RichFamily::Stream::Next(ConsumptionGraph& out) {
  const int n = family_->agents_;
  const int m = family_->chores_;
  const int words = family_->words_;
  const bool dual = family_->mode_ == EnumerationMode::kDual;
  while (Advance()) {
    ++enumerated_;
    const auto& mask = masks_[family_->pair_count()];
    ConsumptionGraph g(dual ? m : n, dual ? n : m);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        if ((mask[static_cast<std::size_t>(i) * words + j / 64] >> (j % 64)) & 1) {
          if (dual) {
            g.SetEdge(j, i);
          } else {
            g.SetEdge(i, j);
          }
        }
      }
    }
    // The duality holds between graphs in which nobody is isolated.
    if (dual && !KeepGraph(g)) continue;
    out = std::move(g);
    return true;
  }
  return false;
}

RichFamily EnumerateRichFamily(const Instance& inst,
                               EnumerationOptions options) {
  return RichFamily(inst.values(), EnumerationMode::kDirect, options);
}

RichFamily EnumerateRichFamilyDual(const Instance& inst,
                                   EnumerationOptions options) {
  return RichFamily(inst.values(), EnumerationMode::kDual, options);
}

std::vector<ConsumptionGraph> CollectGraphs(const RichFamily& family) {
  std::vector<ConsumptionGraph> graphs;
  auto stream = family.Enumerate();
  ConsumptionGraph g;
  while (stream.Next(g)) graphs.push_back(g);
  return graphs;
}

}  // namespace choremarket
