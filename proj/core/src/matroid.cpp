// Copyright 2026 The Authors.
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

#include "matred/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matred/errors.hpp"
#include "matred/set_family.hpp"
#include "matred/subset.hpp"

namespace matred {

namespace {

void require_universe(int n) {
  if (n < 0 || n > kMaxUniverse) {
    throw UniverseTooLarge(n, kMaxUniverse);
  }
}

/// Number of GF(2)-independent columns among those selected by x, by
/// Gaussian elimination with one stored pivot per leading bit.
int gf2_rank(const Gf2Rep& rep, Subset x) {
  std::uint64_t pivot[64] = {};
  int count = 0;
  for (ElementId e : x) {
    std::uint64_t v = rep.columns[e];
    while (v != 0) {
      const int lead = std::bit_width(v) - 1;
      if (pivot[lead] == 0) {
        pivot[lead] = v;
        ++count;
        break;
      }
      v ^= pivot[lead];
    }
  }
  return count;
}

/// Union-find over the vertices touched by the chosen edges; the rank of
/// an edge set is the number of merges performed (|X| minus cycles).
class VertexForest {
 public:
  explicit VertexForest(int vertices) : parent_(vertices) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// False when both endpoints were already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

int graphic_rank(const GraphicRep& rep, Subset x) {
  VertexForest forest(rep.vertices);
  int merges = 0;
  for (ElementId e : x) {
    const auto& [a, b] = rep.edges[e];
    if (forest.unite(a, b)) ++merges;
  }
  return merges;
}

bool graphic_independent(const GraphicRep& rep, Subset x) {
  VertexForest forest(rep.vertices);
  for (ElementId e : x) {
    const auto& [a, b] = rep.edges[e];
    if (!forest.unite(a, b)) return false;
  }
  return true;
}

int partition_rank(const PartitionRep& rep, Subset x) {
  int total = 0;
  for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
    total += std::min((x & rep.blocks[i]).size(), rep.capacities[i]);
  }
  return total;
}

bool partition_independent(const PartitionRep& rep, Subset x) {
  for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
    if ((x & rep.blocks[i]).size() > rep.capacities[i]) return false;
  }
  return true;
}

/// First independence-axiom violation in canonical order, if any.
void validate_independence_axioms(int n, const SetFamily& family) {
  if (!family.contains(Subset())) {
    throw AxiomViolation(IndependenceAxiom::kI1,
                         "the empty set is not in the family");
  }
  for (Subset x : family) {
    for (ElementId e : x) {
      Subset smaller = x.without(e);
      if (!family.contains(smaller)) {
        throw AxiomViolation(IndependenceAxiom::kI2,
                             format_subset(x) + " is in the family but its subset " +
                                 format_subset(smaller) + " is not");
      }
    }
  }
  for (Subset a : family) {
    for (Subset b : family) {
      if (a.size() >= b.size()) continue;
      bool extended = false;
      for (ElementId e : b - a) {
        if (family.contains(a.with(e))) {
          extended = true;
          break;
        }
      }
      if (!extended) {
        throw AxiomViolation(IndependenceAxiom::kI3,
                             "no element of " + format_subset(b) + " extends " +
                                 format_subset(a));
      }
    }
  }
  (void)n;
}

}  // namespace

Matroid::Matroid(int universe_size, Subset ground, MatroidRep rep)
    : universe_size_(universe_size),
      ground_(ground),
      full_rank_(0),
      rep_(std::move(rep)) {
  full_rank_ = rank(ground_);
}

Matroid Matroid::from_family(int universe_size, SetFamily independent) {
  require_universe(universe_size);
  if (independent.universe_size() != universe_size) {
    throw InvalidMatroid("independence family declared over universe of size " +
                         std::to_string(independent.universe_size()) +
                         ", expected " + std::to_string(universe_size));
  }
  validate_independence_axioms(universe_size, independent);
  return Matroid(universe_size, Subset::full(universe_size),
                 ExplicitRep{std::move(independent)});
}

Matroid Matroid::uniform(int universe_size, int k) {
  require_universe(universe_size);
  if (k < 0) {
    throw InvalidMatroid("uniform rank bound must be nonnegative, got " +
                         std::to_string(k));
  }
  return Matroid(universe_size, Subset::full(universe_size), UniformRep{k});
}

Matroid Matroid::gf2(int universe_size,
                     const std::vector<std::uint32_t>& rows) {
  require_universe(universe_size);
  if (rows.size() > 64) {
    throw InvalidMatroid("a binary matrix may have at most 64 rows, got " +
                         std::to_string(rows.size()));
  }
  const std::uint32_t full = Subset::full(universe_size).bits();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((rows[i] & ~full) != 0) {
      throw InvalidMatroid("matrix row " + std::to_string(i + 1) +
                           " is wider than the universe");
    }
  }
  std::vector<std::uint64_t> columns(universe_size, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < universe_size; ++j) {
      if ((rows[i] >> j) & 1u) {
        columns[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return Matroid(universe_size, Subset::full(universe_size),
                 Gf2Rep{static_cast<int>(rows.size()), std::move(columns)});
}

Matroid Matroid::graphic(int vertices,
                         std::vector<std::pair<int, int>> edges) {
  const int n = static_cast<int>(edges.size());
  require_universe(n);
  if (vertices < 0) {
    throw InvalidMatroid("vertex count must be nonnegative");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& [a, b] = edges[i];
    if (a < 0 || a >= vertices || b < 0 || b >= vertices) {
      throw InvalidMatroid("edge " + std::to_string(i + 1) +
                           " references a vertex outside 1.." +
                           std::to_string(vertices));
    }
  }
  return Matroid(n, Subset::full(n), GraphicRep{vertices, std::move(edges)});
}

Matroid Matroid::partition(int universe_size, std::vector<Subset> blocks,
                           std::vector<int> capacities) {
  require_universe(universe_size);
  if (blocks.size() != capacities.size()) {
    throw InvalidMatroid("got " + std::to_string(blocks.size()) +
                         " blocks but " + std::to_string(capacities.size()) +
                         " capacities");
  }
  Subset seen;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) {
      throw InvalidMatroid("block " + std::to_string(i + 1) + " is empty");
    }
    if (!blocks[i].subset_of(Subset::full(universe_size))) {
      throw InvalidMatroid("block " + std::to_string(i + 1) +
                           " lies outside the universe");
    }
    if (seen.intersects(blocks[i])) {
      throw InvalidMatroid("block " + format_subset(blocks[i]) +
                           " overlaps an earlier block");
    }
    if (capacities[i] < 0) {
      throw InvalidMatroid("capacity of block " + std::to_string(i + 1) +
                           " must be nonnegative");
    }
    seen = seen | blocks[i];
  }
  if (seen != Subset::full(universe_size)) {
    throw InvalidMatroid("blocks do not cover the universe; missing " +
                         format_subset(Subset::full(universe_size) - seen));
  }
  // Sort blocks canonically (capacities follow) so rendering is stable.
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(blocks[a], blocks[b]);
  });
  std::vector<Subset> sorted_blocks;
  std::vector<int> sorted_caps;
  sorted_blocks.reserve(blocks.size());
  sorted_caps.reserve(blocks.size());
  for (std::size_t i : order) {
    sorted_blocks.push_back(blocks[i]);
    sorted_caps.push_back(capacities[i]);
  }
  return Matroid(
      universe_size, Subset::full(universe_size),
      PartitionRep{std::move(sorted_blocks), std::move(sorted_caps)});
}

void Matroid::require_in_ground(Subset x) const {
  if (!x.subset_of(ground_)) {
    throw std::invalid_argument("subset " + format_subset(x) +
                                " lies outside the ground set " +
                                format_subset(ground_));
  }
}

bool Matroid::is_independent(Subset x) const {
  require_in_ground(x);
  if (const auto* e = std::get_if<ExplicitRep>(&rep_)) {
    return e->independent.contains(x);
  }
  if (const auto* u = std::get_if<UniformRep>(&rep_)) {
    return x.size() <= u->k;
  }
  if (const auto* g = std::get_if<Gf2Rep>(&rep_)) {
    return gf2_rank(*g, x) == x.size();
  }
  if (const auto* gr = std::get_if<GraphicRep>(&rep_)) {
    return graphic_independent(*gr, x);
  }
  return partition_independent(std::get<PartitionRep>(rep_), x);
}

int Matroid::rank(Subset x) const {
  require_in_ground(x);
  if (const auto* e = std::get_if<ExplicitRep>(&rep_)) {
    // The family is downward closed, so every independent subset of x is
    // itself a member; the largest one is the rank.
    int best = 0;
    for (Subset i : e->independent.members()) {
      if (i.subset_of(x) && i.size() > best) best = i.size();
    }
    return best;
  }
  if (const auto* u = std::get_if<UniformRep>(&rep_)) {
    return std::min(x.size(), u->k);
  }
  if (const auto* g = std::get_if<Gf2Rep>(&rep_)) {
    return gf2_rank(*g, x);
  }
  if (const auto* gr = std::get_if<GraphicRep>(&rep_)) {
    return graphic_rank(*gr, x);
  }
  return partition_rank(std::get<PartitionRep>(rep_), x);
}

Subset Matroid::closure(Subset x) const {
  require_in_ground(x);
  const int r = rank(x);
  Subset result;
  for (ElementId e : ground_) {
    if (x.contains(e) || rank(x.with(e)) == r) {
      result = result.with(e);
    }
  }
  return result;
}

SetFamily Matroid::bases() const {
  std::vector<ElementId> elements;
  for (ElementId e : ground_) elements.push_back(e);
  const int m = static_cast<int>(elements.size());
  const int k = full_rank_;
  std::vector<Subset> found;
  // k-combinations of the ground elements via Gosper's hack on compact
  // index masks, scattered back to original element positions.
  std::uint32_t mask = k == 0 ? 0 : (std::uint32_t{1} << k) - 1;
  const std::uint32_t limit = std::uint32_t{1} << m;
  while (true) {
    Subset candidate;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      candidate = candidate.with(elements[std::countr_zero(rest)]);
    }
    if (is_independent(candidate)) found.push_back(candidate);
    if (mask == 0) break;
    const std::uint32_t c = mask & (~mask + 1);
    const std::uint32_t r = mask + c;
    mask = r | (((mask ^ r) >> 2) / c);
    if (mask >= limit) break;
  }
  return SetFamily(universe_size_, std::move(found));
}

Matroid Matroid::restrict(Subset x) const {
  require_in_ground(x);
  return Matroid(universe_size_, x, rep_);
}

bool Matroid::independent_via_closure(Subset x) const {
  require_in_ground(x);
  for (ElementId e : x) {
    if (closure(x.without(e)).contains(e)) return false;
  }
  return true;
}

GreedyResult greedy_max_weight_base(const Matroid& m,
                                    std::span<const double> weights) {
  if (static_cast<int>(weights.size()) != m.universe_size()) {
    throw WeightArityMismatch(weights.size(), m.universe_size());
  }
  std::vector<ElementId> order;
  for (ElementId e : m.ground()) order.push_back(e);
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return weights[a] > weights[b];
  });
  Subset base;
  for (ElementId e : order) {
    Subset candidate = base.with(e);
    if (m.is_independent(candidate)) base = candidate;
  }
  double total = 0;
  for (ElementId e : base) total += weights[e];
  return GreedyResult{base, total};
}

ClosureAxiomsReport validate_closure_axioms(
    int n, const std::function<Subset(Subset)>& cl) {
  if (n < 0 || n > kClosureAxiomsCap) {
    throw UniverseTooLarge(n, kClosureAxiomsCap);
  }
  const Subset full = Subset::full(n);
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<std::uint32_t> table(count);
  for (std::uint32_t m = 0; m < count; ++m) {
    Subset out = cl(Subset::of_bits(m));
    if (!out.subset_of(full)) {
      throw std::invalid_argument("closure of " +
                                  format_subset(Subset::of_bits(m)) +
                                  " lies outside the universe");
    }
    table[m] = out.bits();
  }
  auto clo = [&](Subset s) { return Subset::of_bits(table[s.bits()]); };

  for (Subset x : power_set(n)) {
    if (!x.subset_of(clo(x))) {
      return {false, "CL1",
              "X=" + format_subset(x) + ", cl(X)=" + format_subset(clo(x))};
    }
  }
  for (Subset x : power_set(n)) {
    // Monotonicity: supersets of x are exactly x | t for t ⊆ U − x.
    bool bad = false;
    Subset bad_y;
    for_each_submask(full - x, [&](Subset t) {
      if (bad) return;
      Subset y = x | t;
      if (!clo(x).subset_of(clo(y))) {
        bad = true;
        bad_y = y;
      }
    });
    if (bad) {
      return {false, "CL2",
              "X=" + format_subset(x) + ", Y=" + format_subset(bad_y) +
                  ", cl(X)=" + format_subset(clo(x)) +
                  ", cl(Y)=" + format_subset(clo(bad_y))};
    }
  }
  for (Subset x : power_set(n)) {
    if (clo(clo(x)) != clo(x)) {
      return {false, "CL3",
              "X=" + format_subset(x) + ", cl(X)=" + format_subset(clo(x)) +
                  ", cl(cl(X))=" + format_subset(clo(clo(x)))};
    }
  }
  for (Subset x : power_set(n)) {
    for (ElementId xe = 0; xe < n; ++xe) {
      if (x.contains(xe)) continue;
      Subset with_x = clo(x.with(xe));
      Subset gained = with_x - clo(x);
      for (ElementId ye : gained) {
        if (!clo(x.with(ye)).contains(xe)) {
          return {false, "CL4",
                  "X=" + format_subset(x) + ", x=" + std::to_string(xe + 1) +
                      ", y=" + std::to_string(ye + 1)};
        }
      }
    }
  }
  return {true, "", ""};
}

std::vector<std::uint32_t> closure_table(const Matroid& m) {
  const int n = m.universe_size();
  if (n > kEnumerationCap) {
    throw UniverseTooLarge(n, kEnumerationCap);
  }
  std::vector<std::uint32_t> table(std::uint32_t{1} << n, 0);
  for_each_submask(m.ground(), [&](Subset x) {
    table[x.bits()] = m.closure(x).bits();
  });
  return table;
}

}  // namespace matred
