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

#ifndef MATRED_MATROID_HPP_
#define MATRED_MATROID_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matred/set_family.hpp"
#include "matred/subset.hpp"

namespace matred {

/// Cap for operations that enumerate all subsets of the universe
/// (flat enumeration, closure tables, consistent-set listings).
inline constexpr int kEnumerationCap = 20;

/// Cap for the closure-axiom validator, whose exchange check scans
/// subsets times pairs of elements.
inline constexpr int kClosureAxiomsCap = 12;

/// Independence given by an explicit, downward-closed family.
struct ExplicitRep {
  SetFamily independent;
};

/// Independence is |X| <= k.
struct UniformRep {
  int k;
};

/// Columns of a binary matrix; a subset is independent when its columns
/// are linearly independent over the two-element field.
struct Gf2Rep {
  int rows;
  std::vector<std::uint64_t> columns;  // columns[j] bit i = entry (i, j)
};

/// Edges of a graph; a subset is independent when it is acyclic.
struct GraphicRep {
  int vertices;
  std::vector<std::pair<int, int>> edges;  // edge i is ElementId i
};

/// Disjoint blocks covering the universe with per-block capacities.
struct PartitionRep {
  std::vector<Subset> blocks;
  std::vector<int> capacities;
};

using MatroidRep =
    std::variant<ExplicitRep, UniformRep, Gf2Rep, GraphicRep, PartitionRep>;

/// A matroid over a ground set of at most kMaxUniverse elements.
///
/// Values are immutable after construction, so concurrent reads need no
/// coordination. A matroid obtained through restrict() keeps the original
/// element identities and carries the sub-ground-set as a mask.
class Matroid {
 public:
  /// Builds a matroid from an explicit independence family. Validates the
  /// three independence axioms eagerly; throws AxiomViolation naming the
  /// axiom and the offending set(s).
  static Matroid from_family(int universe_size, SetFamily independent);

  /// Independence is |X| <= k; k may exceed the universe size (free matroid).
  static Matroid uniform(int universe_size, int k);

  /// Rows of a binary matrix with universe_size columns, each row a bitmask
  /// whose bit j is the entry in column j. At most 64 rows.
  static Matroid gf2(int universe_size, const std::vector<std::uint32_t>& rows);

  /// Graph with `vertices` vertices; element i is edges[i]. Self-loops are
  /// allowed and behave as loops of the matroid.
  static Matroid graphic(int vertices, std::vector<std::pair<int, int>> edges);

  /// Disjoint blocks covering the universe, one capacity per block.
  static Matroid partition(int universe_size, std::vector<Subset> blocks,
                           std::vector<int> capacities);

  int universe_size() const { return universe_size_; }
  /// The ground set; a proper subset of the universe after restrict().
  Subset ground() const { return ground_; }
  bool is_restricted() const { return ground_ != Subset::full(universe_size_); }
  const MatroidRep& representation() const { return rep_; }

  /// True iff x is an independent set. x must lie within the ground set.
  bool is_independent(Subset x) const;

  /// Size of a largest independent subset of x.
  int rank(Subset x) const;

  /// Rank of the ground set (computed once at construction).
  int full_rank() const { return full_rank_; }

  /// All elements whose addition to x leaves the rank unchanged.
  Subset closure(Subset x) const;

  bool is_closed(Subset x) const { return closure(x) == x; }

  /// Maximal independent sets; all of cardinality full_rank().
  SetFamily bases() const;

  /// Matroid on ground set x (element identities preserved) whose
  /// independent sets are the independent subsets of x.
  Matroid restrict(Subset x) const;

  /// Independence test routed through the closure operator: x is
  /// independent iff no element lies in the closure of the rest.
  /// Agrees with is_independent for every subset.
  bool independent_via_closure(Subset x) const;

 private:
  Matroid(int universe_size, Subset ground, MatroidRep rep);

  void require_in_ground(Subset x) const;

  int universe_size_;
  Subset ground_;
  int full_rank_;
  MatroidRep rep_;
};

struct GreedyResult {
  Subset base;
  double weight;
};

/// Standard matroid greedy: visits elements by descending weight (ties by
/// ascending element id) and keeps those that preserve independence. The
/// result is a base of maximum total weight; with negative weights it is
/// still a base, not a maximum-weight independent set.
GreedyResult greedy_max_weight_base(const Matroid& m,
                                    std::span<const double> weights);

/// Outcome of checking a closure map against the four closure axioms:
/// extensivity (CL1), monotonicity (CL2), idempotence (CL3) and the
/// exchange property (CL4). On failure, names the first violated axiom
/// and a witness in display grammar.
struct ClosureAxiomsReport {
  bool ok;
  std::string axiom;    // "CL1".."CL4" when !ok
  std::string witness;  // non-empty when !ok
};

/// Exhaustively validates a closure map on an n-element universe.
/// Throws UniverseTooLarge when n exceeds kClosureAxiomsCap, and
/// std::invalid_argument if cl produces a set outside the universe.
ClosureAxiomsReport validate_closure_axioms(
    int n, const std::function<Subset(Subset)>& cl);

/// Closures of every subset of the ground set, indexed by subset bits.
/// Entries for masks outside the ground set are left at zero.
/// Throws UniverseTooLarge when the universe exceeds kEnumerationCap.
std::vector<std::uint32_t> closure_table(const Matroid& m);

}  // namespace matred

#endif  // MATRED_MATROID_HPP_
