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

#ifndef MATRED_DEPENDENCE_HPP_
#define MATRED_DEPENDENCE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matred/matroid.hpp"
#include "matred/set_family.hpp"
#include "matred/subset.hpp"

namespace matred {

/// Cap for exhaustive union-compatibility checking (4^n pairs).
inline constexpr int kCongruenceCheckCap = 10;

/// Cap for comparing two congruences class-by-class over 2^n subsets.
inline constexpr int kDenseCheckCap = 12;

/// Cap for the full theorem suite, whose inner loops visit every subset
/// of every subset of the universe.
inline constexpr int kVerifySuiteCap = 8;

/// Opaque class label: two subsets are related exactly when their keys
/// compare equal. The payload depends on how the congruence was built.
using ClassKey = std::vector<std::uint64_t>;

/// An equivalence relation on the power set of the universe, represented
/// by a kernel function rather than a pair list. Union-compatibility is
/// promised by construction for the closure-based and family-based forms;
/// explicit tables are trusted and can be audited with is_congruence().
class Congruence {
 public:
  /// Relates X and Y when they have equal closure in m.
  /// m must not be a restriction (the relation lives on the full power set).
  static Congruence from_matroid_closure(const Matroid& m);

  /// Relates X and Y when the same members of h contain both.
  static Congruence from_family_gamma(SetFamily h);

  /// Explicit table of 2^n class labels indexed by subset bits. Labels may
  /// be arbitrary ints; equal label means related. The table is not checked
  /// for union-compatibility here. Requires n <= kEnumerationCap.
  static Congruence from_table(int universe_size, std::vector<int> table);

  int universe_size() const { return universe_size_; }

  ClassKey key(Subset x) const;

  bool related(Subset x, Subset y) const { return key(x) == key(y); }

  /// Dense class ids for every subset, indexed by subset bits; ids are
  /// assigned by first appearance in ascending numeric order. Requires
  /// universe_size <= kEnumerationCap.
  std::vector<int> class_table() const;

 private:
  struct FromMatroid {
    Matroid matroid;
  };
  struct FromGamma {
    SetFamily family;
  };
  struct FromTable {
    std::vector<int> table;
  };

  Congruence(int universe_size,
             std::variant<FromMatroid, FromGamma, FromTable> source)
      : universe_size_(universe_size), source_(std::move(source)) {}

  int universe_size_;
  std::variant<FromMatroid, FromGamma, FromTable> source_;
};

/// A universe together with a union-compatible congruence on its power set.
struct DependenceSpace {
  int universe_size;
  Congruence theta;
};

/// Outcome of one verified claim. A failed claim always carries a witness
/// rendered in display grammar.
struct TheoremReport {
  std::string id;
  bool holds;
  std::string witness;  // empty iff holds
};

/// The space whose congruence relates subsets with equal closure in m.
DependenceSpace theta_from_matroid(const Matroid& m);

/// Exhaustively checks union-compatibility: every pair (A, B) must land in
/// the class of (rep(A) ∪ rep(B)), where rep is the class representative.
/// The witness on failure is a 4-tuple A1, B1, A2, B2 with A1 related to
/// A2 and B1 to B2 but the unions in different classes.
/// Requires universe_size <= kCongruenceCheckCap.
TheoremReport is_congruence(const Congruence& c);

/// True iff x is minimal in its class. Evaluated by the single-deletion
/// test (no x with X - {x} related to X) and by the definitional scan over
/// all proper subsets; the two must agree, else std::logic_error.
bool is_consistent(const DependenceSpace& s, Subset x);

/// All consistent subsets in canonical order.
/// Requires universe_size <= kEnumerationCap.
SetFamily consistent_sets(const DependenceSpace& s);

/// The reducts of x: minimal subsets of x related to x. Computed both as
/// Min over the related subsets of x and as the consistent subsets of x
/// related to x; the two must agree, else std::logic_error.
SetFamily reducts(const DependenceSpace& s, Subset x);

/// The congruence relating X and Y when exactly the same members of h
/// contain both. The class key is the index set of containing members.
Congruence gamma_of_family(const SetFamily& h);

/// Whether the congruence induced by h partitions the power set exactly
/// as s.theta does. The witness on failure is a pair (X, Y) related under
/// one relation but not the other.
/// Requires universe_size <= kDenseCheckCap.
TheoremReport is_dense(const SetFamily& h, const DependenceSpace& s);

/// The nonempty differences {x - h : h in family}, deduplicated, in
/// canonical order.
SetFamily com_family(const SetFamily& h, Subset x);

/// Minimal subsets of x meeting every member of com_family(h, x).
/// An empty difference family yields {∅}.
SetFamily reducts_via_transversals(const SetFamily& h, Subset x);

/// All ordered related pairs (X, Y), including the diagonal, sorted
/// canonically by first then second component. Requires
/// universe_size <= kVerifySuiteCap.
std::vector<std::pair<Subset, Subset>> related_pairs(const Congruence& c);

/// Runs the whole claim suite against one matroid; one report per claim,
/// in a fixed order. Requires universe_size <= kVerifySuiteCap and an
/// unrestricted matroid. The claims:
///   congruence-union-compatible        the closure congruence is a congruence
///   consistent-sets-equal-independent-sets
///   reducts-equal-restriction-bases    for every X
///   reducts-equal-min-closure-family   for every X
///   hyperplane-family-dense
///   reducts-equal-minimal-transversals for every X, via the hyperplanes
///   restriction-base-closure-preserved cl(B) = cl(X) for every base B of M|X
std::vector<TheoremReport> verify_theorems(const Matroid& m);

}  // namespace matred

#endif  // MATRED_DEPENDENCE_HPP_
