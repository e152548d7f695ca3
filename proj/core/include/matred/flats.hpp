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

#ifndef MATRED_FLATS_HPP_
#define MATRED_FLATS_HPP_

#include "matred/matroid.hpp"
#include "matred/set_family.hpp"
#include "matred/subset.hpp"

namespace matred {

/// The closed sets of a matroid, enumerated once and kept immutable.
/// Enumeration walks every subset of the ground set, so construction
/// requires universe_size <= kEnumerationCap.
class FlatLattice {
 public:
  explicit FlatLattice(Matroid m);

  const Matroid& matroid() const { return matroid_; }

  /// Every closed set, canonical order. Always contains the ground set.
  const SetFamily& flats() const { return flats_; }

  /// The flats of rank full_rank() - 1. Empty iff the rank is zero.
  const SetFamily& hyperplanes() const { return hyperplanes_; }

  /// Closure by the hyperplane route: the ground set when rank(x) is full
  /// (so the intersection below is never over an empty family), otherwise
  /// the intersection of all hyperplanes containing x. Agrees with
  /// matroid().closure(x) on every subset of the ground set.
  Subset closure_via_hyperplanes(Subset x) const;

  /// The hyperplanes containing x, whose intersection gives x back.
  /// Throws NotAFlat when x is not closed and FullRankFlat when x has
  /// full rank (no hyperplane contains it).
  SetFamily flat_as_hyperplane_intersection(Subset x) const;

  /// True iff closure(x) is contained in closure(y). Evaluated
  /// definitionally and again as "every hyperplane over y is over x";
  /// throws std::logic_error if the two routes ever disagree.
  bool closure_leq(Subset x, Subset y) const;

 private:
  Matroid matroid_;
  SetFamily flats_;
  SetFamily hyperplanes_;
};

/// All closed sets of m in canonical order.
/// Throws UniverseTooLarge when the universe exceeds kEnumerationCap.
SetFamily closed_sets(const Matroid& m);

/// Flats of rank full_rank() - 1, i.e. the maximal proper flats.
SetFamily hyperplanes(const Matroid& m);

/// One-shot conveniences over a freshly built lattice; prefer holding a
/// FlatLattice when calling repeatedly on the same matroid.
Subset closure_via_hyperplanes(const Matroid& m, Subset x);
SetFamily flat_as_hyperplane_intersection(const Matroid& m, Subset x);
bool closure_leq(const Matroid& m, Subset x, Subset y);

}  // namespace matred

#endif  // MATRED_FLATS_HPP_
