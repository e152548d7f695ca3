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

#include "matred/flats.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matred/errors.hpp"
#include "matred/matroid.hpp"
#include "matred/set_family.hpp"
#include "matred/subset.hpp"

namespace matred {

FlatLattice::FlatLattice(Matroid m) : matroid_(std::move(m)) {
  const int n = matroid_.universe_size();
  if (n > kEnumerationCap) {
    throw UniverseTooLarge(n, kEnumerationCap);
  }
  // Every flat is the closure of some subset, so closing every subset and
  // deduplicating enumerates them all.
  std::vector<bool> seen(std::size_t{1} << n, false);
  std::vector<Subset> flats;
  for_each_submask(matroid_.ground(), [&](Subset x) {
    Subset c = matroid_.closure(x);
    if (!seen[c.bits()]) {
      seen[c.bits()] = true;
      flats.push_back(c);
    }
  });
  flats_ = SetFamily(n, std::move(flats));

  const int hyper_rank = matroid_.full_rank() - 1;
  std::vector<Subset> hypers;
  for (Subset f : flats_) {
    if (matroid_.rank(f) == hyper_rank) hypers.push_back(f);
  }
  hyperplanes_ = SetFamily(n, std::move(hypers));
}

Subset FlatLattice::closure_via_hyperplanes(Subset x) const {
  if (matroid_.rank(x) == matroid_.full_rank()) {
    return matroid_.ground();
  }
  Subset acc = matroid_.ground();
  bool any = false;
  for (Subset h : hyperplanes_) {
    if (x.subset_of(h)) {
      acc = acc & h;
      any = true;
    }
  }
  if (!any) {
    // A set of less than full rank always lies in some hyperplane.
    throw std::logic_error("no hyperplane contains the non-spanning set " +
                           format_subset(x));
  }
  return acc;
}

SetFamily FlatLattice::flat_as_hyperplane_intersection(Subset x) const {
  if (matroid_.closure(x) != x) {
    throw NotAFlat(format_subset(x) + " is not a closed set");
  }
  if (matroid_.rank(x) == matroid_.full_rank()) {
    throw FullRankFlat("no hyperplane contains the full-rank flat " +
                       format_subset(x));
  }
  std::vector<Subset> containing;
  Subset acc = matroid_.ground();
  for (Subset h : hyperplanes_) {
    if (x.subset_of(h)) {
      containing.push_back(h);
      acc = acc & h;
    }
  }
  if (acc != x) {
    throw std::logic_error("hyperplanes over " + format_subset(x) +
                           " intersect to " + format_subset(acc));
  }
  return SetFamily(matroid_.universe_size(), std::move(containing));
}

bool FlatLattice::closure_leq(Subset x, Subset y) const {
  const bool definitional =
      matroid_.closure(x).subset_of(matroid_.closure(y));
  bool via_hyperplanes = true;
  for (Subset h : hyperplanes_) {
    if (y.subset_of(h) && !x.subset_of(h)) {
      via_hyperplanes = false;
      break;
    }
  }
  if (definitional != via_hyperplanes) {
    throw std::logic_error("closure containment checks disagree for " +
                           format_subset(x) + " and " + format_subset(y));
  }
  return definitional;
}

SetFamily closed_sets(const Matroid& m) { return FlatLattice(m).flats(); }

SetFamily hyperplanes(const Matroid& m) {
  return FlatLattice(m).hyperplanes();
}

Subset closure_via_hyperplanes(const Matroid& m, Subset x) {
  return FlatLattice(m).closure_via_hyperplanes(x);
}

SetFamily flat_as_hyperplane_intersection(const Matroid& m, Subset x) {
  return FlatLattice(m).flat_as_hyperplane_intersection(x);
}

bool closure_leq(const Matroid& m, Subset x, Subset y) {
  return FlatLattice(m).closure_leq(x, y);
}

}  // namespace matred
