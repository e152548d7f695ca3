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

#include <string>
#include <vector>

#include "doctest.h"
#include "matred/dependence.hpp"
#include "matred/errors.hpp"
#include "matred/flats.hpp"
#include "matred/matroid.hpp"
#include "matred/set_family.hpp"
#include "matred/subset.hpp"
#include "support/generators.hpp"

using matred::Congruence;
using matred::DependenceSpace;
using matred::Matroid;
using matred::SetFamily;
using matred::Subset;

namespace {

Subset sub(std::uint32_t bits) { return Subset::of_bits(bits); }

SetFamily family(int n, std::initializer_list<std::uint32_t> masks) {
  std::vector<Subset> members;
  for (std::uint32_t m : masks) members.push_back(sub(m));
  return SetFamily(n, std::move(members));
}

Matroid parallel_pair() {
  return Matroid::from_family(
      3, family(3, {0, 0b001, 0b010, 0b100, 0b011, 0b110}));
}

/// Class label by subset parity: an equivalence that is not a congruence.
Congruence parity_congruence(int n) {
  std::vector<int> table(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = Subset::of_bits(static_cast<std::uint32_t>(mask)).size() % 2;
  }
  return Congruence::from_table(n, std::move(table));
}

}  // namespace

TEST_CASE("the closure congruence relates subsets with equal closure") {
  const DependenceSpace s = matred::theta_from_matroid(parallel_pair());
  CHECK(s.universe_size == 3);
  CHECK(s.theta.related(sub(0b001), sub(0b100)));
  CHECK(s.theta.related(sub(0b001), sub(0b101)));
  CHECK(s.theta.related(sub(0b011), sub(0b111)));
  CHECK(!s.theta.related(sub(0b001), sub(0b010)));
  CHECK(!s.theta.related(sub(0), sub(0b001)));

  // Four classes: {∅}, {{2}}, the parallel pair's sets, the spanning sets.
  const std::vector<int> table = s.theta.class_table();
  REQUIRE(table.size() == 8);
  int classes = 0;
  for (int id : table) classes = std::max(classes, id + 1);
  CHECK(classes == 4);
}

TEST_CASE("the closure congruence requires the full ground set") {
  const Matroid r = parallel_pair().restrict(sub(0b101));
  CHECK_THROWS_AS(matred::theta_from_matroid(r), std::invalid_argument);
}

TEST_CASE("union compatibility holds for closure congruences") {
  for (const Matroid& m : testsupport::matroid_corpus(12, 6, 77)) {
    const matred::TheoremReport report =
        matred::is_congruence(matred::theta_from_matroid(m).theta);
    CHECK(report.holds);
    CHECK(report.witness.empty());
  }
}

TEST_CASE("union compatibility fails for the parity relation") {
  const matred::TheoremReport report =
      matred::is_congruence(parity_congruence(3));
  CHECK(!report.holds);
  // The witness lists two related pairs whose unions part ways.
  CHECK(report.witness.find("different classes") != std::string::npos);

  CHECK_THROWS_AS(matred::is_congruence(parity_congruence(11)),
                  matred::UniverseTooLarge);
}

TEST_CASE("explicit tables can reproduce the closure congruence") {
  const Matroid m = parallel_pair();
  std::vector<int> labels;
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    labels.push_back(
        static_cast<int>(m.closure(Subset::of_bits(mask)).bits()));
  }
  const Congruence from_table = Congruence::from_table(3, labels);
  const Congruence from_closure =
      Congruence::from_matroid_closure(m);
  for (Subset x : matred::power_set(3)) {
    for (Subset y : matred::power_set(3)) {
      CHECK(from_table.related(x, y) == from_closure.related(x, y));
    }
  }
  // Dense ids are assigned by first appearance in numeric order.
  CHECK(from_table.class_table() ==
        std::vector<int>{0, 1, 2, 3, 1, 1, 3, 3});

  CHECK_THROWS_AS(Congruence::from_table(3, std::vector<int>(7, 0)),
                  std::invalid_argument);
}

TEST_CASE("consistent sets are the independent sets") {
  const Matroid m = parallel_pair();
  const DependenceSpace s = matred::theta_from_matroid(m);
  CHECK(matred::consistent_sets(s) ==
        family(3, {0, 0b001, 0b010, 0b100, 0b011, 0b110}));
  CHECK(matred::is_consistent(s, sub(0b001)));
  CHECK(!matred::is_consistent(s, sub(0b101)));
  CHECK(matred::is_consistent(s, sub(0)));
  CHECK(!matred::is_consistent(s, sub(0b111)));

  for (const Matroid& random : testsupport::matroid_corpus(12, 7, 123)) {
    const DependenceSpace space = matred::theta_from_matroid(random);
    std::vector<Subset> independent;
    for (Subset x : matred::power_set(random.universe_size())) {
      if (random.is_independent(x)) independent.push_back(x);
    }
    CHECK(matred::consistent_sets(space) ==
          SetFamily(random.universe_size(), std::move(independent)));
  }
}

TEST_CASE("reducts of a set") {
  const DependenceSpace s = matred::theta_from_matroid(parallel_pair());
  CHECK(matred::reducts(s, sub(0b101)) == family(3, {0b001, 0b100}));
  CHECK(matred::reducts(s, sub(0)) == family(3, {0}));
  CHECK(matred::reducts(s, sub(0b111)) == family(3, {0b011, 0b110}));
  // A consistent set is its own only reduct.
  CHECK(matred::reducts(s, sub(0b011)) == family(3, {0b011}));

  const DependenceSpace u =
      matred::theta_from_matroid(Matroid::uniform(4, 2));
  CHECK(matred::reducts(u, sub(0b0111)) ==
        family(4, {0b0011, 0b0101, 0b0110}));
}

TEST_CASE("the family congruence classifies by containing members") {
  // The hyperplane family of the parallel pair.
  const Congruence gamma =
      matred::gamma_of_family(family(3, {0b010, 0b101}));
  CHECK(gamma.related(sub(0b001), sub(0b100)));
  CHECK(!gamma.related(sub(0b010), sub(0b011)));
  CHECK(gamma.related(sub(0b011), sub(0b111)));
  CHECK(!gamma.related(sub(0), sub(0b001)));
}

TEST_CASE("the hyperplane family is dense") {
  const Matroid m = parallel_pair();
  const DependenceSpace s = matred::theta_from_matroid(m);
  const matred::TheoremReport dense =
      matred::is_dense(matred::hyperplanes(m), s);
  CHECK(dense.holds);

  // Dropping a hyperplane merges classes that the space keeps apart.
  const matred::TheoremReport sparse =
      matred::is_dense(family(3, {0b010}), s);
  CHECK(!sparse.holds);
  CHECK(sparse.witness.find("family relation only") != std::string::npos);

  CHECK_THROWS_AS(
      matred::is_dense(SetFamily(13),
                       matred::theta_from_matroid(Matroid::uniform(13, 2))),
      matred::UniverseTooLarge);
}

TEST_CASE("difference family of a subset against a family") {
  const SetFamily hyper = family(3, {0b010, 0b101});
  // {1,3} - {2} = {1,3}; {1,3} - {1,3} is empty and drops out.
  CHECK(matred::com_family(hyper, sub(0b101)) == family(3, {0b101}));
  CHECK(matred::com_family(hyper, sub(0)) == SetFamily(3));
  CHECK(matred::com_family(hyper, sub(0b001)) == family(3, {0b001}));
  // Equal differences collapse.
  CHECK(matred::com_family(family(3, {0b001, 0b010}), sub(0b100)) ==
        family(3, {0b100}));
}

TEST_CASE("reducts via minimal transversals") {
  const SetFamily hyper = family(3, {0b010, 0b101});
  CHECK(matred::reducts_via_transversals(hyper, sub(0b101)) ==
        family(3, {0b001, 0b100}));
  // Nothing to hit: the empty set is the only minimal transversal.
  CHECK(matred::reducts_via_transversals(hyper, sub(0)) == family(3, {0}));

  const Matroid u42 = Matroid::uniform(4, 2);
  CHECK(matred::reducts_via_transversals(matred::hyperplanes(u42),
                                         sub(0b0111)) ==
        family(4, {0b0011, 0b0101, 0b0110}));
}

TEST_CASE("related pairs expand the congruence in canonical order") {
  const DependenceSpace s = matred::theta_from_matroid(parallel_pair());
  const auto pairs = matred::related_pairs(s.theta);
  CHECK(pairs.size() == 20);
  CHECK(pairs.front().first == sub(0));
  CHECK(pairs.front().second == sub(0));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    // Symmetry and reflexivity of the expansion.
    CHECK(s.theta.related(pairs[i].first, pairs[i].second));
    if (i > 0) {
      const bool ordered =
          matred::canonical_less(pairs[i - 1].first, pairs[i].first) ||
          (pairs[i - 1].first == pairs[i].first &&
           matred::canonical_less(pairs[i - 1].second, pairs[i].second));
      CHECK(ordered);
    }
  }

  CHECK_THROWS_AS(
      matred::related_pairs(
          matred::theta_from_matroid(Matroid::uniform(9, 2)).theta),
      matred::UniverseTooLarge);
}

TEST_CASE("the theorem suite holds on the named fixtures") {
  const std::vector<std::string> expected_order = {
      "congruence-union-compatible",
      "consistent-sets-equal-independent-sets",
      "reducts-equal-restriction-bases",
      "reducts-equal-min-closure-family",
      "hyperplane-family-dense",
      "reducts-equal-minimal-transversals",
      "restriction-base-closure-preserved",
  };

  const Matroid fixtures[] = {
      parallel_pair(),
      Matroid::uniform(4, 2),
      Matroid::uniform(3, 0),
      Matroid::uniform(3, 3),
      Matroid::gf2(7, {0b1010101, 0b0110011, 0b0001111}),
      Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 2}}),
      Matroid::partition(4, {sub(0b0011), sub(0b1100)}, {1, 2}),
      Matroid::uniform(0, 0),
  };
  for (const Matroid& m : fixtures) {
    const std::vector<matred::TheoremReport> reports =
        matred::verify_theorems(m);
    REQUIRE(reports.size() == expected_order.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      CHECK(reports[i].id == expected_order[i]);
      CHECK(reports[i].holds);
      CHECK(reports[i].witness.empty());
    }
  }
}

TEST_CASE("the theorem suite rejects oversized or restricted input") {
  CHECK_THROWS_AS(matred::verify_theorems(Matroid::uniform(9, 2)),
                  matred::UniverseTooLarge);
  CHECK_THROWS_AS(
      matred::verify_theorems(parallel_pair().restrict(sub(0b011))),
      std::invalid_argument);
}
