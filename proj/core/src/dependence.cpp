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

#include "matred/dependence.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matred/errors.hpp"
#include "matred/flats.hpp"
#include "matred/matroid.hpp"
#include "matred/set_family.hpp"
#include "matred/subset.hpp"

namespace matred {

namespace {

/// Renormalizes arbitrary labels to dense ids ordered by first appearance.
std::vector<int> compress_labels(const std::vector<int>& labels) {
  std::unordered_map<int, int> ids;
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] =
        ids.try_emplace(labels[i], static_cast<int>(ids.size()));
    out[i] = it->second;
  }
  return out;
}

void require_within(Subset x, int n, const char* what) {
  if (!x.subset_of(Subset::full(n))) {
    throw std::invalid_argument(std::string(what) + " " + format_subset(x) +
                                " lies outside the universe");
  }
}

}  // namespace

Congruence Congruence::from_matroid_closure(const Matroid& m) {
  if (m.is_restricted()) {
    throw std::invalid_argument(
        "the closure congruence is defined over the full ground set");
  }
  return Congruence(m.universe_size(), FromMatroid{m});
}

Congruence Congruence::from_family_gamma(SetFamily h) {
  return Congruence(h.universe_size(), FromGamma{std::move(h)});
}

Congruence Congruence::from_table(int universe_size, std::vector<int> table) {
  if (universe_size < 0 || universe_size > kEnumerationCap) {
    throw UniverseTooLarge(universe_size, kEnumerationCap);
  }
  if (table.size() != (std::size_t{1} << universe_size)) {
    throw std::invalid_argument("class table must have one entry per subset");
  }
  return Congruence(universe_size, FromTable{std::move(table)});
}

ClassKey Congruence::key(Subset x) const {
  if (const auto* fm = std::get_if<FromMatroid>(&source_)) {
    return ClassKey{fm->matroid.closure(x).bits()};
  }
  if (const auto* fg = std::get_if<FromGamma>(&source_)) {
    const auto& members = fg->family.members();
    ClassKey blocks((members.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (x.subset_of(members[i])) {
        blocks[i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
    return blocks;
  }
  const auto& table = std::get<FromTable>(source_).table;
  return ClassKey{static_cast<std::uint64_t>(table[x.bits()])};
}

std::vector<int> Congruence::class_table() const {
  if (universe_size_ > kEnumerationCap) {
    throw UniverseTooLarge(universe_size_, kEnumerationCap);
  }
  const std::uint32_t count = std::uint32_t{1} << universe_size_;
  if (const auto* fm = std::get_if<FromMatroid>(&source_)) {
    const auto closures = closure_table(fm->matroid);
    std::vector<int> labels(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      labels[mask] = static_cast<int>(closures[mask]);
    }
    return compress_labels(labels);
  }
  if (std::holds_alternative<FromGamma>(source_)) {
    std::map<ClassKey, int> ids;
    std::vector<int> out(count);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      ClassKey k = key(Subset::of_bits(mask));
      auto [it, inserted] =
          ids.try_emplace(std::move(k), static_cast<int>(ids.size()));
      out[mask] = it->second;
    }
    return out;
  }
  return compress_labels(std::get<FromTable>(source_).table);
}

DependenceSpace theta_from_matroid(const Matroid& m) {
  return DependenceSpace{m.universe_size(),
                         Congruence::from_matroid_closure(m)};
}

TheoremReport is_congruence(const Congruence& c) {
  const int n = c.universe_size();
  if (n > kCongruenceCheckCap) {
    throw UniverseTooLarge(n, kCongruenceCheckCap);
  }
  const std::vector<int> table = c.class_table();
  const std::uint32_t count = std::uint32_t{1} << n;
  int classes = 0;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    classes = std::max(classes, table[mask] + 1);
  }
  std::vector<std::uint32_t> rep(classes);
  for (std::uint32_t mask = count; mask-- > 0;) {
    rep[table[mask]] = mask;  // ascending first appearance wins
  }
  // Union-compatibility holds iff every pair lands in the class of its
  // representative pair: with a1 ~ rep(a1) and b1 ~ rep(b1), any failure
  // of the four-set condition shows up here, and conversely.
  for (std::uint32_t a = 0; a < count; ++a) {
    const std::uint32_t ra = rep[table[a]];
    for (std::uint32_t b = 0; b < count; ++b) {
      const std::uint32_t rb = rep[table[b]];
      if (table[a | b] != table[ra | rb]) {
        const Subset a1 = Subset::of_bits(ra);
        const Subset b1 = Subset::of_bits(rb);
        const Subset a2 = Subset::of_bits(a);
        const Subset b2 = Subset::of_bits(b);
        return {"union-compatible", false,
                format_subset(a1) + " ~ " + format_subset(a2) + " and " +
                    format_subset(b1) + " ~ " + format_subset(b2) +
                    " but the unions " + format_subset(a1 | b1) + " and " +
                    format_subset(a2 | b2) + " are in different classes"};
      }
    }
  }
  return {"union-compatible", true, ""};
}

bool is_consistent(const DependenceSpace& s, Subset x) {
  require_within(x, s.universe_size, "subset");
  const ClassKey kx = s.theta.key(x);
  bool single_deletion = true;
  for (ElementId e : x) {
    if (s.theta.key(x.without(e)) == kx) {
      single_deletion = false;
      break;
    }
  }
  bool definitional = true;
  if (!x.empty()) {
    const std::uint32_t g = x.bits();
    for (std::uint32_t sub = (g - 1) & g;; sub = (sub - 1) & g) {
      if (s.theta.key(Subset::of_bits(sub)) == kx) {
        definitional = false;
        break;
      }
      if (sub == 0) break;
    }
  }
  if (single_deletion != definitional) {
    throw std::logic_error("consistency checks disagree on " +
                           format_subset(x));
  }
  return single_deletion;
}

SetFamily consistent_sets(const DependenceSpace& s) {
  const int n = s.universe_size;
  const std::vector<int> table = s.theta.class_table();
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<Subset> out;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    // Single-deletion form; equivalent to class minimality because the
    // relation is union-compatible.
    bool minimal = true;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const std::uint32_t without = mask & ~(rest & (~rest + 1));
      if (table[without] == table[mask]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(Subset::of_bits(mask));
  }
  return SetFamily(n, std::move(out));
}

SetFamily reducts(const DependenceSpace& s, Subset x) {
  require_within(x, s.universe_size, "subset");
  const ClassKey kx = s.theta.key(x);
  std::vector<Subset> related;
  for_each_submask(x, [&](Subset y) {
    if (s.theta.key(y) == kx) related.push_back(y);
  });

  const SetFamily via_min =
      min_family(SetFamily(s.universe_size, related));

  std::vector<Subset> consistent;
  for (Subset y : related) {
    bool ok = true;
    for (ElementId e : y) {
      if (s.theta.key(y.without(e)) == kx) {
        ok = false;
        break;
      }
    }
    if (ok) consistent.push_back(y);
  }
  const SetFamily via_consistency =
      SetFamily(s.universe_size, std::move(consistent));

  if (via_min != via_consistency) {
    throw std::logic_error("reduct routes disagree on " + format_subset(x) +
                           ": " + format_family(via_min) + " vs " +
                           format_family(via_consistency));
  }
  return via_min;
}

Congruence gamma_of_family(const SetFamily& h) {
  return Congruence::from_family_gamma(h);
}

TheoremReport is_dense(const SetFamily& h, const DependenceSpace& s) {
  const int n = s.universe_size;
  if (h.universe_size() != n) {
    throw std::invalid_argument(
        "family universe differs from the space's universe");
  }
  if (n > kDenseCheckCap) {
    throw UniverseTooLarge(n, kDenseCheckCap);
  }
  const std::vector<int> gamma = gamma_of_family(h).class_table();
  const std::vector<int> theta = s.theta.class_table();
  const std::uint32_t count = std::uint32_t{1} << n;
  // Partitions coincide iff gamma class -> theta class is a well-defined
  // bijection; track the first subset seen per class for witnesses.
  std::vector<int> fwd(count, -1), bwd(count, -1);
  std::vector<std::uint32_t> first_gamma(count, 0), first_theta(count, 0);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    const int cg = gamma[mask];
    const int ct = theta[mask];
    if (fwd[cg] == -1) {
      fwd[cg] = ct;
      first_gamma[cg] = mask;
    } else if (fwd[cg] != ct) {
      return {"dense-family", false,
              format_subset(Subset::of_bits(first_gamma[cg])) + " and " +
                  format_subset(Subset::of_bits(mask)) +
                  " are related under the family relation only"};
    }
    if (bwd[ct] == -1) {
      bwd[ct] = cg;
      first_theta[ct] = mask;
    } else if (bwd[ct] != cg) {
      return {"dense-family", false,
              format_subset(Subset::of_bits(first_theta[ct])) + " and " +
                  format_subset(Subset::of_bits(mask)) +
                  " are related under the space's relation only"};
    }
  }
  return {"dense-family", true, ""};
}

SetFamily com_family(const SetFamily& h, Subset x) {
  require_within(x, h.universe_size(), "subset");
  std::vector<Subset> diffs;
  for (Subset member : h) {
    Subset d = x - member;
    if (!d.empty()) diffs.push_back(d);
  }
  return SetFamily(h.universe_size(), std::move(diffs));
}

SetFamily reducts_via_transversals(const SetFamily& h, Subset x) {
  const SetFamily com = com_family(h, x);
  std::vector<Subset> minimal_hitters;
  for_each_submask(x, [&](Subset b) {
    for (Subset t : com) {
      if (!b.intersects(t)) return;  // not a hitting set
    }
    // Minimal iff every element is the sole hitter of some difference.
    for (ElementId e : b) {
      bool critical = false;
      for (Subset t : com) {
        if ((t & b) == Subset::single(e)) {
          critical = true;
          break;
        }
      }
      if (!critical) return;
    }
    minimal_hitters.push_back(b);
  });
  return SetFamily(h.universe_size(), std::move(minimal_hitters));
}

std::vector<std::pair<Subset, Subset>> related_pairs(const Congruence& c) {
  const int n = c.universe_size();
  if (n > kVerifySuiteCap) {
    throw UniverseTooLarge(n, kVerifySuiteCap);
  }
  const std::vector<int> table = c.class_table();
  const std::uint32_t count = std::uint32_t{1} << n;
  int classes = 0;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    classes = std::max(classes, table[mask] + 1);
  }
  std::vector<std::vector<Subset>> groups(classes);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    groups[table[mask]].push_back(Subset::of_bits(mask));
  }
  std::vector<std::pair<Subset, Subset>> pairs;
  for (const auto& group : groups) {
    for (Subset a : group) {
      for (Subset b : group) {
        pairs.emplace_back(a, b);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& p, const auto& q) {
    if (p.first != q.first) return canonical_less(p.first, q.first);
    return canonical_less(p.second, q.second);
  });
  return pairs;
}

std::vector<TheoremReport> verify_theorems(const Matroid& m) {
  if (m.is_restricted()) {
    throw std::invalid_argument(
        "the theorem suite runs on the full ground set");
  }
  const int n = m.universe_size();
  if (n > kVerifySuiteCap) {
    throw UniverseTooLarge(n, kVerifySuiteCap);
  }

  const DependenceSpace space = theta_from_matroid(m);
  const FlatLattice lattice(m);
  const SetFamily& hyper = lattice.hyperplanes();

  const TheoremReport congruence_report = is_congruence(space.theta);

  std::vector<Subset> independent;
  for (Subset x : power_set(n)) {
    if (m.is_independent(x)) independent.push_back(x);
  }
  const SetFamily independent_family(n, std::move(independent));
  const SetFamily consistent = consistent_sets(space);
  std::string ind_witness;
  if (independent_family != consistent) {
    for (Subset x : power_set(n)) {
      if (independent_family.contains(x) != consistent.contains(x)) {
        ind_witness = format_subset(x) + " belongs to exactly one of the families";
        break;
      }
    }
  }

  bool bases_hold = true;
  std::string bases_witness;
  bool minclosure_holds = true;
  std::string minclosure_witness;
  bool transversal_holds = true;
  std::string transversal_witness;
  bool base_closure_holds = true;
  std::string base_closure_witness;

  for (Subset x : power_set(n)) {
    const SetFamily rd = reducts(space, x);
    const SetFamily restriction_bases = m.restrict(x).bases();
    if (bases_hold && rd != restriction_bases) {
      bases_hold = false;
      bases_witness = "X=" + format_subset(x) + ": " + format_family(rd) +
                      " vs " + format_family(restriction_bases);
    }

    const Subset cx = m.closure(x);
    std::vector<Subset> same_closure;
    for_each_submask(x, [&](Subset y) {
      if (m.closure(y) == cx) same_closure.push_back(y);
    });
    const SetFamily via_closure =
        min_family(SetFamily(n, std::move(same_closure)));
    if (minclosure_holds && rd != via_closure) {
      minclosure_holds = false;
      minclosure_witness = "X=" + format_subset(x) + ": " +
                           format_family(rd) + " vs " +
                           format_family(via_closure);
    }

    const SetFamily via_transversals = reducts_via_transversals(hyper, x);
    if (transversal_holds && rd != via_transversals) {
      transversal_holds = false;
      transversal_witness = "X=" + format_subset(x) + ": " +
                            format_family(rd) + " vs " +
                            format_family(via_transversals);
    }

    if (base_closure_holds) {
      for (Subset b : restriction_bases) {
        if (m.closure(b) != cx) {
          base_closure_holds = false;
          base_closure_witness =
              "X=" + format_subset(x) + ", B=" + format_subset(b) +
              ": cl(B)=" + format_subset(m.closure(b)) +
              " but cl(X)=" + format_subset(cx);
          break;
        }
      }
    }
  }

  const TheoremReport dense_report = is_dense(hyper, space);

  return {
      {"congruence-union-compatible", congruence_report.holds,
       congruence_report.witness},
      {"consistent-sets-equal-independent-sets", ind_witness.empty(),
       ind_witness},
      {"reducts-equal-restriction-bases", bases_hold, bases_witness},
      {"reducts-equal-min-closure-family", minclosure_holds,
       minclosure_witness},
      {"hyperplane-family-dense", dense_report.holds, dense_report.witness},
      {"reducts-equal-minimal-transversals", transversal_holds,
       transversal_witness},
      {"restriction-base-closure-preserved", base_closure_holds,
       base_closure_witness},
  };
}

}  // namespace matred
