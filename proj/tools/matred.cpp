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

// Command line front end. Output on stdout follows the canonical set
// grammar and is byte-deterministic; diagnostics go to stderr. Exit codes:
// 0 success, 1 a cross-checked identity failed, 2 bad input.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matred/dependence.hpp"
#include "matred/errors.hpp"
#include "matred/flats.hpp"
#include "matred/matroid.hpp"
#include "matred/matroid_io.hpp"
#include "matred/set_family.hpp"
#include "matred/subset.hpp"

namespace {

using matred::DependenceSpace;
using matred::ElementId;
using matred::Matroid;
using matred::SetFamily;
using matred::Subset;

std::string format_weight(double w) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%g", w);
  return buffer;
}

/// Reducts as the consistent sets related to x (single-deletion form).
SetFamily reducts_by_definition(const DependenceSpace& s, Subset x) {
  const matred::ClassKey kx = s.theta.key(x);
  std::vector<Subset> result;
  matred::for_each_submask(x, [&](Subset y) {
    if (s.theta.key(y) != kx) return;
    for (ElementId e : y) {
      if (s.theta.key(y.without(e)) == kx) return;
    }
    result.push_back(y);
  });
  return SetFamily(s.universe_size, std::move(result));
}

/// Reducts as Min over the subsets of x with the same closure as x.
SetFamily reducts_by_min_closure(const Matroid& m, Subset x) {
  const Subset cx = m.closure(x);
  std::vector<Subset> same;
  matred::for_each_submask(x, [&](Subset y) {
    if (m.closure(y) == cx) same.push_back(y);
  });
  return matred::min_family(SetFamily(m.universe_size(), std::move(same)));
}

int run_closure(const Matroid& m, const std::string& set_text) {
  const Subset x = matred::parse_subset(set_text, m.universe_size());
  const Subset definitional = m.closure(x);
  const Subset via_hyperplanes = matred::closure_via_hyperplanes(m, x);
  std::printf("%s\n%s\n", matred::format_subset(definitional).c_str(),
              matred::format_subset(via_hyperplanes).c_str());
  if (definitional != via_hyperplanes) {
    std::fprintf(stderr, "closure routes disagree\n");
    return 1;
  }
  return 0;
}

int run_reducts(const Matroid& m, const std::string& set_text,
                const std::string& method) {
  const Subset x = matred::parse_subset(set_text, m.universe_size());
  if (method == "def") {
    const DependenceSpace space = matred::theta_from_matroid(m);
    std::printf("%s\n",
                matred::format_family(reducts_by_definition(space, x)).c_str());
    return 0;
  }
  if (method == "minclosure") {
    std::printf("%s\n",
                matred::format_family(reducts_by_min_closure(m, x)).c_str());
    return 0;
  }
  if (method == "restriction") {
    std::printf("%s\n", matred::format_family(m.restrict(x).bases()).c_str());
    return 0;
  }
  if (method == "transversal") {
    const SetFamily result =
        matred::reducts_via_transversals(matred::hyperplanes(m), x);
    std::printf("%s\n", matred::format_family(result).c_str());
    return 0;
  }
  const DependenceSpace space = matred::theta_from_matroid(m);
  const SetFamily by_definition = reducts_by_definition(space, x);
  const SetFamily by_min_closure = reducts_by_min_closure(m, x);
  const SetFamily by_restriction = m.restrict(x).bases();
  const SetFamily by_transversals =
      matred::reducts_via_transversals(matred::hyperplanes(m), x);
  if (by_definition != by_min_closure || by_definition != by_restriction ||
      by_definition != by_transversals) {
    std::fprintf(stderr,
                 "reduct routes disagree on %s\n"
                 "  definition:  %s\n"
                 "  minclosure:  %s\n"
                 "  restriction: %s\n"
                 "  transversal: %s\n",
                 matred::format_subset(x).c_str(),
                 matred::format_family(by_definition).c_str(),
                 matred::format_family(by_min_closure).c_str(),
                 matred::format_family(by_restriction).c_str(),
                 matred::format_family(by_transversals).c_str());
    return 1;
  }
  std::printf("%s\n", matred::format_family(by_definition).c_str());
  return 0;
}

int run_verify(const Matroid& m) {
  bool all_hold = true;
  for (const matred::TheoremReport& report : matred::verify_theorems(m)) {
    if (report.holds) {
      std::printf("%s HOLDS\n", report.id.c_str());
    } else {
      std::printf("%s FAILS %s\n", report.id.c_str(),
                  report.witness.c_str());
      all_hold = false;
    }
  }
  return all_hold ? 0 : 1;
}

std::vector<double> parse_weights(const std::string& text, int n) {
  std::vector<double> weights;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string piece = text.substr(start, comma - start);
    double value = 0;
    const char* begin = piece.data();
    const char* end = begin + piece.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (piece.empty() || ec != std::errc() || ptr != end ||
        !std::isfinite(value)) {
      throw matred::ParseError(1, static_cast<int>(start) + 1,
                               "'" + piece + "' is not a finite weight");
    }
    weights.push_back(value);
    if (comma == text.size()) break;
    start = comma + 1;
  }
  if (static_cast<int>(weights.size()) != n) {
    throw matred::WeightArityMismatch(weights.size(), n);
  }
  return weights;
}

int run_greedy(const Matroid& m, const std::string& weights_text) {
  const std::vector<double> weights =
      parse_weights(weights_text, m.universe_size());
  const matred::GreedyResult result = matred::greedy_max_weight_base(m, weights);
  std::string line = matred::format_subset(result.base) +
                     " weight=" + format_weight(result.weight);
  int rc = 0;
  if (m.universe_size() <= 8) {
    double best = result.weight;
    for (Subset base : m.bases()) {
      double total = 0;
      for (ElementId e : base) total += weights[e];
      if (total > best) best = total;
    }
    const bool optimal = result.weight == best;
    line += optimal ? " optimal=yes" : " optimal=no";
    if (!optimal) {
      std::fprintf(stderr, "greedy base is not optimal: best %s\n",
                   format_weight(best).c_str());
      rc = 1;
    }
  }
  std::printf("%s\n", line.c_str());
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "matroid and dependence-space toolkit: closures, hyperplanes, bases,\n"
      "attribute reducts, and exhaustive identity verification"};
  app.require_subcommand(1);

  std::string matroid_path;
  std::string set_text;
  std::string method = "all";
  std::string weights_text;

  auto add_matroid = [&](CLI::App* cmd) {
    cmd->add_option("--matroid", matroid_path, "matroid description file")
        ->required();
  };

  CLI::App* closure =
      app.add_subcommand("closure",
                         "closure of a subset, computed definitionally and "
                         "again through the hyperplanes");
  add_matroid(closure);
  closure->add_option("--set", set_text, "subset, e.g. {1,3}")->required();

  CLI::App* flats = app.add_subcommand("flats", "all closed sets");
  add_matroid(flats);

  CLI::App* hyper =
      app.add_subcommand("hyperplanes", "closed sets one rank below full");
  add_matroid(hyper);

  CLI::App* bases = app.add_subcommand("bases", "maximal independent sets");
  add_matroid(bases);

  CLI::App* reducts =
      app.add_subcommand("reducts", "minimal subsets with the same closure");
  add_matroid(reducts);
  reducts->add_option("--set", set_text, "subset, e.g. {1,3}")->required();
  reducts
      ->add_option("--method", method,
                   "all (cross-check every route), def, minclosure, "
                   "restriction, or transversal")
      ->check(CLI::IsMember(
          {"all", "def", "minclosure", "restriction", "transversal"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "exhaustively check the reduct and density identities");
  add_matroid(verify);

  CLI::App* greedy = app.add_subcommand(
      "greedy",
      "maximum-weight base by the greedy rule; with negative weights the "
      "result is still a base, not a maximum-weight independent set");
  add_matroid(greedy);
  greedy
      ->add_option("--weights", weights_text,
                   "comma-separated weights, one per element")
      ->required();

  try {
    app.parse(argc, argv);
    const Matroid m = matred::load_matroid_file(matroid_path);
    if (closure->parsed()) return run_closure(m, set_text);
    if (flats->parsed()) {
      std::printf("%s\n", matred::format_family(matred::closed_sets(m)).c_str());
      return 0;
    }
    if (hyper->parsed()) {
      std::printf("%s\n", matred::format_family(matred::hyperplanes(m)).c_str());
      return 0;
    }
    if (bases->parsed()) {
      std::printf("%s\n", matred::format_family(m.bases()).c_str());
      return 0;
    }
    if (reducts->parsed()) return run_reducts(m, set_text, method);
    if (verify->parsed()) return run_verify(m);
    return run_greedy(m, weights_text);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const matred::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::logic_error& e) {
    std::fprintf(stderr, "internal identity failed: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
