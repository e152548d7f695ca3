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
#include <variant>
#include <vector>

#include "doctest.h"
#include "matred/errors.hpp"
#include "matred/matroid.hpp"
#include "matred/matroid_io.hpp"
#include "matred/subset.hpp"
#include "support/generators.hpp"

using matred::Matroid;
using matred::Subset;

namespace {

std::string fixture(const std::string& name) {
  return std::string(MATRED_FIXTURE_DIR) + "/" + name;
}

matred::ParseError capture(const std::string& text) {
  try {
    matred::parse_matroid(text);
  } catch (const matred::ParseError& e) {
    return e;
  }
  FAIL("expected ParseError");
  return matred::ParseError(0, 0, "unreachable");
}

}  // namespace

TEST_CASE("parsing the five description kinds") {
  const Matroid expl = matred::parse_matroid(
      "kind=explicit\nn=3\nindep={};{1};{2};{3};{1,2};{2,3}\n");
  CHECK(std::get<matred::ExplicitRep>(expl.representation())
            .independent.size() == 6);
  CHECK(expl.full_rank() == 2);

  const Matroid uniform = matred::parse_matroid("kind=uniform n=4 k=2");
  CHECK(std::holds_alternative<matred::UniformRep>(uniform.representation()));
  CHECK(uniform.full_rank() == 2);
  CHECK(uniform.universe_size() == 4);

  const Matroid gf2 =
      matred::parse_matroid("kind=gf2 n=3 row=110 row=011");
  CHECK(gf2.full_rank() == 2);
  CHECK(!gf2.is_independent(Subset::full(3)));

  const Matroid graphic = matred::parse_matroid(
      "kind=graphic n=3 vertices=3 edge=1-2 edge=2-3 edge=1-3");
  CHECK(graphic.full_rank() == 2);

  const Matroid partition = matred::parse_matroid(
      "kind=partition n=4 block={1,2} cap=1 block={3,4} cap=2");
  CHECK(partition.full_rank() == 3);
}

TEST_CASE("comments and whitespace are insignificant") {
  const Matroid m = matred::parse_matroid(
      "# header comment\n"
      "kind=uniform   # trailing comment\n"
      "\t n=4 \r\n"
      "k=2");
  CHECK(m.universe_size() == 4);
  CHECK(m.full_rank() == 2);
}

TEST_CASE("axiom violations pass through with their axiom") {
  try {
    matred::parse_matroid("kind=explicit n=3 indep={1};{2}");
    FAIL("expected AxiomViolation");
  } catch (const matred::AxiomViolation& e) {
    CHECK(e.axiom() == matred::IndependenceAxiom::kI1);
  }
  try {
    matred::parse_matroid("kind=explicit n=3 indep={};{1};{1,2}");
    FAIL("expected AxiomViolation");
  } catch (const matred::AxiomViolation& e) {
    CHECK(e.axiom() == matred::IndependenceAxiom::kI2);
  }
}

TEST_CASE("parse errors carry the position of the offence") {
  const matred::ParseError bare = capture("kind=explicit\nn=3\nindep {};{1}");
  CHECK(bare.line() == 3);
  CHECK(bare.column() == 1);
  CHECK(std::string(bare.what()).find("key=value") != std::string::npos);

  CHECK(capture("").line() == 1);
  CHECK(capture("n=3 kind=uniform k=1").column() == 1);  // kind must lead
  CHECK(capture("kind=frobnicate n=2").column() == 1);

  const matred::ParseError dup = capture("kind=uniform n=3 n=4 k=1");
  CHECK(dup.line() == 1);
  CHECK(dup.column() == 18);

  const matred::ParseError early = capture("kind=explicit indep={} n=3");
  CHECK(std::string(early.what()).find("n must be given") !=
        std::string::npos);

  const matred::ParseError element = capture("kind=explicit n=3 indep={};{9}");
  CHECK(std::string(element.what()).find("in indep") != std::string::npos);
  CHECK(std::string(element.what()).find("9") != std::string::npos);

  CHECK(std::string(capture("kind=uniform n=3").what()).find("missing k") !=
        std::string::npos);
  CHECK_THROWS_AS(matred::parse_matroid("kind=uniform n=25 k=2"),
                  matred::UniverseTooLarge);
}

TEST_CASE("kind specific payload validation") {
  CHECK(std::string(capture("kind=gf2 n=3 row=11").what())
            .find("exactly 3 digits") != std::string::npos);
  CHECK(std::string(capture("kind=gf2 n=3 row=1x0").what())
            .find("0s and 1s") != std::string::npos);
  CHECK(std::string(capture("kind=gf2 row=110 n=3").what())
            .find("n must be given") != std::string::npos);

  CHECK(std::string(capture("kind=graphic n=1 edge=1-2 vertices=2").what())
            .find("vertices must be given") != std::string::npos);
  CHECK(std::string(capture("kind=graphic n=1 vertices=2 edge=1-3").what())
            .find("vertex 3") != std::string::npos);
  CHECK(std::string(capture("kind=graphic n=1 vertices=2 edge=12").what())
            .find("a-b") != std::string::npos);
  CHECK(std::string(
            capture("kind=graphic n=2 vertices=2 edge=1-2").what())
            .find("1 edges") != std::string::npos);

  CHECK(std::string(capture("kind=partition n=2 cap=1 block={1,2}").what())
            .find("follow its block") != std::string::npos);
  CHECK(std::string(capture("kind=partition n=2 block={1,2}").what())
            .find("missing its cap") != std::string::npos);
  CHECK(std::string(
            capture("kind=partition n=2 block={1} cap=1 block={2}").what())
            .find("missing its cap") != std::string::npos);

  // Structural problems surface as parse errors at the description level.
  CHECK_THROWS_AS(
      matred::parse_matroid("kind=partition n=3 block={1,2} cap=1"),
      matred::ParseError);
  CHECK_THROWS_AS(matred::parse_matroid("kind=uniform n=3 k=-1"),
                  matred::ParseError);
  CHECK_THROWS_AS(matred::parse_matroid("kind=explicit n=3 indep=oops"),
                  matred::ParseError);
}

TEST_CASE("description files load from disk") {
  const Matroid m = matred::load_matroid_file(fixture("parallel_pair.matroid"));
  CHECK(m.universe_size() == 3);
  CHECK(m.full_rank() == 2);

  CHECK(matred::load_matroid_file(fixture("gf2_fano.matroid")).full_rank() ==
        3);
  CHECK(matred::load_matroid_file(fixture("graphic_triangle.matroid"))
            .bases()
            .size() == 3);
  CHECK(matred::load_matroid_file(fixture("partition_two_blocks.matroid"))
            .full_rank() == 3);
  CHECK(matred::load_matroid_file(fixture("rank_zero.matroid")).full_rank() ==
        0);

  CHECK_THROWS_AS(matred::load_matroid_file(fixture("no_such_file.matroid")),
                  matred::Error);
  CHECK_THROWS_AS(
      matred::load_matroid_file(fixture("malformed/missing_empty.matroid")),
      matred::AxiomViolation);
  CHECK_THROWS_AS(
      matred::load_matroid_file(fixture("malformed/bad_syntax.matroid")),
      matred::ParseError);
}

TEST_CASE("rendering is canonical") {
  CHECK(matred::render_matroid(Matroid::uniform(4, 2)) ==
        "kind=uniform\nn=4\nk=2\n");
  CHECK(matred::render_matroid(matred::parse_matroid(
            "kind=explicit n=3 indep={2,3};{1,2};{3};{2};{1};{}")) ==
        "kind=explicit\nn=3\nindep={};{1};{2};{3};{1,2};{2,3}\n");
  CHECK(matred::render_matroid(
            matred::parse_matroid("kind=gf2 n=3 row=110 row=011")) ==
        "kind=gf2\nn=3\nrow=110\nrow=011\n");
  CHECK(matred::render_matroid(matred::parse_matroid(
            "kind=graphic n=2 vertices=3 edge=1-2 edge=2-3")) ==
        "kind=graphic\nn=2\nvertices=3\nedge=1-2\nedge=2-3\n");
  CHECK(matred::render_matroid(matred::parse_matroid(
            "kind=partition n=3 block={3} cap=1 block={1,2} cap=2")) ==
        "kind=partition\nn=3\nblock={3} cap=1\nblock={1,2} cap=2\n");

  CHECK_THROWS_AS(
      matred::render_matroid(Matroid::uniform(3, 1).restrict(
          Subset::of_bits(0b011))),
      std::invalid_argument);
}

TEST_CASE("parse and render round-trip preserves independence") {
  for (const Matroid& m : testsupport::matroid_corpus(40, 10, 816)) {
    const std::string text = matred::render_matroid(m);
    const Matroid back = matred::parse_matroid(text);
    REQUIRE(back.universe_size() == m.universe_size());
    for (Subset x : matred::power_set(m.universe_size())) {
      CHECK(back.is_independent(x) == m.is_independent(x));
    }
    // A second trip is textually stable.
    CHECK(matred::render_matroid(back) == text);
  }
}
