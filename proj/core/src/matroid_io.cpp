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

#include "matred/matroid_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "matred/errors.hpp"
#include "matred/set_family.hpp"
#include "matred/subset.hpp"

namespace matred {

namespace {

struct Token {
  std::string key;
  std::string value;
  int line;
  int column;  // of the token start
};

[[noreturn]] void fail(const Token& t, const std::string& message) {
  throw ParseError(t.line, t.column, message);
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++column;
      ++i;
      continue;
    }
    const int start_line = line;
    const int start_column = column;
    std::string word;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' &&
           text[i] != '\r' && text[i] != '\n' && text[i] != '#') {
      word += text[i];
      ++column;
      ++i;
    }
    const std::size_t eq = word.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError(start_line, start_column,
                       "expected key=value, got '" + word + "'");
    }
    tokens.push_back(Token{word.substr(0, eq), word.substr(eq + 1),
                           start_line, start_column});
  }
  return tokens;
}

int parse_int(const Token& t, int min_value, int max_value) {
  int value = 0;
  const char* begin = t.value.data();
  const char* end = begin + t.value.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    fail(t, "'" + t.value + "' is not a number");
  }
  if (value < min_value || value > max_value) {
    fail(t, t.key + " must be between " + std::to_string(min_value) +
                " and " + std::to_string(max_value));
  }
  return value;
}

/// Re-reports an inner set-grammar error at the token's file position.
template <typename F>
auto at_token(const Token& t, F&& parse) {
  try {
    return parse();
  } catch (const ParseError& e) {
    fail(t, std::string("in ") + t.key + ": " + e.what());
  }
}

std::pair<int, int> parse_edge(const Token& t, int vertices) {
  const std::size_t dash = t.value.find('-');
  if (dash == std::string::npos) {
    fail(t, "edges are written as a-b");
  }
  const std::string left = t.value.substr(0, dash);
  const std::string right = t.value.substr(dash + 1);
  auto endpoint = [&](const std::string& s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      fail(t, "edges are written as a-b");
    }
    if (v < 1 || v > vertices) {
      fail(t, "vertex " + s + " outside 1.." + std::to_string(vertices));
    }
    return v - 1;
  };
  return {endpoint(left), endpoint(right)};
}

}  // namespace

Matroid parse_matroid(const std::string& text) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) {
    throw ParseError(1, 1, "empty matroid description");
  }
  if (tokens[0].key != "kind") {
    fail(tokens[0], "the description must start with kind=...");
  }
  const std::string& kind = tokens[0].value;
  const bool known = kind == "explicit" || kind == "uniform" ||
                     kind == "gf2" || kind == "graphic" ||
                     kind == "partition";
  if (!known) {
    fail(tokens[0], "unknown kind '" + kind + "'");
  }

  int n = -1;
  int k = -1;
  int vertices = -1;
  bool have_family = false;
  SetFamily family;
  std::vector<std::uint32_t> rows;
  std::vector<std::pair<int, int>> edges;
  std::vector<Subset> blocks;
  std::vector<int> capacities;

  auto require_n = [&](const Token& t) {
    if (n < 0) fail(t, "n must be given before " + t.key);
  };

  for (std::size_t i = 1; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.key == "kind") {
      fail(t, "kind was already given");
    } else if (t.key == "n") {
      if (n >= 0) fail(t, "n was already given");
      n = parse_int(t, 0, 1000000);
      if (n > kMaxUniverse) throw UniverseTooLarge(n, kMaxUniverse);
    } else if (t.key == "k" && kind == "uniform") {
      if (k >= 0) fail(t, "k was already given");
      k = parse_int(t, 0, kMaxUniverse);
    } else if (t.key == "indep" && kind == "explicit") {
      require_n(t);
      if (have_family) fail(t, "indep was already given");
      family = at_token(t, [&] { return parse_family(t.value, n); });
      have_family = true;
    } else if (t.key == "row" && kind == "gf2") {
      require_n(t);
      if (static_cast<int>(t.value.size()) != n) {
        fail(t, "row must have exactly " + std::to_string(n) + " digits");
      }
      std::uint32_t bits = 0;
      for (int j = 0; j < n; ++j) {
        if (t.value[j] == '1') {
          bits |= std::uint32_t{1} << j;
        } else if (t.value[j] != '0') {
          fail(t, "rows are strings of 0s and 1s");
        }
      }
      rows.push_back(bits);
    } else if (t.key == "vertices" && kind == "graphic") {
      if (vertices >= 0) fail(t, "vertices was already given");
      vertices = parse_int(t, 0, 1000000);
    } else if (t.key == "edge" && kind == "graphic") {
      if (vertices < 0) fail(t, "vertices must be given before edges");
      edges.push_back(parse_edge(t, vertices));
    } else if (t.key == "block" && kind == "partition") {
      require_n(t);
      if (blocks.size() != capacities.size()) {
        fail(t, "previous block is missing its cap");
      }
      blocks.push_back(at_token(t, [&] { return parse_subset(t.value, n); }));
    } else if (t.key == "cap" && kind == "partition") {
      if (blocks.size() != capacities.size() + 1) {
        fail(t, "cap must directly follow its block");
      }
      capacities.push_back(parse_int(t, 0, kMaxUniverse));
    } else {
      fail(t, "unexpected key '" + t.key + "' for kind " + kind);
    }
  }

  const Token& last = tokens.back();
  if (n < 0) fail(last, "missing n");
  try {
    if (kind == "explicit") {
      if (!have_family) fail(last, "missing indep");
      return Matroid::from_family(n, std::move(family));
    }
    if (kind == "uniform") {
      if (k < 0) fail(last, "missing k");
      return Matroid::uniform(n, k);
    }
    if (kind == "gf2") {
      return Matroid::gf2(n, rows);
    }
    if (kind == "graphic") {
      if (vertices < 0) fail(last, "missing vertices");
      if (static_cast<int>(edges.size()) != n) {
        fail(last, "n=" + std::to_string(n) + " but " +
                       std::to_string(edges.size()) + " edges were given");
      }
      return Matroid::graphic(vertices, std::move(edges));
    }
    if (blocks.size() != capacities.size()) {
      fail(last, "last block is missing its cap");
    }
    return Matroid::partition(n, std::move(blocks), std::move(capacities));
  } catch (const InvalidMatroid& e) {
    fail(last, e.what());
  }
}

Matroid load_matroid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open matroid file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matroid(buffer.str());
}

std::string render_matroid(const Matroid& m) {
  if (m.is_restricted()) {
    throw std::invalid_argument("cannot render a restricted matroid");
  }
  const int n = m.universe_size();
  std::string out;
  const MatroidRep& rep = m.representation();
  if (const auto* e = std::get_if<ExplicitRep>(&rep)) {
    out = "kind=explicit\nn=" + std::to_string(n) + "\nindep=";
    bool first = true;
    for (Subset s : e->independent) {
      if (!first) out += ';';
      out += format_subset(s);
      first = false;
    }
    out += '\n';
    return out;
  }
  if (const auto* u = std::get_if<UniformRep>(&rep)) {
    return "kind=uniform\nn=" + std::to_string(n) +
           "\nk=" + std::to_string(u->k) + "\n";
  }
  if (const auto* g = std::get_if<Gf2Rep>(&rep)) {
    out = "kind=gf2\nn=" + std::to_string(n) + "\n";
    for (int i = 0; i < g->rows; ++i) {
      out += "row=";
      for (int j = 0; j < n; ++j) {
        out += ((g->columns[j] >> i) & 1) != 0 ? '1' : '0';
      }
      out += '\n';
    }
    return out;
  }
  if (const auto* gr = std::get_if<GraphicRep>(&rep)) {
    out = "kind=graphic\nn=" + std::to_string(n) +
          "\nvertices=" + std::to_string(gr->vertices) + "\n";
    for (const auto& [a, b] : gr->edges) {
      out += "edge=" + std::to_string(a + 1) + "-" + std::to_string(b + 1) +
             "\n";
    }
    return out;
  }
  const auto& p = std::get<PartitionRep>(rep);
  out = "kind=partition\nn=" + std::to_string(n) + "\n";
  for (std::size_t i = 0; i < p.blocks.size(); ++i) {
    out += "block=" + format_subset(p.blocks[i]) +
           " cap=" + std::to_string(p.capacities[i]) + "\n";
  }
  return out;
}

}  // namespace matred
