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

#include "matred/subset.hpp"

#include <bit>
#include <string>
#include <string_view>

#include "matred/errors.hpp"
#include "parse_text.hpp"

namespace matred {

PowerSet::PowerSet(int n) : n_(n) {
  if (n < 0 || n > kMaxUniverse) {
    throw UniverseTooLarge(n, kMaxUniverse);
  }
}

PowerSet::Iterator& PowerSet::Iterator::operator++() {
  if (cardinality_ > n_) return *this;
  bool exhausted = false;
  if (cardinality_ == 0) {
    exhausted = true;
  } else {
    // Gosper's hack: next mask with the same popcount.
    const std::uint32_t v = mask_;
    const std::uint32_t c = v & (~v + 1);
    const std::uint32_t r = v + c;
    const std::uint32_t next = r | (((v ^ r) >> 2) / c);
    if (next >= (std::uint32_t{1} << n_)) {
      exhausted = true;
    } else {
      mask_ = next;
    }
  }
  if (exhausted) {
    ++cardinality_;
    mask_ = cardinality_ <= n_ ? (std::uint32_t{1} << cardinality_) - 1 : 0;
  }
  return *this;
}

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (ElementId e : s) {
    if (!first) out += ',';
    out += std::to_string(e + 1);
    first = false;
  }
  out += '}';
  return out;
}

namespace internal {

Subset parse_subset_body(TextCursor& cur, int n) {
  cur.skip_ws();
  if (cur.done() || cur.peek() != '{') {
    cur.fail(cur.pos(), "expected '{'");
  }
  cur.advance();
  Subset result;
  cur.skip_ws();
  if (!cur.done() && cur.peek() == '}') {
    cur.advance();
    return result;
  }
  for (;;) {
    cur.skip_ws();
    std::size_t start = cur.pos();
    long long value = 0;
    bool any_digit = false;
    while (!cur.done() && cur.peek() >= '0' && cur.peek() <= '9') {
      if (value < 1000000) {
        value = value * 10 + (cur.peek() - '0');
      }
      any_digit = true;
      cur.advance();
    }
    if (!any_digit) {
      cur.fail(cur.pos(), "expected an element number");
    }
    if (value < 1 || value > n) {
      cur.fail(start, "element " + std::to_string(value) +
                          " outside universe of size " + std::to_string(n));
    }
    ElementId e = static_cast<ElementId>(value - 1);
    if (result.contains(e)) {
      cur.fail(start, "duplicate element " + std::to_string(value));
    }
    result = result.with(e);
    cur.skip_ws();
    if (!cur.done() && cur.peek() == ',') {
      cur.advance();
      continue;
    }
    if (!cur.done() && cur.peek() == '}') {
      cur.advance();
      return result;
    }
    cur.fail(cur.pos(), "expected ',' or '}'");
  }
}

}  // namespace internal

Subset parse_subset(std::string_view text, int universe_size) {
  internal::TextCursor cur(text);
  Subset s = internal::parse_subset_body(cur, universe_size);
  cur.skip_ws();
  if (!cur.done()) {
    cur.fail(cur.pos(), "unexpected text after set");
  }
  return s;
}

}  // namespace matred
