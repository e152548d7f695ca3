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

#include "matred/set_family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "matred/errors.hpp"
#include "matred/subset.hpp"
#include "parse_text.hpp"

namespace matred {

SetFamily::SetFamily(int universe_size, std::vector<Subset> members)
    : universe_size_(universe_size), members_(std::move(members)) {
  if (universe_size_ < 0 || universe_size_ > kMaxUniverse) {
    throw UniverseTooLarge(universe_size_, kMaxUniverse);
  }
  Subset full = Subset::full(universe_size_);
  for (Subset s : members_) {
    if (!s.subset_of(full)) {
      throw std::invalid_argument("family member outside its universe");
    }
  }
  std::sort(members_.begin(), members_.end(), canonical_less);
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool SetFamily::contains(Subset s) const {
  return std::binary_search(members_.begin(), members_.end(), s,
                            canonical_less);
}

SetFamily min_family(const SetFamily& f) {
  std::vector<Subset> keep;
  for (Subset a : f.members()) {
    bool minimal = true;
    for (Subset b : f.members()) {
      if (b != a && b.proper_subset_of(a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) keep.push_back(a);
  }
  return SetFamily(f.universe_size(), std::move(keep));
}

SetFamily max_family(const SetFamily& f) {
  std::vector<Subset> keep;
  for (Subset a : f.members()) {
    bool maximal = true;
    for (Subset b : f.members()) {
      if (b != a && a.proper_subset_of(b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) keep.push_back(a);
  }
  return SetFamily(f.universe_size(), std::move(keep));
}

std::string format_family(const SetFamily& f) {
  std::string out = "[";
  bool first = true;
  for (Subset s : f.members()) {
    if (!first) out += ';';
    out += format_subset(s);
    first = false;
  }
  out += ']';
  return out;
}

SetFamily parse_family(std::string_view text, int universe_size) {
  internal::TextCursor cur(text);
  cur.skip_ws();
  std::vector<Subset> members;
  bool bracketed = false;
  if (!cur.done() && cur.peek() == '[') {
    bracketed = true;
    cur.advance();
    cur.skip_ws();
    if (!cur.done() && cur.peek() == ']') {
      cur.advance();
      cur.skip_ws();
      if (!cur.done()) cur.fail(cur.pos(), "unexpected text after family");
      return SetFamily(universe_size);
    }
  }
  for (;;) {
    members.push_back(internal::parse_subset_body(cur, universe_size));
    cur.skip_ws();
    if (!cur.done() && cur.peek() == ';') {
      cur.advance();
      continue;
    }
    break;
  }
  if (bracketed) {
    cur.expect(']', "']'");
    cur.skip_ws();
  }
  if (!cur.done()) {
    cur.fail(cur.pos(), "unexpected text after family");
  }
  return SetFamily(universe_size, std::move(members));
}

}  // namespace matred
