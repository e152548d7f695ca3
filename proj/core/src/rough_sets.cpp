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

#include "matred/rough_sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matred/errors.hpp"
#include "matred/subset.hpp"

namespace matred {

Partition::Partition(int universe_size, std::vector<Subset> blocks)
    : universe_size_(universe_size), blocks_(std::move(blocks)) {
  if (universe_size_ < 0 || universe_size_ > kMaxUniverse) {
    throw UniverseTooLarge(universe_size_, kMaxUniverse);
  }
  Subset seen;
  for (const Subset& b : blocks_) {
    if (b.empty()) {
      throw std::invalid_argument("partition blocks must be nonempty");
    }
    if (!b.subset_of(Subset::full(universe_size_))) {
      throw std::invalid_argument("partition block " + format_subset(b) +
                                  " lies outside the universe");
    }
    if (seen.intersects(b)) {
      throw std::invalid_argument("partition block " + format_subset(b) +
                                  " overlaps another block");
    }
    seen = seen | b;
  }
  if (seen != Subset::full(universe_size_)) {
    throw std::invalid_argument("partition blocks do not cover the universe");
  }
  std::sort(blocks_.begin(), blocks_.end(), canonical_less);
}

Subset Partition::block_of(ElementId x) const {
  for (Subset b : blocks_) {
    if (b.contains(x)) return b;
  }
  throw std::invalid_argument("element outside the universe");
}

Subset lower_approx(const Partition& p, Subset x) {
  Subset out;
  for (Subset b : p.blocks()) {
    if (b.subset_of(x)) out = out | b;
  }
  return out;
}

Subset upper_approx(const Partition& p, Subset x) {
  Subset out;
  for (Subset b : p.blocks()) {
    if (b.intersects(x)) out = out | b;
  }
  return out;
}

}  // namespace matred
