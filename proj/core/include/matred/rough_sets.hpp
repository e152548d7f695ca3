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

#ifndef MATRED_ROUGH_SETS_HPP_
#define MATRED_ROUGH_SETS_HPP_

#include <vector>

#include "matred/subset.hpp"

namespace matred {

/// An equivalence relation on the universe, stored as its blocks.
class Partition {
 public:
  /// Blocks must be nonempty, pairwise disjoint, and cover the universe;
  /// throws std::invalid_argument otherwise. Blocks are kept in canonical
  /// order regardless of the order supplied.
  Partition(int universe_size, std::vector<Subset> blocks);

  int universe_size() const { return universe_size_; }
  const std::vector<Subset>& blocks() const { return blocks_; }

  /// The block containing element x.
  Subset block_of(ElementId x) const;

 private:
  int universe_size_;
  std::vector<Subset> blocks_;
};

/// Union of the blocks lying entirely inside x.
Subset lower_approx(const Partition& p, Subset x);

/// Union of the blocks meeting x.
Subset upper_approx(const Partition& p, Subset x);

}  // namespace matred

#endif  // MATRED_ROUGH_SETS_HPP_
