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

#ifndef MATRED_SET_FAMILY_HPP_
#define MATRED_SET_FAMILY_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "matred/subset.hpp"

namespace matred {

/// A deduplicated collection of subsets of a fixed universe, kept in
/// canonical order (ascending cardinality, then ascending bit value).
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(int universe_size) : universe_size_(universe_size) {}
  /// Canonicalizes: sorts, removes duplicates, and validates that every
  /// member fits the universe.
  SetFamily(int universe_size, std::vector<Subset> members);

  int universe_size() const { return universe_size_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  /// Membership test; O(log size).
  bool contains(Subset s) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const SetFamily&) const = default;

 private:
  int universe_size_ = 0;
  std::vector<Subset> members_;
};

/// Members of f that contain no other member as a proper subset.
SetFamily min_family(const SetFamily& f);

/// Members of f contained in no other member.
SetFamily max_family(const SetFamily& f);

/// Renders a family in display grammar: "[{2};{1,3}]", "[]" when empty.
std::string format_family(const SetFamily& f);

/// Parses the display grammar (also without the brackets, as used in
/// matroid description files: "{};{1};{1,2}"). Whitespace-insensitive.
SetFamily parse_family(std::string_view text, int universe_size);

}  // namespace matred

#endif  // MATRED_SET_FAMILY_HPP_
