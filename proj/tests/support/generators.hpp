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

// Deterministic matroid corpus for property tests. Everything is seeded,
// so a failing case reproduces byte-for-byte on every run.

#ifndef TESTS_SUPPORT_GENERATORS_HPP_
#define TESTS_SUPPORT_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "matred/matroid.hpp"
#include "matred/subset.hpp"

namespace testsupport {

inline int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline matred::Matroid random_uniform(std::mt19937& rng, int max_n) {
  const int n = pick(rng, 1, max_n);
  return matred::Matroid::uniform(n, pick(rng, 0, n));
}

inline matred::Matroid random_gf2(std::mt19937& rng, int max_n) {
  const int n = pick(rng, 1, max_n);
  const int rows = pick(rng, 1, std::min(n, 4));
  std::vector<std::uint32_t> matrix(rows);
  const std::uint32_t full = matred::Subset::full(n).bits();
  for (std::uint32_t& row : matrix) {
    row = static_cast<std::uint32_t>(rng()) & full;
  }
  return matred::Matroid::gf2(n, matrix);
}

/// Random multigraph on at most 6 vertices; self-loops become loops of
/// the matroid, parallel edges become parallel elements.
inline matred::Matroid random_graphic(std::mt19937& rng, int max_edges) {
  const int vertices = pick(rng, 2, 6);
  const int n = pick(rng, 1, max_edges);
  std::vector<std::pair<int, int>> edges(n);
  for (auto& [a, b] : edges) {
    a = pick(rng, 0, vertices - 1);
    b = pick(rng, 0, vertices - 1);
  }
  return matred::Matroid::graphic(vertices, std::move(edges));
}

inline matred::Matroid random_partition(std::mt19937& rng, int max_n) {
  const int n = pick(rng, 1, max_n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<matred::Subset> blocks;
  std::vector<int> capacities;
  int used = 0;
  while (used < n) {
    const int width = pick(rng, 1, n - used);
    matred::Subset block;
    for (int i = 0; i < width; ++i) block = block.with(order[used + i]);
    used += width;
    blocks.push_back(block);
    capacities.push_back(pick(rng, 0, width));
  }
  return matred::Matroid::partition(n, std::move(blocks),
                                    std::move(capacities));
}

/// `count` matroids with universe sizes in [1, max_n], cycling through the
/// four representation kinds.
inline std::vector<matred::Matroid> matroid_corpus(int count, int max_n,
                                                   std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<matred::Matroid> corpus;
  corpus.reserve(count);
  for (int i = 0; i < count; ++i) {
    switch (i % 4) {
      case 0:
        corpus.push_back(random_uniform(rng, max_n));
        break;
      case 1:
        corpus.push_back(random_gf2(rng, max_n));
        break;
      case 2:
        corpus.push_back(random_graphic(rng, max_n));
        break;
      default:
        corpus.push_back(random_partition(rng, max_n));
        break;
    }
  }
  return corpus;
}

/// Integer-valued weights in [-9, 9]. Integer sums compare exactly in
/// double precision, so optimality checks can use ==.
inline std::vector<double> random_weights(std::mt19937& rng, int n) {
  std::vector<double> weights(n);
  for (double& w : weights) w = pick(rng, -9, 9);
  return weights;
}

}  // namespace testsupport

#endif  // TESTS_SUPPORT_GENERATORS_HPP_
