// Copyright 2026 The convexham Authors
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

#ifndef CONVEXHAM_GENERATORS_HPP
#define CONVEXHAM_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "convexham/graph.hpp"
#include "convexham/properties.hpp"
#include "convexham/sequence.hpp"

namespace convexham {

/// Seeded source of bounded integers.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded draws use rejection sampling on the raw 64-bit output
/// rather than std::uniform_int_distribution (whose algorithm is left to the
/// implementation), so a seed yields the same instances on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t r = engine_();
      if (r < limit) return r % bound;
    }
  }

  /// Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

class GenerationExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Uniform over the n(n+1)/2 intervals [l, r] with 1 <= l <= r <= n.
inline std::pair<int, int> random_interval(Rng& rng, int n) {
  auto k = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n + 1) / 2));
  for (int l = 1;; ++l) {
    const int span = n - l + 1;
    if (k < span) return {l, l + static_cast<int>(k)};
    k -= span;
  }
}

}  // namespace detail

/// ny intervals drawn independently and uniformly from all intervals of
/// [1..n]; labels y1..y<ny>.
inline ConvexBipartiteGraph gen_random(int n, int ny, std::uint64_t seed) {
  detail::require(n >= 1 && ny >= 0, "gen_random needs n >= 1 and ny >= 0");
  Rng rng(seed);
  std::vector<IntervalSpec> specs;
  specs.reserve(static_cast<std::size_t>(ny));
  for (int j = 1; j <= ny; ++j) {
    const auto [l, r] = detail::random_interval(rng, n);
    specs.push_back({"y" + std::to_string(j), l, r});
  }
  return build_graph(n, std::move(specs));
}

struct MonotoneSample {
  ConvexBipartiteGraph graph;
  int tries = 0;
};

/// Rejection sampler: each try draws |Y| uniformly from {n-1, n, n+1}, then
/// the intervals as in gen_random(), and keeps the first graph classified
/// Monotone. `tries` counts the draws used.
inline MonotoneSample gen_monotone(int n, std::uint64_t seed, int max_tries = 100000) {
  detail::require(n >= 1 && max_tries >= 1, "gen_monotone needs n >= 1 and max_tries >= 1");
  Rng rng(seed);
  for (int t = 1; t <= max_tries; ++t) {
    const int ny = n - 1 + rng.uniform(0, 2);
    std::vector<IntervalSpec> specs;
    for (int j = 1; j <= ny; ++j) {
      const auto [l, r] = detail::random_interval(rng, n);
      specs.push_back({"y" + std::to_string(j), l, r});
    }
    auto g = build_graph(n, std::move(specs));
    if (classify(g).kind == ClassKind::Monotone) return {std::move(g), t};
  }
  throw GenerationExhausted("no monotone graph with n = " + std::to_string(n) + " in " + std::to_string(max_tries) +
                            " tries");
}

/// G_k: the four-vertex template a:[1,2], b:[1,3], c:[2,4], d:[3,3] extended
/// to the right by e_i:[3+i, 4+i], 1 <= i <= k. n = 4 + k. The pendant d sits
/// on the interior vertex x_3, so every G_k is non-monotone.
inline ConvexBipartiteGraph gen_counterexample_family(int k) {
  detail::require(k >= 0, "gen_counterexample_family needs k >= 0");
  std::vector<IntervalSpec> specs{{"a", 1, 2}, {"b", 1, 3}, {"c", 2, 4}, {"d", 3, 3}};
  for (int i = 1; i <= k; ++i) specs.push_back({"e" + std::to_string(i), 3 + i, 4 + i});
  return build_graph(4 + k, std::move(specs));
}

/// The closed-form Hamiltonian path of G_k:
/// d, x_3, b, x_1, a, x_2, c, x_4, e_1, x_5, ..., e_k, x_{4+k}.
inline HamSequence counterexample_path(const ConvexBipartiteGraph& gk) {
  const int k = gk.n() - 4;
  HamSequence s;
  s.kind = SequenceKind::Path;
  auto y = [&](const std::string& label) { return Vertex::y(gk.find_label(label)); };
  s.vertices = {y("d"), Vertex::x(3), y("b"), Vertex::x(1), y("a"), Vertex::x(2), y("c"), Vertex::x(4)};
  for (int i = 1; i <= k; ++i) {
    s.vertices.push_back(y("e" + std::to_string(i)));
    s.vertices.push_back(Vertex::x(4 + i));
  }
  return s;
}

namespace detail {

inline ConvexBipartiteGraph widened(int n, std::vector<std::pair<int, int>> base, std::uint64_t seed, int widen) {
  require(widen >= 0, "widen must be >= 0");
  Rng rng(seed);
  std::vector<IntervalSpec> specs;
  specs.reserve(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    auto [l, r] = base[j];
    l = std::max(1, l - rng.uniform(0, widen));
    r = std::min(n, r + rng.uniform(0, widen));
    specs.push_back({"y" + std::to_string(j + 1), l, r});
  }
  return build_graph(n, std::move(specs));
}

}  // namespace detail

/// Planted Hamiltonian cycle x_1, y_1, x_2, ..., y_{n-1}, x_n, y_n: base
/// intervals y_i = [i, i+1] for i < n and y_n = [1, n], then each end pushed
/// outward by a uniform amount in [0, widen] (clamped to [1, n]). Widening
/// only adds edges, so the planted cycle survives.
inline ConvexBipartiteGraph gen_planted_hc(int n, std::uint64_t seed, int widen) {
  detail::require(n >= 2, "gen_planted_hc needs n >= 2");
  std::vector<std::pair<int, int>> base;
  base.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) base.emplace_back(i, i + 1);
  base.emplace_back(1, n);
  return detail::widened(n, std::move(base), seed, widen);
}

/// Planted Hamiltonian path x_1, y_1, ..., y_{n-1}, x_n from the base
/// intervals y_i = [i, i+1], widened as in gen_planted_hc(). Every window
/// [p, q] then holds at most q - p whole intervals and each gap keeps its own
/// base interval, so the graph is monotone with |Y| = n - 1.
inline ConvexBipartiteGraph gen_planted_hp(int n, std::uint64_t seed, int widen) {
  detail::require(n >= 2, "gen_planted_hp needs n >= 2");
  std::vector<std::pair<int, int>> base;
  base.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) base.emplace_back(i, i + 1);
  return detail::widened(n, std::move(base), seed, widen);
}

}  // namespace convexham

#endif  // CONVEXHAM_GENERATORS_HPP
