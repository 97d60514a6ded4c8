// Copyright 2026 The bbforest Authors
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

#include "bbforest/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "bbforest/errors.hpp"

namespace bbforest {
namespace {

constexpr std::array<std::string_view, 8> kFamilyNames = {
    "complete",        "prop1",  "thm3_lambda2",      "thm3_lambda_half",
    "thh1_l1",         "thh1_l2", "random_min_degree", "random_th7",
};

void require(bool condition, const std::string& message) {
  if (!condition) throw ParameterError(message);
}

void ensure(bool condition, const char* what) {
  if (!condition) throw Error(std::string("construction postcondition: ") + what);
}

// mt19937_64's output sequence is fixed by the standard; the helpers below
// avoid the implementation-defined distributions so graphs are identical
// across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  bool bernoulli(double p) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
  }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

int vertex_degree(const GraphBuilder& b, Vertex v) {
  return v.side == Side::kFirst ? b.first_degree(v.index)
                                : b.second_degree(v.index);
}

bool adjacent(const GraphBuilder& b, Vertex v, int other) {
  return v.side == Side::kFirst ? b.has_edge(v.index, other)
                                : b.has_edge(other, v.index);
}

void connect(GraphBuilder& b, Vertex v, int other) {
  if (v.side == Side::kFirst) {
    b.add_edge(v.index, other);
  } else {
    b.add_edge(other, v.index);
  }
}

// Adds edges from v to randomly ordered non-neighbours until its degree
// reaches `target`.
void raise_degree(GraphBuilder& b, Vertex v, int target, SeededRng& rng) {
  std::vector<int> options;
  for (int u = 0; u < b.n(); ++u) {
    if (!adjacent(b, v, u)) options.push_back(u);
  }
  rng.shuffle(options);
  for (int u : options) {
    if (vertex_degree(b, v) >= target) break;
    connect(b, v, u);
  }
}

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> out;
  out.reserve(2 * n);
  for (int i = 0; i < n; ++i) out.push_back({Side::kFirst, i});
  for (int j = 0; j < n; ++j) out.push_back({Side::kSecond, j});
  return out;
}

GraphBuilder random_min_degree_builder(int n, int delta_min,
                                       std::uint64_t seed) {
  require(n >= 1, "random_min_degree: n must be positive");
  require(delta_min >= 0 && delta_min <= n,
          "random_min_degree: need 0 <= delta_min <= n");
  SeededRng rng(seed);
  const double p =
      std::max(0.5, static_cast<double>(delta_min + 1) / static_cast<double>(n));
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (rng.bernoulli(p)) b.add_edge(i, j);
    }
  }
  std::vector<Vertex> order = all_vertices(n);
  rng.shuffle(order);
  for (const Vertex& v : order) {
    if (vertex_degree(b, v) < delta_min) raise_degree(b, v, delta_min, rng);
  }
  return b;
}

}  // namespace

std::string_view family_name(Family family) {
  return kFamilyNames[static_cast<std::size_t>(family)];
}

std::optional<Family> parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  }
  return std::nullopt;
}

int degree_threshold(int n) { return (n + 3) / 2; }

BalancedBipartiteGraph complete_balanced(int n) {
  require(n >= 1, "complete_balanced: n must be positive");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b.add_edge(i, j);
  }
  return b.freeze();
}

BalancedBipartiteGraph prop1_construction(int n) {
  require(n >= 2, "prop1: n must be at least 2");
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b.add_edge(i, j);
  }
  const int floor_half = n / 2;
  const int ceil_half = (n + 1) / 2;
  for (int j = 0; j < floor_half; ++j) b.remove_edge(0, j);
  for (int j = ceil_half; j < n; ++j) b.remove_edge(1, j);
  BalancedBipartiteGraph g = b.freeze();
  ensure(g.degree({Side::kFirst, 0}) == ceil_half, "d(a1) = ceil(n/2)");
  ensure(g.degree({Side::kFirst, 1}) == ceil_half, "d(a2) = ceil(n/2)");
  ensure(g.min_degree() == ceil_half, "min degree = ceil(n/2)");
  return g;
}

WitnessedGraph thm3_lambda2(int n) {
  require(n >= 4 && n % 2 == 0, "thm3_lambda2: n must be even and >= 4");
  const int half = n / 2;
  GraphBuilder b(n);
  // X: a1 -> b_0..b_{half-1}, a2 -> b_{half-1}..b_{n-2}; one shared vertex.
  for (int j = 0; j < half; ++j) b.add_edge(0, j);
  for (int j = half - 1; j <= n - 2; ++j) b.add_edge(1, j);
  const int h = n - 1;
  // Y: h -> f_0..f_{half-2}.
  for (int f = 0; f < half - 1; ++f) b.add_edge(2 + f, h);
  // A × H and B × F.
  b.add_edge(0, h);
  b.add_edge(1, h);
  for (int f = 2; f < n; ++f) {
    for (int j = 0; j <= n - 2; ++j) b.add_edge(f, j);
  }
  WitnessedGraph out{b.freeze(), VertexSubset{0b11, low_bits(n - 1)}};
  ensure(out.graph.min_degree() >= half + 1, "min degree >= n/2 + 1");
  ensure(out.witness.size() == n + 1, "|S| = n + 1");
  ensure(is_induced_forest(out.graph, out.witness), "S induces a forest");
  ensure(out.witness.balance() == 2, "|S ∩ (A ∪ F)| = 2");
  return out;
}

WitnessedGraph thm3_lambda_half(int n) {
  require(n >= 4 && n % 2 == 0, "thm3_lambda_half: n must be even and >= 4");
  const int half = n / 2;
  GraphBuilder b(n);
  // X: path b0 a0 b1 a1 ... a_{half-1} b_half.
  for (int a = 0; a < half; ++a) {
    b.add_edge(a, a);
    b.add_edge(a, a + 1);
  }
  // Y: h_j - f_j for the half-1 vertices of H.
  for (int j = 0; j < half - 1; ++j) b.add_edge(half + j, half + 1 + j);
  // A × H and B × F.
  for (int a = 0; a < half; ++a) {
    for (int j = half + 1; j < n; ++j) b.add_edge(a, j);
  }
  for (int f = half; f < n; ++f) {
    for (int j = 0; j <= half; ++j) b.add_edge(f, j);
  }
  WitnessedGraph out{b.freeze(), VertexSubset{low_bits(half), low_bits(half + 1)}};
  ensure(out.graph.min_degree() >= half + 1, "min degree >= n/2 + 1");
  ensure(out.witness.size() == n + 1, "|S| = n + 1");
  ensure(is_induced_forest(out.graph, out.witness), "S induces a forest");
  ensure(out.witness.balance() == half, "|S ∩ (A ∪ F)| = n/2");
  return out;
}

BalancedBipartiteGraph thh1_l1(int n, int k) {
  require(n % 2 == 1, "thh1_l1: n must be odd");
  require(k >= 2 && n >= k - 1, "thh1_l1: need k >= 2 and n >= k - 1");
  require(n + 1 <= kMaxPartSize, "thh1_l1: n too large");
  const int x = n;
  const int y = n;
  GraphBuilder b(n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b.add_edge(i, j);
  }
  b.add_edge(x, y);
  // w = second-part 0, w_1..w_{k-2} = second-part 1..k-2.
  for (int j = 0; j <= k - 2; ++j) b.add_edge(x, j);
  for (int i = 0; i < n; ++i) b.add_edge(i, y);
  BalancedBipartiteGraph g = b.freeze();
  ensure(g.vertex_count() == 2 * n + 2, "|V| = 2n + 2");
  ensure(g.degree({Side::kFirst, x}) == k, "d(x) = k");
  ensure(g.min_degree() == k, "min degree = k");
  return g;
}

BalancedBipartiteGraph thh1_l2(int n, int k) {
  require(n % 2 == 0 && n >= 2, "thh1_l2: n must be even");
  require(k >= 2 && k - 1 <= n / 2 - 1, "thh1_l2: need 2 <= k <= n/2");
  require(n + 1 <= kMaxPartSize, "thh1_l2: n too large");
  const int half = n / 2;
  const int x = n;
  const int y = n;
  GraphBuilder b(n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b.add_edge(i, j);
  }
  // v = first-part 0 keeps degree n/2 + 1; its non-neighbours w_1..w_{n/2-1}
  // are second-part half+1..n-1.
  for (int j = half + 1; j < n; ++j) b.remove_edge(0, j);
  b.add_edge(x, y);
  for (int t = 0; t < k - 1; ++t) b.add_edge(x, half + 1 + t);
  for (int u = 0; u < k; ++u) b.add_edge(u, y);
  BalancedBipartiteGraph g = b.freeze();
  ensure(g.vertex_count() == 2 * n + 2, "|V| = 2n + 2");
  ensure(g.degree({Side::kFirst, x}) == k, "d(x) = k");
  ensure(g.min_degree() == k, "min degree = k");
  ensure(is_induced_forest(g, thh1_l2_witness(n)), "V2 ∪ {x, v} is a forest");
  return g;
}

VertexSubset thh1_l2_witness(int n) {
  return VertexSubset{Row{1} | (Row{1} << n), low_bits(n + 1)};
}

BalancedBipartiteGraph random_min_degree(int n, int delta_min,
                                         std::uint64_t seed) {
  BalancedBipartiteGraph g =
      random_min_degree_builder(n, delta_min, seed).freeze();
  ensure(g.min_degree() >= delta_min, "min degree >= delta_min");
  return g;
}

BalancedBipartiteGraph random_th7(int n, std::uint64_t seed) {
  require(n >= 3 && n % 2 == 1, "random_th7: n must be odd and >= 3");
  const int floor_degree = (n + 1) / 2;
  GraphBuilder b = random_min_degree_builder(n, floor_degree, seed);
  // Floor repair draws from a second stream derived from the seed.
  SeededRng rng(seed ^ 0x9E3779B97F4A7C15ULL);
  for (Side side : {Side::kFirst, Side::kSecond}) {
    std::vector<Vertex> at_floor;
    for (int i = 0; i < n; ++i) {
      const Vertex v{side, i};
      if (vertex_degree(b, v) == floor_degree) at_floor.push_back(v);
    }
    rng.shuffle(at_floor);
    for (std::size_t t = 1; t < at_floor.size(); ++t) {
      if (vertex_degree(b, at_floor[t]) == floor_degree) {
        raise_degree(b, at_floor[t], floor_degree + 1, rng);
      }
    }
  }
  BalancedBipartiteGraph g = b.freeze();
  ensure(g.min_degree() >= floor_degree, "min degree >= (n+1)/2");
  for (Side side : {Side::kFirst, Side::kSecond}) {
    int count = 0;
    for (int i = 0; i < n; ++i) {
      if (g.degree({side, i}) == floor_degree) ++count;
    }
    ensure(count <= 1, "at most one floor-degree vertex per part");
  }
  return g;
}

BalancedBipartiteGraph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::kComplete:
      return complete_balanced(spec.n);
    case Family::kProp1:
      return prop1_construction(spec.n);
    case Family::kThm3Lambda2:
      return thm3_lambda2(spec.n).graph;
    case Family::kThm3LambdaHalf:
      return thm3_lambda_half(spec.n).graph;
    case Family::kThh1L1:
      require(spec.k.has_value(), "thh1_l1 needs k");
      return thh1_l1(spec.n, *spec.k);
    case Family::kThh1L2:
      require(spec.k.has_value(), "thh1_l2 needs k");
      return thh1_l2(spec.n, *spec.k);
    case Family::kRandomMinDegree:
      return random_min_degree(spec.n,
                               spec.delta_min.value_or(degree_threshold(spec.n)),
                               spec.seed);
    case Family::kRandomTh7:
      return random_th7(spec.n, spec.seed);
  }
  throw ParameterError("unknown generator family");
}

}  // namespace bbforest
