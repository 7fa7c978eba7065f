#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "koszul_lab/canonical.hpp"
#include "koszul_lab/graph.hpp"
#include "koszul_lab/semigroup.hpp"
#include "koszul_lab/structure.hpp"
#include "oracles.hpp"

using namespace koszul;

namespace {

// Lexicographic edge order of C6: 12 16 23 34 45 56.
constexpr std::size_t kC6_23 = 2;
constexpr std::size_t kC6_56 = 5;

MonoidElement gen(const MonoidBasis& b, std::size_t i) { return {b.generator(i), 1}; }

bool oracle_pairwise_passes(const MonoidBasis& b, int d) {
  const oracle::Semigroup s(b.generators(), d);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      for (const auto& [x, deg] : oracle::intersection_min_gens(s, b.generator(i), 1, b.generator(j), 1))
        if (deg >= 3) return false;
  return true;
}

}  // namespace

TEST_CASE("edge ring bases") {
  CHECK(edge_ring_basis(complete_graph(3)).generators() == std::vector<IntVector>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(edge_ring_basis(cycle_graph(4)).generators() ==
        std::vector<IntVector>{{1, 1, 0, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}});
  CHECK(edge_ring_basis(Graph(2, {{1, 2}})).generators() == std::vector<IntVector>{{1, 1}});
  CHECK_THROWS_AS(edge_ring_basis(Graph(3)), std::invalid_argument);
}

TEST_CASE("monoid basis validation") {
  CHECK_THROWS_AS(MonoidBasis(2, {{1, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(MonoidBasis(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(MonoidBasis(2, {{1, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(MonoidBasis(2, {{1, -1, 2}}), std::invalid_argument);
  const MonoidBasis b(3, {{2, 0, 0}, {1, 1, 0}});
  CHECK(b.generator_weight() == 2);
  CHECK(b.degree_of({3, 1, 0}) == 2);
  CHECK_FALSE(b.degree_of({1, 0, 0}).has_value());
}

TEST_CASE("veronese bases") {
  CHECK(veronese_basis(4, 2).generators() == edge_ring_basis(complete_graph(4)).generators());
  CHECK(veronese_basis(3, 2).generators() == edge_ring_basis(complete_graph(3)).generators());
  const auto v54 = veronese_basis(5, 4);
  CHECK(v54.size() == 5);
  CHECK(v54.generator(0) == IntVector{1, 1, 1, 1, 0});
  CHECK(v54.generator(4) == IntVector{0, 1, 1, 1, 1});
  CHECK(veronese_basis(6, 3).size() == 20);
  CHECK_THROWS_AS(veronese_basis(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(veronese_basis(4, 1), std::invalid_argument);
}

TEST_CASE("graded elements") {
  const auto k3 = elements_up_to_degree(edge_ring_basis(complete_graph(3)), 2);
  CHECK(k3.layer(2).size() == 6);
  const auto c4 = elements_up_to_degree(edge_ring_basis(cycle_graph(4)), 2);
  CHECK(c4.layer(2).size() == 9);
  const auto zero = elements_up_to_degree(edge_ring_basis(cycle_graph(4)), 0);
  REQUIRE(zero.max_degree() == 0);
  CHECK(zero.layer(0) == std::vector<IntVector>{{0, 0, 0, 0}});
  CHECK(c4.contains({1, 1, 1, 1}, 2));
  CHECK_FALSE(c4.contains({1, 1, 1, 1}, 1));
  CHECK_FALSE(c4.contains({1, 1, 1, 1}, 7));
}

TEST_CASE("graded elements agree with explicit sums") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Graph g = oracle::random_connected_graph(rng, n, 0.5);
    const auto b = edge_ring_basis(g);
    const auto table = elements_up_to_degree(b, 4);
    for (int d = 0; d <= 4; ++d) {
      const auto expected = d == 0 ? std::set<oracle::Vec>{oracle::Vec(static_cast<std::size_t>(n), 0)}
                                   : oracle::sums_of_degree(b.generators(), d);
      CHECK(std::set<IntVector>(table.layer(d).begin(), table.layer(d).end()) == expected);
      CHECK(std::is_sorted(table.layer(d).begin(), table.layer(d).end()));
      for (const auto& v : table.layer(d)) {
        int sum = 0;
        for (int x : v) sum += x;
        CHECK(sum == d * b.generator_weight());
      }
    }
  }
}

TEST_CASE("membership") {
  const auto c4 = edge_ring_basis(cycle_graph(4));
  CHECK(membership({0, 0, 0, 0}, c4));
  CHECK(membership({1, 1, 1, 1}, c4));
  CHECK_FALSE(membership({1, 0, 1, 0}, c4));
  CHECK_FALSE(membership({2, 0, 0, 0}, c4));
  CHECK_FALSE(membership({1, 1, 1}, c4));
  CHECK_FALSE(membership({1, 0, 0, 1, 0, 0}, edge_ring_basis(cycle_graph(6))));
  CHECK(membership({2, 2, 2, 2, 2, 2}, edge_ring_basis(cycle_graph(6))));
  CHECK_THROWS_AS(make_element(c4, {1, 0, 1, 0}), std::invalid_argument);
  CHECK(make_element(c4, {2, 1, 1, 2}).degree == 3);
}

TEST_CASE("membership agrees with explicit sums") {
  const auto b = edge_ring_basis(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 3}}));
  const oracle::Semigroup s(b.generators(), 5);
  for (int a = 0; a <= 2; ++a)
    for (int c = 0; c <= 2; ++c)
      for (int d = 0; d <= 2; ++d)
        for (int e = 0; e <= 2; ++e)
          for (int f = 0; f <= 2; ++f) {
            const IntVector v{a, c, d, e, f};
            const int sum = a + c + d + e + f;
            const bool expected = sum % 2 == 0 && s.in(v, sum / 2);
            CHECK(membership(v, b) == expected);
          }
}

TEST_CASE("principal intersections") {
  const auto c4 = edge_ring_basis(cycle_graph(4));
  const auto self = principal_intersection_min_gens(gen(c4, 0), gen(c4, 0), c4, 4);
  REQUIRE(self.size() == 1);
  CHECK(self[0].element == c4.generator(0));
  CHECK(self[0].degree == 1);

  // X1X2 and X3X4 are lexicographic indices 0 and 3.
  const auto opp = principal_intersection_min_gens(gen(c4, 0), gen(c4, 3), c4, 4);
  REQUIRE(opp.size() == 1);
  CHECK(opp[0].element == IntVector{1, 1, 1, 1});
  CHECK(opp[0].degree == 2);
  CHECK(opp[0].quotient == IntVector{0, 0, 0, 0});
  CHECK(opp[0].quotient_in_monoid);

  const auto c6 = edge_ring_basis(cycle_graph(6));
  const auto w = principal_intersection_min_gens(gen(c6, kC6_23), gen(c6, kC6_56), c6, 4);
  const auto hit = std::find_if(w.begin(), w.end(), [](const MonoidIdealWitness& x) {
    return x.element == IntVector{1, 1, 1, 1, 1, 1} && x.degree == 3;
  });
  REQUIRE(hit != w.end());
  CHECK(hit->quotient == IntVector{1, 0, 0, 1, 0, 0});
  CHECK_FALSE(hit->quotient_in_monoid);
}

TEST_CASE("principal intersections agree with the definition") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Graph g = oracle::random_connected_graph(rng, n, 0.55);
    if (g.size() < 2) continue;
    const auto b = edge_ring_basis(g);
    const oracle::Semigroup s(b.generators(), 4);
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i; j < b.size(); ++j) {
        std::set<std::pair<IntVector, int>> expected;
        for (auto& p : oracle::intersection_min_gens(s, b.generator(i), 1, b.generator(j), 1)) expected.insert(p);
        std::set<std::pair<IntVector, int>> got;
        for (const auto& x : principal_intersection_min_gens(gen(b, i), gen(b, j), b, 4)) got.insert({x.element, x.degree});
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("pairwise oracle on documented bases") {
  CHECK(strongly_koszul_pairwise(edge_ring_basis(complete_graph(4)), 4).passed);

  const auto k5 = strongly_koszul_pairwise(edge_ring_basis(complete_graph(5)), 4);
  CHECK_FALSE(k5.passed);
  REQUIRE(k5.failure);
  CHECK(k5.failure->witness.degree == 3);

  const auto c6 = strongly_koszul_pairwise(edge_ring_basis(cycle_graph(6)), 4);
  CHECK_FALSE(c6.passed);
  REQUIRE(c6.failure);
  CHECK(c6.failure->witness.degree == 3);
  CHECK(c6.failure->witness.element == IntVector{1, 1, 1, 1, 1, 1});

  CHECK_THROWS_AS(strongly_koszul_pairwise(edge_ring_basis(complete_graph(4)), 1), std::invalid_argument);
  CHECK(strongly_koszul_pairwise(edge_ring_basis(cycle_graph(6)), 2).passed);
}

TEST_CASE("pairwise oracle agrees with the definition-level brute force") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : connected_graphs(n)) {
      const auto b = edge_ring_basis(g);
      CHECK(strongly_koszul_pairwise(b, 4).passed == oracle_pairwise_passes(b, 4));
    }
  }
}

TEST_CASE("pairwise failures are valid witnesses") {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      const auto b = edge_ring_basis(g);
      const auto v = strongly_koszul_pairwise(b, 4);
      if (v.passed) continue;
      const auto& f = *v.failure;
      const auto& w = f.witness.element;
      const auto& u = b.generator(f.first);
      const auto& x = b.generator(f.second);
      CHECK(f.witness.degree >= 3);
      CHECK(membership(w, b));
      CHECK(membership(oracle::minus(w, u), b));
      CHECK(membership(oracle::minus(w, x), b));
      CHECK(f.witness.ideal_generators == std::vector<IntVector>{u, x});
      for (const auto& a : b.generators()) {
        const auto r = oracle::minus(w, a);
        if (!membership(r, b)) continue;
        CHECK_FALSE((membership(oracle::minus(r, u), b) && membership(oracle::minus(r, x), b)));
      }
    }
  }
}

TEST_CASE("pairwise oracle is monotone in the degree bound") {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      if (g.size() > 8) continue;
      const auto b = edge_ring_basis(g);
      const auto v3 = strongly_koszul_pairwise(b, 3);
      const auto v4 = strongly_koszul_pairwise(b, 4);
      if (!v3.passed) {
        REQUIRE_FALSE(v4.passed);
        CHECK(v3.failure->first == v4.failure->first);
        CHECK(v3.failure->second == v4.failure->second);
        CHECK(v3.failure->witness.element == v4.failure->witness.element);
      }
      if (v4.passed) CHECK(v3.passed);
    }
  }
}

TEST_CASE("colon checks") {
  const auto k4 = edge_ring_basis(complete_graph(4));
  const std::vector<std::size_t> one{2};
  CHECK(colon_subset_check(k4, one, 3).passed);
  const std::vector<std::size_t> all{0, 1, 2, 3, 4, 5};
  CHECK(colon_subset_check(k4, all, 3).passed);

  const auto c6 = edge_ring_basis(cycle_graph(6));
  const std::vector<std::size_t> pair{kC6_23, kC6_56};
  const auto v = colon_subset_check(c6, pair, 3);
  CHECK_FALSE(v.passed);
  REQUIRE(v.failure);
  CHECK(v.failure->position == 1);
  CHECK(v.failure->element == IntVector{1, 1, 1, 1, 0, 0});
  CHECK(v.failure->degree == 2);

  const std::vector<std::size_t> repeated{1, 1};
  CHECK_THROWS_AS(colon_subset_check(k4, repeated, 3), std::invalid_argument);
  const std::vector<std::size_t> out_of_range{0, 9};
  CHECK_THROWS_AS(colon_subset_check(k4, out_of_range, 3), std::invalid_argument);
}

TEST_CASE("pairwise and exhaustive colon checks agree on small bases") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : connected_graphs(n)) {
      if (g.size() > 6) continue;
      const auto b = edge_ring_basis(g);
      CHECK(strongly_koszul_pairwise(b, 4).passed == colon_check_all_subsequences(b, 4).passed);
    }
  }
}

TEST_CASE("hilbert functions") {
  CHECK(hilbert_function(edge_ring_basis(complete_graph(3)), 3) == std::vector<std::size_t>{1, 3, 6, 10});
  CHECK(hilbert_function(edge_ring_basis(cycle_graph(4)), 2) == std::vector<std::size_t>{1, 4, 9});
  const std::vector<Vertex> p1{1, 3};
  const std::vector<Vertex> p2{2, 4};
  const Graph split = split_construction(cycle_graph(5), 5, p1, p2);
  CHECK(hilbert_function(edge_ring_basis(cycle_graph(5)), 5) == hilbert_function(edge_ring_basis(split), 5));
  CHECK(hilbert_function(edge_ring_basis(cycle_graph(5)), 5) == std::vector<std::size_t>{1, 5, 15, 35, 70, 126});
}

TEST_CASE("veronese and complete graph verdicts coincide") {
  for (int n = 3; n <= 5; ++n)
    CHECK(strongly_koszul_pairwise(veronese_basis(n, 2), 4).passed ==
          strongly_koszul_pairwise(edge_ring_basis(complete_graph(n)), 4).passed);
}

TEST_CASE("coordinate permutation preserves fingerprints") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const Graph g = oracle::random_connected_graph(rng, n, 0.5);
    const auto b = edge_ring_basis(g);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto p = b.permute_coordinates(perm);
    CHECK(hilbert_function(b, 4) == hilbert_function(p, 4));
    CHECK(strongly_koszul_pairwise(b, 4).passed == strongly_koszul_pairwise(p, 4).passed);
  }
}
