#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "chromalg/graphs.hpp"

using namespace chromalg;

namespace {

IntPoly P(const std::string& s) { return parse_poly(s); }

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution flip(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

// brute-force isomorphism for tiny graphs
bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::pair<int, int>> be(b.edges.begin(), b.edges.end());
  do {
    bool ok = true;
    for (auto [u, v] : a.edges) {
      int pu = perm[static_cast<std::size_t>(u)], pv = perm[static_cast<std::size_t>(v)];
      if (!be.count(std::minmax(pu, pv))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph subdivided_k6() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (!(u == 0 && v == 1)) edges.emplace_back(u, v);
  edges.emplace_back(0, 6);
  edges.emplace_back(1, 6);
  return make_graph(7, std::move(edges));
}

}  // namespace

TEST_CASE("build families") {
  Graph c4 = build(RingSpec{{1, 1, 1, 1}});
  CHECK(c4.n == 4);
  CHECK(c4.edges.size() == 4);
  CHECK(chromatic_polynomial(c4) == P("q^4-4q^3+6q^2-3q"));

  Graph theta23 = build(ThetaSpec{2, 3});
  Graph k23 = build(CompleteBipartiteSpec{2, 3});
  CHECK(theta23.n == 5);
  CHECK(isomorphic(theta23, k23));

  CHECK(build(RingSpec{{1, 1, 1, 5}}).n == 8);
  CHECK(build(GenThetaSpec{2, 3}).n == 14);
  CHECK(build(ThetaSpec{4, 4}).n == 14);

  // R(1,1,5) is a complete join of three cliques: K_7
  Graph k7 = build(RingSpec{{1, 1, 5}});
  CHECK(k7.edges.size() == 21);
  CHECK(chromatic_polynomial(k7) == falling_factorial(7));

  CHECK_THROWS_AS(build(RingSpec{{1, 1}}), InvalidSpec);
  CHECK_THROWS_AS(build(RingSpec{{1, 0, 1}}), InvalidSpec);
  CHECK_THROWS_AS(build(ThetaSpec{1, 3}), InvalidSpec);
  CHECK_THROWS_AS(build(BicliqueSpec{3, {{0, 5}}}), InvalidSpec);
}

TEST_CASE("family strings") {
  CHECK(family_to_string(RingSpec{{1, 1, 1, 5}}) == "ring:1,1,1,5");
  CHECK(family_to_string(CompleteBipartiteSpec{3, 10}) == "kmn:3,10");
  CHECK(family_to_string(ThetaSpec{3, 2}) == "theta:3,2");
  CHECK(family_to_string(GenThetaSpec{2, 3}) == "gentheta:2,3");
  CHECK(family_to_string(BicliqueSpec{7, {{0, 1}, {2, 3}, {4, 5, 6}}}) ==
        "biclique:7|0,1;2,3;4,5,6");
}

TEST_CASE("engine basics") {
  CHECK(chromatic_polynomial(make_graph(2, {{0, 1}})) == P("q^2-q"));
  CHECK(chromatic_polynomial(make_graph(2, {})) == P("q^2"));
  CHECK(chromatic_polynomial(make_graph(0, {})) == IntPoly::one());
  CHECK(chromatic_polynomial(subdivided_k6()) ==
        P("q") * P("q-1") * P("q-2") * pow(P("q-3"), 3) * P("q-4"));
  CHECK_THROWS_AS(chromatic_polynomial(make_graph(19, {}), 18), TooLarge);
}

TEST_CASE("count_colourings") {
  Graph k3 = build(RingSpec{{1, 1, 1}});
  CHECK(count_colourings(k3, 3) == 6);
  CHECK(count_colourings(k3, 2) == 0);
  Graph c4 = build(RingSpec{{1, 1, 1, 1}});
  CHECK(count_colourings(c4, 2) == 2);
  CHECK_THROWS_AS(count_colourings(make_graph(9, {}), 2), TooLarge);
  CHECK_THROWS_AS(count_colourings(k3, 7), TooLarge);
}

TEST_CASE("oracle agreement on random graphs") {
  std::mt19937_64 rng(6174);
  for (int i = 0; i < 100; ++i) {
    int n = 1 + static_cast<int>(rng() % 6);
    Graph g = random_graph(rng, n, 0.45);
    IntPoly pg = chromatic_polynomial(g);
    for (int q = 0; q <= 4; ++q) CHECK(pg.eval(q) == count_colourings(g, q));
  }
}

TEST_CASE("chromatic polynomial shape invariants") {
  std::mt19937_64 rng(515);
  for (int i = 0; i < 60; ++i) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_graph(rng, n, 0.5);
    IntPoly pg = chromatic_polynomial(g);
    CHECK(pg.degree() == n);
    CHECK(pg.is_monic());
    CHECK(pg.coeff(0) == 0);
    for (int j = 0; j <= n; ++j) {
      Int c = pg.coeff(j) * ((n - j) % 2 == 0 ? 1 : -1);
      CHECK(c >= 0);
    }
  }
}

TEST_CASE("clique-sum identity") {
  std::mt19937_64 rng(808);
  for (int k = 1; k <= 3; ++k) {
    for (int iter = 0; iter < 10; ++iter) {
      // G1 on {0..a-1}, G2 on {0..b-1}; glue on the shared clique {0..k-1}
      int a = k + 2 + static_cast<int>(rng() % 3);
      int b = k + 2 + static_cast<int>(rng() % 3);
      Graph g1 = random_graph(rng, a, 0.5);
      Graph g2 = random_graph(rng, b, 0.5);
      auto force_clique = [k](Graph& g) {
        auto edges = g.edges;
        for (int u = 0; u < k; ++u)
          for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
        g = make_graph(g.n, std::move(edges));
      };
      force_clique(g1);
      force_clique(g2);
      // keep both sides connected to the shared clique so the gluing is honest
      std::vector<std::pair<int, int>> glued = g1.edges;
      for (auto [u, v] : g2.edges) {
        int uu = u < k ? u : u + a - k;
        int vv = v < k ? v : v + a - k;
        glued.emplace_back(std::min(uu, vv), std::max(uu, vv));
      }
      Graph g = make_graph(a + b - k, std::move(glued));
      IntPoly lhs = chromatic_polynomial(g) * falling_factorial(k);
      IntPoly rhs = chromatic_polynomial(g1) * chromatic_polynomial(g2);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("join identity") {
  CHECK(isomorphic(join_complete(make_graph(1, {}), 1), make_graph(2, {{0, 1}})));
  Graph c4 = build(RingSpec{{1, 1, 1, 1}});
  Graph w4 = join_complete(c4, 1);
  CHECK(chromatic_polynomial(w4) == IntPoly::x() * shift(chromatic_polynomial(c4), -1));
  CHECK(join_complete(c4, 0).edges == c4.edges);

  std::mt19937_64 rng(123);
  for (int iter = 0; iter < 20; ++iter) {
    int n = 1 + static_cast<int>(rng() % 3);
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.4);
    IntPoly lhs = chromatic_polynomial(join_complete(g, n));
    IntPoly rhs = falling_factorial(n) * shift(chromatic_polynomial(g), -n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("parse_graph") {
  Graph p3 = parse_graph("3\n0 1\n1 2\n");
  CHECK(p3.n == 3);
  CHECK(p3.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  Graph iso = parse_graph("2\n");
  CHECK(chromatic_polynomial(iso) == P("q^2"));

  Graph commented = parse_graph("# a path\n3\n0 1 # first\n1 2\n\n");
  CHECK(commented.edges.size() == 2);

  CHECK_THROWS_AS(parse_graph("3\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3\n0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("engine handles the dense grid corners") {
  // R(1,3,3,3,3): 13 vertices, 45 edges; exercised again by the families grid
  Graph ring = build(RingSpec{{1, 3, 3, 3, 3}});
  CHECK(ring.n == 13);
  IntPoly pg = chromatic_polynomial(ring);
  CHECK(pg.degree() == 13);
  CHECK(pg.is_monic());
  // adjacent 3-cliques exhaust 3 colours, so no proper 3-colouring exists
  CHECK(pg.eval(3) == 0);
  CHECK(pg.eval(1) == 0);
  CHECK(pg.eval(0) == 0);
}
