#pragma once

#include <string>
#include <variant>
#include <vector>

#include "chromalg/intpoly.hpp"

namespace chromalg {

struct InvalidSpec : std::runtime_error {
  explicit InvalidSpec(const std::string& what) : std::runtime_error(what) {}
};
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

/// Undirected simple graph; edges normalized to u < v, sorted, unique.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Validates endpoints, rejects loops, drops duplicate edges.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

struct RingSpec {
  std::vector<int> sizes;  // clique sizes in cyclic order, k >= 3
};
struct BicliqueSpec {
  int n = 0;                           // size of clique C
  std::vector<std::vector<int>> sets;  // F_i subsets of {0..n-1}
};
struct CompleteBipartiteSpec {
  int m = 0, n = 0;
};
struct ThetaSpec {
  int s = 0, p = 0;  // p internally disjoint paths of length s
};
struct GenThetaSpec {
  int s = 0, n = 0;  // n paths of lengths ns-n+1 .. ns
};

using FamilySpec =
    std::variant<RingSpec, BicliqueSpec, CompleteBipartiteSpec, ThetaSpec, GenThetaSpec>;

Graph build(const FamilySpec& spec);
int spec_vertex_count(const FamilySpec& spec);
std::string family_to_string(const FamilySpec& spec);

/// Exact chromatic polynomial by deletion-contraction (addition-contraction on
/// dense subproblems); components multiply, forests and cliques close the
/// recursion. Throws TooLarge above the vertex cap.
IntPoly chromatic_polynomial(const Graph& g, int cap = 18);

/// Exhaustive count of proper q-colourings; brute force, n <= 8 and q <= 6.
Int count_colourings(const Graph& g, int q);

/// G + K_n: n new vertices joined to each other and to all of G.
Graph join_complete(const Graph& g, int n);

/// First line vertex count, then `u v` edge lines (0-based); '#' comments.
Graph parse_graph(const std::string& text);

}  // namespace chromalg
