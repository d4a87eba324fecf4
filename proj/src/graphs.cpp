#include "chromalg/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace chromalg {

namespace {

using Mask = std::uint32_t;

int popcount(Mask m) { return std::popcount(m); }

struct Engine {
  // adjacency masks over the original vertex numbering; `active` selects the
  // live vertices of the current subproblem
  std::vector<Mask> adj;

  IntPoly solve(Mask active) {
    IntPoly result = IntPoly::one();
    // split off connected components
    Mask rest = active;
    while (rest) {
      int start = std::countr_zero(rest);
      Mask comp = Mask(1) << start;
      while (true) {
        Mask grow = comp;
        for (Mask m = comp; m;) {
          int v = std::countr_zero(m);
          m &= m - 1;
          grow |= adj[static_cast<std::size_t>(v)] & active;
        }
        if (grow == comp) break;
        comp = grow;
      }
      rest &= ~comp;
      result = result * solve_connected(comp);
    }
    return result;
  }

  IntPoly solve_connected(Mask active) {
    const int k = popcount(active);
    if (k == 1) return IntPoly::x();  // single vertex: q
    long edges = 0;
    for (Mask m = active; m;) {
      int v = std::countr_zero(m);
      m &= m - 1;
      edges += popcount(adj[static_cast<std::size_t>(v)] & active);
    }
    edges /= 2;
    const long complete = static_cast<long>(k) * (k - 1) / 2;
    if (edges == complete) return falling_factorial(k);
    if (edges == k - 1) {
      // spanning tree: q(q-1)^(k-1)
      return IntPoly::x() * pow(IntPoly{-1, 1}, k - 1);
    }

    const bool dense = 2 * edges > complete;
    int bu = -1, bv = -1, best = -1;
    for (Mask mu = active; mu;) {
      int u = std::countr_zero(mu);
      mu &= mu - 1;
      Mask candidates =
          dense ? (active & ~adj[static_cast<std::size_t>(u)] & ~(Mask(1) << u))
                : (adj[static_cast<std::size_t>(u)] & active);
      for (Mask mv = candidates; mv;) {
        int v = std::countr_zero(mv);
        mv &= mv - 1;
        if (v <= u) continue;
        int common = popcount(adj[static_cast<std::size_t>(u)] &
                              adj[static_cast<std::size_t>(v)] & active);
        if (common > best) {
          best = common;
          bu = u;
          bv = v;
        }
      }
    }

    // contraction branch: merge bv into bu (parallel edges collapse)
    std::vector<Mask> saved = adj;
    for (Mask m = adj[static_cast<std::size_t>(bv)] & active; m;) {
      int w = std::countr_zero(m);
      m &= m - 1;
      adj[static_cast<std::size_t>(w)] &= ~(Mask(1) << bv);
      if (w != bu) {
        adj[static_cast<std::size_t>(w)] |= Mask(1) << bu;
        adj[static_cast<std::size_t>(bu)] |= Mask(1) << w;
      }
    }
    adj[static_cast<std::size_t>(bu)] &= ~(Mask(1) << bu);
    IntPoly contracted = solve(active & ~(Mask(1) << bv));
    adj = std::move(saved);

    if (dense) {
      // P(G) = P(G + uv) + P(G/uv), toward the complete graph
      adj[static_cast<std::size_t>(bu)] |= Mask(1) << bv;
      adj[static_cast<std::size_t>(bv)] |= Mask(1) << bu;
      IntPoly added = solve_connected(active);
      adj[static_cast<std::size_t>(bu)] &= ~(Mask(1) << bv);
      adj[static_cast<std::size_t>(bv)] &= ~(Mask(1) << bu);
      return added + contracted;
    }
    // P(G) = P(G - uv) - P(G/uv)
    adj[static_cast<std::size_t>(bu)] &= ~(Mask(1) << bv);
    adj[static_cast<std::size_t>(bv)] &= ~(Mask(1) << bu);
    IntPoly deleted = solve(active);
    adj[static_cast<std::size_t>(bu)] |= Mask(1) << bv;
    adj[static_cast<std::size_t>(bv)] |= Mask(1) << bu;
    return deleted - contracted;
  }
};

void require_positive(bool ok, const char* what) {
  if (!ok) throw InvalidSpec(what);
}

}  // namespace

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw InvalidSpec("make_graph: negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw InvalidSpec("make_graph: loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidSpec("make_graph: endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{n, std::move(edges)};
}

Graph build(const FamilySpec& spec) {
  std::vector<std::pair<int, int>> edges;
  auto complete_on = [&edges](int lo, int hi) {  // clique on [lo, hi)
    for (int u = lo; u < hi; ++u)
      for (int v = u + 1; v < hi; ++v) edges.emplace_back(u, v);
  };

  if (const auto* ring = std::get_if<RingSpec>(&spec)) {
    const int k = static_cast<int>(ring->sizes.size());
    require_positive(k >= 3, "ring: needs at least 3 cliques");
    for (int s : ring->sizes) require_positive(s >= 1, "ring: clique sizes must be positive");
    std::vector<int> offset(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 0; i < k; ++i)
      offset[static_cast<std::size_t>(i) + 1] =
          offset[static_cast<std::size_t>(i)] + ring->sizes[static_cast<std::size_t>(i)];
    const int n = offset.back();
    for (int i = 0; i < k; ++i) {
      complete_on(offset[static_cast<std::size_t>(i)], offset[static_cast<std::size_t>(i) + 1]);
      const int j = (i + 1) % k;
      for (int u = offset[static_cast<std::size_t>(i)]; u < offset[static_cast<std::size_t>(i) + 1]; ++u)
        for (int v = offset[static_cast<std::size_t>(j)]; v < offset[static_cast<std::size_t>(j) + 1]; ++v)
          edges.emplace_back(u, v);
    }
    return make_graph(n, std::move(edges));
  }
  if (const auto* bi = std::get_if<BicliqueSpec>(&spec)) {
    const int n = bi->n;
    const int m = static_cast<int>(bi->sets.size());
    require_positive(n >= 1 && m >= 1, "biclique: need nonempty cliques");
    complete_on(0, n);
    complete_on(n, n + m);
    for (int i = 0; i < m; ++i)
      for (int v : bi->sets[static_cast<std::size_t>(i)]) {
        require_positive(v >= 0 && v < n, "biclique: set element out of range");
        edges.emplace_back(n + i, v);
      }
    return make_graph(n + m, std::move(edges));
  }
  if (const auto* kb = std::get_if<CompleteBipartiteSpec>(&spec)) {
    require_positive(kb->m >= 1 && kb->n >= 1, "kmn: parts must be nonempty");
    for (int u = 0; u < kb->m; ++u)
      for (int v = 0; v < kb->n; ++v) edges.emplace_back(u, kb->m + v);
    return make_graph(kb->m + kb->n, std::move(edges));
  }
  if (const auto* th = std::get_if<ThetaSpec>(&spec)) {
    require_positive(th->s >= 2 && th->p >= 2, "theta: s and p must be >= 2");
    int next = 2;
    for (int j = 0; j < th->p; ++j) {
      int prev = 0;
      for (int i = 0; i < th->s - 1; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
      }
      edges.emplace_back(prev, 1);
    }
    return make_graph(next, std::move(edges));
  }
  const auto& gt = std::get<GenThetaSpec>(spec);
  require_positive(gt.s >= 2 && gt.n >= 2, "gentheta: s and n must be >= 2");
  int next = 2;
  for (int j = 1; j <= gt.n; ++j) {
    const int len = gt.n * gt.s - gt.n + j;
    int prev = 0;
    for (int i = 0; i < len - 1; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return make_graph(next, std::move(edges));
}

int spec_vertex_count(const FamilySpec& spec) { return build(spec).n; }

std::string family_to_string(const FamilySpec& spec) {
  std::ostringstream os;
  if (const auto* ring = std::get_if<RingSpec>(&spec)) {
    os << "ring:";
    for (std::size_t i = 0; i < ring->sizes.size(); ++i)
      os << (i ? "," : "") << ring->sizes[i];
  } else if (const auto* bi = std::get_if<BicliqueSpec>(&spec)) {
    os << "biclique:" << bi->n << "|";
    for (std::size_t i = 0; i < bi->sets.size(); ++i) {
      if (i) os << ";";
      for (std::size_t j = 0; j < bi->sets[i].size(); ++j)
        os << (j ? "," : "") << bi->sets[i][j];
    }
  } else if (const auto* kb = std::get_if<CompleteBipartiteSpec>(&spec)) {
    os << "kmn:" << kb->m << "," << kb->n;
  } else if (const auto* th = std::get_if<ThetaSpec>(&spec)) {
    os << "theta:" << th->s << "," << th->p;
  } else {
    const auto& gt = std::get<GenThetaSpec>(spec);
    os << "gentheta:" << gt.s << "," << gt.n;
  }
  return os.str();
}

IntPoly chromatic_polynomial(const Graph& g, int cap) {
  if (g.n > cap || g.n > 31)
    throw TooLarge("chromatic_polynomial: vertex count exceeds cap");
  if (g.n == 0) return IntPoly::one();
  Engine engine;
  engine.adj.assign(static_cast<std::size_t>(g.n), 0);
  for (auto [u, v] : g.edges) {
    engine.adj[static_cast<std::size_t>(u)] |= Mask(1) << v;
    engine.adj[static_cast<std::size_t>(v)] |= Mask(1) << u;
  }
  return engine.solve(g.n == 31 ? ~Mask(0) : (Mask(1) << g.n) - 1);
}

Int count_colourings(const Graph& g, int q) {
  if (g.n > 8 || q > 6) throw TooLarge("count_colourings: brute force caps are n <= 8, q <= 6");
  if (q < 0) throw std::invalid_argument("count_colourings: negative colour count");
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(g.n));
  for (auto [u, v] : g.edges) {
    nbr[static_cast<std::size_t>(u)].push_back(v);
    nbr[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<int> colour(static_cast<std::size_t>(g.n), -1);
  Int total = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == g.n) {
      ++total;
      return;
    }
    for (int c = 0; c < q; ++c) {
      bool ok = true;
      for (int w : nbr[static_cast<std::size_t>(v)])
        if (colour[static_cast<std::size_t>(w)] == c) ok = false;
      if (!ok) continue;
      colour[static_cast<std::size_t>(v)] = c;
      self(self, v + 1);
      colour[static_cast<std::size_t>(v)] = -1;
    }
  };
  rec(rec, 0);
  return total;
}

Graph join_complete(const Graph& g, int n) {
  if (n < 0) throw InvalidSpec("join_complete: n must be >= 0");
  std::vector<std::pair<int, int>> edges = g.edges;
  for (int i = 0; i < n; ++i) {
    const int v = g.n + i;
    for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  return make_graph(g.n + n, std::move(edges));
}

Graph parse_graph(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (ls >> n) {
        if (n < 0) throw ParseError("graph: negative vertex count", lineno);
        std::string extra;
        if (ls >> extra) throw ParseError("graph: trailing tokens after vertex count", lineno);
      }
      continue;
    }
    int u, v;
    if (!(ls >> u)) continue;  // blank
    if (!(ls >> v)) throw ParseError("graph: edge line needs two endpoints", lineno);
    std::string extra;
    if (ls >> extra) throw ParseError("graph: trailing tokens on edge line", lineno);
    if (u == v) throw ParseError("graph: loop edge", lineno);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("graph: endpoint out of range", lineno);
    auto e = std::minmax(u, v);
    if (std::find(edges.begin(), edges.end(), std::make_pair(e.first, e.second)) != edges.end())
      throw ParseError("graph: duplicate edge", lineno);
    edges.emplace_back(e.first, e.second);
  }
  if (n < 0) throw ParseError("graph: missing vertex count", 0);
  return make_graph(n, std::move(edges));
}

}  // namespace chromalg
