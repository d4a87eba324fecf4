#pragma once

#include <functional>
#include <vector>

#include "chromalg/intpoly.hpp"

namespace chromalg {

struct TooManySets : std::runtime_error {
  explicit TooManySets(const std::string& what) : std::runtime_error(what) {}
};

// ------------------------------------------------------------------- rings --

/// Interesting factor of R(1, a_1..a_{k-1}):
/// (1/q)·(∏(q − a_i) − ∏(−a_i)), monic of degree k−2.
IntPoly ring_interesting_factor(const std::vector<int>& a);

/// Interesting factor of R(1,1,a,b): x² − (a+b+1)x + (ab+a+b).
IntPoly ring_quadratic(int a, int b);

/// Full chromatic polynomial of R(1, a_1..a_{k-1}), via the clique-chain count
/// and a two-state transfer for the colour shared by both end cliques:
/// P = (q − a_1 − a_{k-1})·T + q·N.
IntPoly ring_full(const std::vector<int>& a);

/// Verifies h_{n·a}(q) = n^D · h_a(q/n) coefficientwise (D = k−2).
bool scaling_identity_check(const std::vector<int>& a, int n);

/// Interesting factor of the k-cycle: ((q−1)^{k−1} − (−1)^{k−1}) / q.
IntPoly cycle_interesting_factor(int k);

// --------------------------------------------------------------- bicliques --

struct BicliquePolys {
  IntPoly full;         // (q)_n · interesting
  IntPoly interesting;  // Möbius sum over set partitions, degree m
};

/// Chromatic polynomial of the biclique A(F_1..F_m) on clique sizes n and m,
/// by Möbius inversion over the partition lattice of {1..m}.
BicliquePolys biclique_polynomial(int n, const std::vector<std::vector<int>>& sets);

/// Enumerates set partitions of {0..m-1} via restricted growth strings.
void for_each_set_partition(int m, const std::function<void(const std::vector<std::vector<int>>&)>& fn);

// ------------------------------------------------- complete bipartite K_mn --

/// F_{m,n} with q(q−1)·F_{m,n} = P(K_{m,n}) = Σ_k S(m,k)(q)_k(q−k)^n.
IntPoly complete_bipartite_F(int m, int n);
IntPoly complete_bipartite_full(int m, int n);

// ------------------------------------------------------------ theta graphs --

/// G_{s,p}(x) = [x(x^s−1)^p − (x^s−x)^p] / [x(x−1)^p], in x = 1−q;
/// monic of degree p(s−1).
IntPoly theta_G(int s, int p);

/// Full chromatic polynomial of Θ^{s,p} in q: (−1)^{(s+1)p}·x(x−1)·G_{s,p}(x)
/// composed with x = 1−q.
IntPoly theta_full(int s, int p);

/// Exact divisibility test G_{s,2} | G_{s,p}.
bool theta_divides(int s, int p);

// ------------------------------------------------- generalised theta graphs --

/// g(x) = x^{ns} − x^{ns−1} + x^{n−1} − 1.
IntPoly gen_theta_g(int s, int n);

/// f(x) = (x^s−1)^n − x^{n−1}(x^{s−1}−1)^n.
IntPoly gen_theta_f(int s, int n);

/// Checks f(X^n) ≡ 0 (mod g(X)): every root α of g has α^n a root of f.
bool gen_theta_root_power_check(int s, int n);

/// Full chromatic polynomial of Θ_{c(s,n)} in q, assembled from
/// P(C_{ns−n+2})···P(C_{ns}) / P(K_2)^{n−1} · (−1)^{ns+1}·x·g(x), x = 1−q.
IntPoly gen_theta_chromatic(int s, int n);

/// g(x) with linear and cyclotomic factors removed (1 when nothing is left);
/// carries the roots the maxmaxflow disc bound speaks about.
IntPoly gen_theta_interesting(int s, int n);

/// True when f equals Φ_m for some m (f monic, degree >= 1).
bool is_cyclotomic_poly(const IntPoly& f);

}  // namespace chromalg
