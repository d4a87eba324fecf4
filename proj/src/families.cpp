#include "chromalg/families.hpp"

#include <algorithm>
#include <functional>

#include "chromalg/factorization.hpp"

namespace chromalg {

namespace {

// ∏_{j=0}^{m-1} (q − c − j): falling factorial starting at q − c.
IntPoly ff_from(int c, int m) {
  IntPoly acc = IntPoly::one();
  for (int j = 0; j < m; ++j) acc = acc * IntPoly(std::vector<Int>{Int(-c - j), Int(1)});
  return acc;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

IntPoly ring_interesting_factor(const std::vector<int>& a) {
  require(a.size() >= 2, "ring_interesting_factor: need at least two entries");
  IntPoly prod = IntPoly::one();
  Int tail = 1;
  for (int ai : a) {
    require(ai >= 1, "ring_interesting_factor: entries must be positive");
    prod = prod * IntPoly(std::vector<Int>{Int(-ai), Int(1)});
    tail *= -ai;
  }
  return exact_div(prod - IntPoly::constant(tail), IntPoly::x());
}

IntPoly ring_quadratic(int a, int b) {
  require(a >= 1 && b >= 1, "ring_quadratic: a, b must be positive");
  return IntPoly(std::vector<Int>{Int(a) * b + a + b, Int(-(a + b + 1)), Int(1)});
}

IntPoly ring_full(const std::vector<int>& a) {
  require(a.size() >= 2, "ring_full: need at least two entries");
  const int k1 = static_cast<int>(a.size());  // k-1 chain cliques
  for (int ai : a) require(ai >= 1, "ring_full: entries must be positive");

  // chain count and the two-state transfer for a marked colour that must
  // appear in the first clique; u1/u0 = colorings with the mark present in
  // C_1 and present/absent in the current clique
  IntPoly T = ff_from(0, a[0]);
  IntPoly u1 = IntPoly::constant(a[0]) * ff_from(1, a[0] - 1);
  IntPoly u0 = IntPoly::zero();
  for (int i = 1; i < k1; ++i) {
    const int prev = a[static_cast<std::size_t>(i) - 1];
    const int cur = a[static_cast<std::size_t>(i)];
    IntPoly w_all = ff_from(prev, cur);
    IntPoly w_mark = IntPoly::constant(cur) * ff_from(prev + 1, cur - 1);
    T = T * w_all;
    IntPoly nu1 = u0 * w_mark;
    IntPoly nu0 = u0 * (w_all - w_mark) + u1 * w_all;
    u1 = std::move(nu1);
    u0 = std::move(nu0);
  }
  IntPoly head(std::vector<Int>{Int(-a.front() - a.back()), Int(1)});
  return head * T + IntPoly::x() * u1;
}

bool scaling_identity_check(const std::vector<int>& a, int n) {
  require(n >= 1, "scaling_identity_check: n must be positive");
  IntPoly base = ring_interesting_factor(a);
  std::vector<int> scaled(a);
  for (int& v : scaled) v *= n;
  IntPoly big = ring_interesting_factor(scaled);
  const int D = base.degree();
  if (big.degree() != D) return false;
  Int npow = 1;  // n^(D-i), built from the top
  for (int i = D; i >= 0; --i) {
    if (big.coeff(i) != npow * base.coeff(i)) return false;
    npow *= n;
  }
  return true;
}

IntPoly cycle_interesting_factor(int k) {
  require(k >= 3, "cycle_interesting_factor: k must be >= 3");
  IntPoly qm1_pow = pow(IntPoly{-1, 1}, k - 1);
  Int sign = (k - 1) % 2 == 0 ? 1 : -1;
  return exact_div(qm1_pow - IntPoly::constant(sign), IntPoly::x());
}

void for_each_set_partition(int m,
                            const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  std::vector<int> rgs(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int i, int maxblock) {
    if (i == m) {
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(maxblock) + 1);
      for (int j = 0; j < m; ++j)
        blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(j)])].push_back(j);
      fn(blocks);
      return;
    }
    for (int b = 0; b <= maxblock + 1; ++b) {
      rgs[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(maxblock, b));
    }
  };
  if (m == 0) return;
  rec(1, 0);  // element 0 is always in block 0
}

BicliquePolys biclique_polynomial(int n, const std::vector<std::vector<int>>& sets) {
  const int m = static_cast<int>(sets.size());
  if (m > 10) throw TooManySets("biclique_polynomial: at most 10 sets (Bell-number blowup)");
  require(m >= 1, "biclique_polynomial: need at least one set");
  require(n >= 0, "biclique_polynomial: n must be >= 0");
  std::vector<std::uint64_t> masks(sets.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (int v : sets[i]) {
      require(v >= 0 && v < n, "biclique_polynomial: set element out of range");
      masks[i] |= std::uint64_t(1) << v;
    }

  IntPoly interesting = IntPoly::zero();
  for_each_set_partition(m, [&](const std::vector<std::vector<int>>& blocks) {
    Int mobius = 1;
    IntPoly term = IntPoly::one();
    for (const auto& block : blocks) {
      Int factorial = 1;
      for (std::size_t j = 2; j < block.size(); ++j) factorial *= Int(j);
      if (block.size() % 2 == 0) factorial = -factorial;
      mobius *= factorial;
      std::uint64_t u = 0;
      for (int i : block) u |= masks[static_cast<std::size_t>(i)];
      term = term * IntPoly(std::vector<Int>{Int(-std::popcount(u)), Int(1)});
    }
    interesting = interesting + term * mobius;
  });
  return BicliquePolys{falling_factorial(n) * interesting, interesting};
}

IntPoly complete_bipartite_F(int m, int n) {
  require(m >= 1 && n >= 1, "complete_bipartite_F: m, n must be positive");
  IntPoly total = IntPoly::zero();
  for (int k = 1; k <= m; ++k) {
    IntPoly qmk = pow(IntPoly(std::vector<Int>{Int(-k), Int(1)}), n);
    total = total + falling_factorial(k) * qmk * stirling2(m, k);
  }
  return exact_div(total, falling_factorial(2));
}

IntPoly complete_bipartite_full(int m, int n) {
  return falling_factorial(2) * complete_bipartite_F(m, n);
}

IntPoly theta_G(int s, int p) {
  require(s >= 2 && p >= 2, "theta_G: s, p must be >= 2");
  IntPoly x = IntPoly::x();
  IntPoly xs = IntPoly::monomial(1, s);
  IntPoly numerator = x * pow(xs - IntPoly::one(), p) - pow(xs - x, p);
  IntPoly denominator = x * pow(IntPoly{-1, 1}, p);
  return exact_div(numerator, denominator);
}

IntPoly theta_full(int s, int p) {
  // P(Θ^{s,p}; x) = (−1)^{(s+1)p}·x·(x−1)·G_{s,p}(x), then substitute x = 1−q.
  IntPoly px = IntPoly::x() * IntPoly{-1, 1} * theta_G(s, p);
  if (((s + 1) * p) % 2 != 0) px = -px;
  return compose(px, IntPoly{1, -1});
}

bool theta_divides(int s, int p) {
  return divrem_monic(theta_G(s, p), theta_G(s, 2)).second.is_zero();
}

IntPoly gen_theta_g(int s, int n) {
  require(s >= 2 && n >= 2, "gen_theta_g: s, n must be >= 2");
  IntPoly g = IntPoly::monomial(1, n * s) - IntPoly::monomial(1, n * s - 1) +
              IntPoly::monomial(1, n - 1) - IntPoly::one();
  return g;
}

IntPoly gen_theta_f(int s, int n) {
  require(s >= 2 && n >= 2, "gen_theta_f: s, n must be >= 2");
  IntPoly xs = IntPoly::monomial(1, s);
  IntPoly xs1 = IntPoly::monomial(1, s - 1);
  return pow(xs - IntPoly::one(), n) -
         IntPoly::monomial(1, n - 1) * pow(xs1 - IntPoly::one(), n);
}

bool gen_theta_root_power_check(int s, int n) {
  IntPoly fxn = compose(gen_theta_f(s, n), IntPoly::monomial(1, n));
  return divrem_monic(fxn, gen_theta_g(s, n)).second.is_zero();
}

IntPoly gen_theta_chromatic(int s, int n) {
  require(s >= 2 && n >= 2, "gen_theta_chromatic: s, n must be >= 2");
  // cycle polynomials in x = 1-q: P(C_i) = (-1)^i (x^i - x)
  IntPoly acc = IntPoly::one();
  int sign = (n * s + 1) % 2 == 0 ? 1 : -1;
  for (int i = n * s - n + 2; i <= n * s; ++i) {
    acc = acc * (IntPoly::monomial(1, i) - IntPoly::x());
    if (i % 2 != 0) sign = -sign;
  }
  acc = exact_div(acc, pow(IntPoly{0, -1, 1}, n - 1));  // / (x^2 - x)^(n-1)
  acc = acc * IntPoly::x() * gen_theta_g(s, n) * Int(sign);
  return compose(acc, IntPoly{1, -1});
}

bool is_cyclotomic_poly(const IntPoly& f) {
  if (f.degree() < 1 || !f.is_monic()) return false;
  const int d = f.degree();
  for (int m = 1; m <= 2 * (d + 1) * (d + 1); ++m) {
    // cheap totient
    int phi = m, rest = m;
    for (int p = 2; p * p <= rest; ++p) {
      if (rest % p) continue;
      phi -= phi / p;
      while (rest % p == 0) rest /= p;
    }
    if (rest > 1) phi -= phi / rest;
    if (phi != d) continue;
    if (f == cyclotomic(m)) return true;
  }
  return false;
}

IntPoly gen_theta_interesting(int s, int n) {
  IntPoly acc = IntPoly::one();
  for (const auto& [g, mult] : factor(gen_theta_g(s, n)).factors) {
    if (g.degree() <= 1 || is_cyclotomic_poly(g)) continue;
    acc = acc * pow(g, mult);
  }
  return acc;
}

}  // namespace chromalg
