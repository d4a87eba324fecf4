#include "chromalg/factorization.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace chromalg {

namespace {

// ---------------------------------------------------------------- GF(p)[x] --

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using FPoly = std::vector<u64>;  // low to high, trimmed, zero = empty

struct Fp {
  u64 p;
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void fp_trim(FPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int fp_deg(const FPoly& a) { return static_cast<int>(a.size()) - 1; }

FPoly fp_x() { return FPoly{0, 1}; }

FPoly fp_add(const FPoly& a, const FPoly& b, const Fp& F) {
  FPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = F.add(c[i], b[i]);
  fp_trim(c);
  return c;
}

FPoly fp_sub(const FPoly& a, const FPoly& b, const Fp& F) {
  FPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = F.sub(c[i], b[i]);
  fp_trim(c);
  return c;
}

FPoly fp_mul(const FPoly& a, const FPoly& b, const Fp& F) {
  if (a.empty() || b.empty()) return {};
  FPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + static_cast<u128>(a[i]) * b[j]) % F.p;
  }
  fp_trim(c);
  return c;
}

FPoly fp_scale(const FPoly& a, u64 s, const Fp& F) {
  FPoly c(a);
  for (auto& v : c) v = F.mul(v, s);
  fp_trim(c);
  return c;
}

FPoly fp_monic(const FPoly& a, const Fp& F) {
  if (a.empty() || a.back() == 1) return a;
  return fp_scale(a, F.inv(a.back()), F);
}

std::pair<FPoly, FPoly> fp_divrem(const FPoly& a, const FPoly& b, const Fp& F) {
  FPoly r(a), q;
  const int db = fp_deg(b);
  const u64 binv = F.inv(b.back());
  if (fp_deg(r) >= db) q.assign(static_cast<std::size_t>(fp_deg(r) - db) + 1, 0);
  for (int i = fp_deg(r); i >= db; --i) {
    u64 c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    c = F.mul(c, binv);
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(i - db + j)] =
          F.sub(r[static_cast<std::size_t>(i - db + j)], F.mul(c, b[static_cast<std::size_t>(j)]));
  }
  fp_trim(r);
  fp_trim(q);
  return {std::move(q), std::move(r)};
}

FPoly fp_rem(const FPoly& a, const FPoly& b, const Fp& F) { return fp_divrem(a, b, F).second; }

FPoly fp_gcd(FPoly a, FPoly b, const Fp& F) {
  while (!b.empty()) {
    FPoly r = fp_rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, F);
}

FPoly fp_deriv(const FPoly& a, const Fp& F) {
  if (a.size() <= 1) return {};
  FPoly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = F.mul(a[i], i % F.p);
  fp_trim(d);
  return d;
}

FPoly fp_mulmod(const FPoly& a, const FPoly& b, const FPoly& m, const Fp& F) {
  return fp_rem(fp_mul(a, b, F), m, F);
}

FPoly fp_powmod_u64(FPoly base, u64 e, const FPoly& m, const Fp& F) {
  FPoly r{1};
  base = fp_rem(base, m, F);
  while (e) {
    if (e & 1) r = fp_mulmod(r, base, m, F);
    base = fp_mulmod(base, base, m, F);
    e >>= 1;
  }
  return r;
}

FPoly fp_powmod_big(FPoly base, const Int& e, const FPoly& m, const Fp& F) {
  FPoly r{1};
  base = fp_rem(base, m, F);
  if (e == 0) return r;
  const unsigned bits = boost::multiprecision::msb(e) + 1;
  for (unsigned i = bits; i-- > 0;) {
    r = fp_mulmod(r, r, m, F);
    if (boost::multiprecision::bit_test(e, i)) r = fp_mulmod(r, base, m, F);
  }
  return r;
}

// Extended Euclid: returns (g, s, t) monic g = gcd with s·a + t·b = g.
std::tuple<FPoly, FPoly, FPoly> fp_xgcd(FPoly a, FPoly b, const Fp& F) {
  FPoly s0{1}, s1{}, t0{}, t1{1};
  while (!b.empty()) {
    auto [q, r] = fp_divrem(a, b, F);
    a = std::move(b);
    b = std::move(r);
    FPoly s2 = fp_sub(s0, fp_mul(q, s1, F), F);
    FPoly t2 = fp_sub(t0, fp_mul(q, t1, F), F);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!a.empty() && a.back() != 1) {
    u64 inv = F.inv(a.back());
    a = fp_scale(a, inv, F);
    s0 = fp_scale(s0, inv, F);
    t0 = fp_scale(t0, inv, F);
  }
  return {std::move(a), std::move(s0), std::move(t0)};
}

FPoly to_fp(const IntPoly& f, const Fp& F) {
  FPoly c(f.coeffs().size());
  const Int p{F.p};
  for (std::size_t i = 0; i < c.size(); ++i) {
    Int v = f.coeffs()[i] % p;
    if (v < 0) v += p;
    c[i] = v.convert_to<u64>();
  }
  fp_trim(c);
  return c;
}

IntPoly from_fp(const FPoly& a) {
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  return IntPoly(std::move(c));
}

// splitmix64; the deterministic source for equal-degree splitting.
u64 splitmix64(u64& state) {
  u64 z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

FPoly fp_random(int max_deg, const Fp& F, u64& state) {
  FPoly a(static_cast<std::size_t>(max_deg) + 1);
  for (auto& v : a) v = splitmix64(state) % F.p;
  fp_trim(a);
  return a;
}

// Char-p squarefree decomposition (handles p-th powers).
void fp_squarefree_decomp(const FPoly& f, const Fp& F, int outer_mult,
                          std::vector<std::pair<FPoly, int>>& out) {
  FPoly fm = fp_monic(f, F);
  if (fp_deg(fm) < 1) return;
  FPoly d = fp_deriv(fm, F);
  if (d.empty()) {
    // f = g(x^p); take the p-th root and recurse with multiplicity scaled by p.
    FPoly root((fm.size() - 1) / F.p + 1);
    for (std::size_t i = 0; i < root.size(); ++i) root[i] = fm[i * F.p];
    fp_squarefree_decomp(root, F, outer_mult * static_cast<int>(F.p), out);
    return;
  }
  FPoly g = fp_gcd(fm, d, F);
  FPoly w = fp_divrem(fm, g, F).first;
  int i = 1;
  while (fp_deg(w) > 0) {
    FPoly y = fp_gcd(w, g, F);
    FPoly z = fp_divrem(w, y, F).first;
    if (fp_deg(z) > 0) out.emplace_back(fp_monic(z, F), i * outer_mult);
    ++i;
    w = std::move(y);
    g = fp_divrem(g, w, F).first;
  }
  if (fp_deg(g) > 0) fp_squarefree_decomp(g, F, outer_mult, out);
}

// Distinct-degree factorization of squarefree monic f: (product, d) pairs.
std::vector<std::pair<FPoly, int>> fp_ddf(FPoly f, const Fp& F) {
  std::vector<std::pair<FPoly, int>> out;
  FPoly h = fp_rem(fp_x(), f, F);
  int d = 0;
  while (fp_deg(f) > 2 * (d + 1) - 1) {
    ++d;
    h = fp_powmod_u64(h, F.p, f, F);
    FPoly g = fp_gcd(fp_sub(h, fp_x(), F), f, F);
    if (fp_deg(g) > 0) {
      out.emplace_back(g, d);
      f = fp_divrem(f, g, F).first;
      h = fp_rem(h, f, F);
    }
  }
  if (fp_deg(f) > 0) out.emplace_back(f, fp_deg(f));
  return out;
}

// Cantor–Zassenhaus equal-degree splitting (deterministically seeded).
void fp_edf(const FPoly& f, int d, const Fp& F, std::vector<FPoly>& out) {
  if (fp_deg(f) == d) {
    out.push_back(fp_monic(f, F));
    return;
  }
  u64 state = 0x243F6A8885A308D3ull ^ (F.p * 1000003ull) ^ (static_cast<u64>(d) << 32) ^
              static_cast<u64>(fp_deg(f));
  for (int attempt = 0; attempt < 400; ++attempt) {
    FPoly a = fp_random(fp_deg(f) - 1, F, state);
    if (a.empty()) continue;
    FPoly g = fp_gcd(a, f, F);
    if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
      fp_edf(g, d, F, out);
      fp_edf(fp_divrem(f, g, F).first, d, F, out);
      return;
    }
    FPoly b;
    if (F.p == 2) {
      // trace map over GF(2^d)
      b = {};
      FPoly t = fp_rem(a, f, F);
      for (int i = 0; i < d; ++i) {
        b = fp_add(b, t, F);
        t = fp_mulmod(t, t, f, F);
      }
    } else {
      Int e = boost::multiprecision::pow(Int(F.p), static_cast<unsigned>(d)) - 1;
      e /= 2;
      b = fp_powmod_big(a, e, f, F);
      if (!b.empty()) b[0] = F.sub(b[0], 1);
      fp_trim(b);
    }
    FPoly g2 = fp_gcd(b, f, F);
    if (fp_deg(g2) > 0 && fp_deg(g2) < fp_deg(f)) {
      fp_edf(g2, d, F, out);
      fp_edf(fp_divrem(f, g2, F).first, d, F, out);
      return;
    }
  }
  throw std::logic_error("equal-degree splitting failed to find a splitter");
}

std::vector<FPoly> fp_factor_squarefree(const FPoly& f, const Fp& F) {
  std::vector<FPoly> out;
  for (auto& [prod, d] : fp_ddf(f, F)) fp_edf(prod, d, F, out);
  return out;
}

bool fp_poly_less(const FPoly& a, const FPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// ------------------------------------------------------ integer-side tools --

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

IntPoly mod_reduce(const IntPoly& f, const Int& m) {
  std::vector<Int> c(f.coeffs());
  for (auto& v : c) {
    v %= m;
    if (v < 0) v += m;
  }
  return IntPoly(std::move(c));
}

IntPoly symmetric_reduce(const IntPoly& f, const Int& m) {
  std::vector<Int> c(f.coeffs());
  const Int half = m / 2;
  for (auto& v : c) {
    v %= m;
    if (v < 0) v += m;
    if (v > half) v -= m;
  }
  return IntPoly(std::move(c));
}

IntPoly mulmod(const IntPoly& a, const IntPoly& b, const Int& m) { return mod_reduce(a * b, m); }

std::pair<IntPoly, IntPoly> divrem_monic_mod(const IntPoly& f, const IntPoly& g, const Int& m) {
  auto [q, r] = divrem_monic(f, g);
  return {mod_reduce(q, m), mod_reduce(r, m)};
}

// One quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10):
// lifts f ≡ g·h (mod m), s·g + t·h ≡ 1 (mod m) to the same relations mod m².
struct HenselPair {
  IntPoly g, h, s, t;
};

HenselPair hensel_step(const HenselPair& in, const IntPoly& f, const Int& m) {
  const Int m2 = m * m;
  IntPoly e = mod_reduce(f - in.g * in.h, m2);
  auto [q, r] = divrem_monic_mod(mulmod(in.s, e, m2), in.h, m2);
  IntPoly g1 = mod_reduce(in.g + in.t * e + q * in.g, m2);
  IntPoly h1 = mod_reduce(in.h + r, m2);
  IntPoly b = mod_reduce(in.s * g1 + in.t * h1 - IntPoly::one(), m2);
  auto [c, d] = divrem_monic_mod(mulmod(in.s, b, m2), h1, m2);
  IntPoly s1 = mod_reduce(in.s - d, m2);
  IntPoly t1 = mod_reduce(in.t - in.t * b - c * g1, m2);
  return {std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
}

// Lift the factorization f ≡ ∏ facs (mod p) (all monic) to modulus M.
std::vector<IntPoly> lift_tree(const IntPoly& f, const std::vector<FPoly>& facs, const Fp& F,
                               const Int& M) {
  if (facs.size() == 1) return {mod_reduce(f, M)};
  const std::size_t half = facs.size() / 2;
  FPoly G0{1}, H0{1};
  for (std::size_t i = 0; i < half; ++i) G0 = fp_mul(G0, facs[i], F);
  for (std::size_t i = half; i < facs.size(); ++i) H0 = fp_mul(H0, facs[i], F);
  auto [one, s0, t0] = fp_xgcd(G0, H0, F);
  if (fp_deg(one) != 0) throw std::logic_error("hensel: modular factors not coprime");

  HenselPair cur{from_fp(G0), from_fp(H0), from_fp(s0), from_fp(t0)};
  Int m{F.p};
  while (m < M) {
    cur = hensel_step(cur, mod_reduce(f, m * m), m);
    m *= m;
  }
  if (!cur.g.is_monic() || !cur.h.is_monic())
    throw std::logic_error("hensel: lifted factors lost monicity");

  std::vector<FPoly> left(facs.begin(), facs.begin() + static_cast<long>(half));
  std::vector<FPoly> right(facs.begin() + static_cast<long>(half), facs.end());
  std::vector<IntPoly> out = lift_tree(mod_reduce(cur.g, M), left, F, M);
  std::vector<IntPoly> rhs = lift_tree(mod_reduce(cur.h, M), right, F, M);
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

// Landau–Mignotte: every monic divisor h of a monic F satisfies
// ||h||_inf <= ||h||_1 <= 2^deg(h) · M(h) <= 2^n · ||F||_2, so coefficients of
// true factors are recovered exactly from symmetric residues mod M > 2·bound.
Int mignotte_bound(const IntPoly& f) {
  Int norm2 = 0;
  for (const Int& c : f.coeffs()) norm2 += c * c;
  Int b = isqrt(norm2) + 1;
  return b << static_cast<unsigned>(f.degree());
}

// Factor a primitive squarefree monic polynomial of degree >= 2.
std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f) {
  // Prime selection: smallest odd primes with squarefree image; keep the one
  // with the fewest modular factors (try up to 20, stop early at <= 2).
  u64 best_p = 0;
  int best_count = 1 << 30;
  int tried = 0;
  u64 p = 2;
  while (tried < 20) {
    p = next_prime(p);
    Fp F{p};
    FPoly fbar = to_fp(f, F);
    if (fp_deg(fbar) != f.degree()) continue;
    if (fp_deg(fp_gcd(fbar, fp_deriv(fbar, F), F)) != 0) continue;
    ++tried;
    int count = 0;
    for (auto& [prod, d] : fp_ddf(fbar, F)) count += fp_deg(prod) / d;
    if (count < best_count) {
      best_count = count;
      best_p = p;
    }
    if (best_count <= 2) break;
  }
  if (best_p == 0) throw std::logic_error("factor: no usable prime found");
  if (best_count == 1) return {f};

  Fp F{best_p};
  std::vector<FPoly> mod_factors = fp_factor_squarefree(to_fp(f, F), F);
  std::sort(mod_factors.begin(), mod_factors.end(), fp_poly_less);

  Int bound = 2 * mignotte_bound(f) + 1;
  Int M{best_p};
  while (M < bound) M *= M;
  std::vector<IntPoly> lifted = lift_tree(f, mod_factors, F, M);

  // Zassenhaus recombination over subsets, smallest cardinality first.
  std::vector<IntPoly> out;
  IntPoly rest = f;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  std::size_t s = 1;
  while (2 * s <= alive.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      IntPoly cand = IntPoly::one();
      for (std::size_t i : pick) cand = mulmod(cand, lifted[alive[i]], M);
      cand = symmetric_reduce(cand, M);
      bool ok = !cand.coeff(0).is_zero() && rest.coeff(0) % cand.coeff(0) == 0;
      if (ok) {
        auto [q, r] = divrem_monic(rest, cand);
        if (r.is_zero()) {
          out.push_back(cand);
          rest = q;
          std::vector<std::size_t> next_alive;
          for (std::size_t i = 0, k = 0; i < alive.size(); ++i) {
            if (k < s && pick[k] == i) {
              ++k;
              continue;
            }
            next_alive.push_back(alive[i]);
          }
          alive = std::move(next_alive);
          found = true;
          break;
        }
      }
      // next subset of indices into `alive`
      std::size_t j = s;
      while (j > 0 && pick[j - 1] == alive.size() - s + (j - 1)) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t k = j; k < s; ++k) pick[k] = pick[k - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

// Factor a primitive squarefree polynomial with positive leading coefficient.
std::vector<IntPoly> factor_squarefree_primitive(IntPoly g) {
  std::vector<IntPoly> out;
  while (!g.is_zero() && g.coeff(0) == 0) {
    out.push_back(IntPoly::x());
    g = exact_div(g, IntPoly::x());
  }
  if (g.degree() <= 0) return out;
  if (g.degree() == 1) {
    out.push_back(g);
    return out;
  }
  const Int l = g.leading();
  if (l == 1) {
    auto fs = factor_monic_squarefree(g);
    out.insert(out.end(), fs.begin(), fs.end());
    return out;
  }
  // Monicize: F(x) = l^(n-1)·g(x/l) is monic with the same splitting behaviour;
  // factors map back through x -> l·x followed by taking primitive parts.
  const int n = g.degree();
  std::vector<Int> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  Int scale = 1;
  for (int i = n - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = g.coeff(i) * scale;
    scale *= l;
  }
  IntPoly F{std::move(c)};
  IntPoly lx = IntPoly::monomial(l, 1);
  for (const IntPoly& Fi : factor_monic_squarefree(F))
    out.push_back(primitive_part(compose(Fi, lx)));
  return out;
}

}  // namespace

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero input");
  IntPoly g = primitive_part(f);
  std::vector<std::pair<IntPoly, int>> out;
  if (g.degree() < 1) return out;

  // Yun's algorithm.
  IntPoly d = g.derivative();
  IntPoly a = poly_gcd(g, d);
  if (a.degree() == 0) {
    out.emplace_back(g, 1);
    return out;
  }
  IntPoly w = exact_div(g, a);
  IntPoly z = exact_div(d, a) - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    IntPoly h = poly_gcd(w, z);
    if (h.degree() > 0) out.emplace_back(h, i);
    w = exact_div(w, h);
    z = exact_div(z, h) - w.derivative();
    ++i;
  }
  return out;
}

std::vector<std::pair<IntPoly, int>> factor_mod_p(const IntPoly& f, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("factor_mod_p: p is not prime");
  if (f.is_zero()) throw std::invalid_argument("factor_mod_p: zero input");
  if (f.leading() % Int(p) == 0) throw BadPrime("factor_mod_p: p divides leading coefficient");
  Fp F{p};
  FPoly fbar = to_fp(f, F);
  std::vector<std::pair<FPoly, int>> parts;
  fp_squarefree_decomp(fbar, F, 1, parts);
  std::vector<std::pair<IntPoly, int>> out;
  for (auto& [part, mult] : parts)
    for (const FPoly& irr : fp_factor_squarefree(part, F)) out.emplace_back(from_fp(irr), mult);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second != y.second) return x.second < y.second;
    return poly_less(x.first, y.first);
  });
  return out;
}

std::optional<std::vector<int>> frobenius_pattern(const IntPoly& f, std::uint64_t p) {
  Fp F{p};
  if (f.leading() % Int(p) == 0) return std::nullopt;
  FPoly fbar = to_fp(f, F);
  if (fp_deg(fp_gcd(fbar, fp_deriv(fbar, F), F)) != 0) return std::nullopt;
  std::vector<int> pattern;
  for (auto& [prod, d] : fp_ddf(fp_monic(fbar, F), F))
    for (int i = 0; i < fp_deg(prod) / d; ++i) pattern.push_back(d);
  std::sort(pattern.rbegin(), pattern.rend());
  return pattern;
}

Factorization factor(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero input");
  Factorization out;
  out.content = content(f);
  IntPoly g = primitive_part(f);
  if (g.degree() < 1) return out;
  for (auto& [part, mult] : squarefree_decomposition(g))
    for (IntPoly& irr : factor_squarefree_primitive(part)) out.factors.emplace_back(irr, mult);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return out;
}

bool is_irreducible(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible: degree must be >= 1");
  IntPoly g = primitive_part(f);
  // Early certificate: irreducible image mod some small prime.
  int tried = 0;
  u64 p = 2;
  while (tried < 8) {
    p = next_prime(p);
    Fp F{p};
    FPoly fbar = to_fp(g, F);
    if (fp_deg(fbar) != g.degree()) continue;
    if (fp_deg(fp_gcd(fbar, fp_deriv(fbar, F), F)) != 0) continue;
    ++tried;
    int count = 0;
    for (auto& [prod, d] : fp_ddf(fbar, F)) count += fp_deg(prod) / d;
    if (count == 1) return true;
  }
  Factorization fac = factor(g);
  return fac.factors.size() == 1 && fac.factors[0].second == 1 &&
         fac.factors[0].first.degree() == g.degree();
}

std::string factorization_to_json(const Factorization& fac) {
  std::ostringstream os;
  os << "{\"content\":\"" << fac.content << "\",\"factors\":[";
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    if (i) os << ",";
    os << "{\"poly\":\"" << format_poly(fac.factors[i].first) << "\",\"mult\":"
       << fac.factors[i].second << "}";
  }
  os << "]}";
  return os.str();
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n % d == 0) return n == d;
  }
  for (u64 d = 29; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime(std::uint64_t after) {
  u64 n = after + 1;
  while (!is_prime_u64(n)) ++n;
  return n;
}

}  // namespace chromalg
