#include "chromalg/conjecture.hpp"

#include <algorithm>
#include <sstream>

#include "chromalg/factorization.hpp"
#include "chromalg/families.hpp"

namespace chromalg {

namespace {

const Rational kForbiddenEdge{Int(32), Int(27)};

IntPoly quadratic_of(const Int& a, const Int& b) {
  return IntPoly(std::vector<Int>{a * b + a + b, -(a + b + 1), Int(1)});
}

// R(1,1,a,b) with discriminant exactly d (proof of the quadratic theorem);
// larger m keeps the construction valid while pushing the trace up.
std::pair<Int, Int> quadratic_ab(const Int& d, int m_extra) {
  if (is_square(d)) throw BadDiscriminant("realize_quadratic: square discriminant");
  Int r = d % 4;
  if (r < 0) r += 4;
  if (r != 0 && r != 1)
    throw BadDiscriminant("realize_quadratic: discriminant must be 0 or 1 mod 4");
  Int m = 1;
  int skipped = 0;
  while (true) {
    Int l;
    if (r == 1)
      l = m * m - (d - 1) / 4;
    else
      l = m * m + m - d / 4;
    if (l >= m + 1) {
      if (skipped == m_extra) {
        Int a = l + m;
        if (r == 0) a += 1;
        Int b = l - m;
        return {a, b};
      }
      ++skipped;
    }
    ++m;
  }
}

RealizationResult pack_quadratic(const Int& a, const Int& b, const Int& shift) {
  Int lo = std::min(a, b), hi = std::max(a, b);
  RealizationResult r;
  r.family = RingSpec{{1, 1, static_cast<int>(lo.convert_to<long long>()),
                       static_cast<int>(hi.convert_to<long long>())}};
  r.factor = quadratic_of(a, b);
  r.shift = shift;
  r.vertex_count = static_cast<int>((2 + a + b).convert_to<long long>());
  return r;
}

IntPoly family_full_polynomial(const FamilySpec& spec) {
  if (const auto* ring = std::get_if<RingSpec>(&spec)) {
    auto it = std::find(ring->sizes.begin(), ring->sizes.end(), 1);
    if (it != ring->sizes.end()) {
      // rotate the 1 to the front; the ring is cyclic
      std::vector<int> rest;
      for (auto p = it + 1; p != ring->sizes.end(); ++p) rest.push_back(*p);
      for (auto p = ring->sizes.begin(); p != it; ++p) rest.push_back(*p);
      return ring_full(rest);
    }
    return chromatic_polynomial(build(spec));
  }
  if (const auto* bi = std::get_if<BicliqueSpec>(&spec))
    return biclique_polynomial(bi->n, bi->sets).full;
  return chromatic_polynomial(build(spec));
}

}  // namespace

AlgebraicTarget::AlgebraicTarget(IntPoly p) : minpoly(std::move(p)) {
  if (minpoly.degree() < 1 || !minpoly.is_monic())
    throw NotMonic("AlgebraicTarget: minimal polynomial must be monic of degree >= 1");
  if (minpoly.degree() > 1 && !is_irreducible(minpoly))
    throw NotIrreducible("AlgebraicTarget: minimal polynomial must be irreducible");
}

ExclusionReport exclusion_min_shift(const AlgebraicTarget& target, int max_shift) {
  if (max_shift < 0) throw std::invalid_argument("exclusion_min_shift: max_shift must be >= 0");
  ExclusionReport report;
  const IntPoly& f = target.minpoly;
  for (int t = 0; t <= max_shift; ++t) {
    bool excluded;
    if (f.degree() == 1) {
      // integer target: alpha + t is a chromatic root iff it is >= 0
      excluded = -f.coeff(0) + t < 0;
    } else {
      // conjugates of alpha + t are the roots of f(x - t); irrational, so the
      // forbidden set collapses to (-inf, 32/27]
      IntPoly shifted = shift(f, Int(-t));
      excluded = sturm_count(shifted, Bound::minus_infinity(), Bound::at(kForbiddenEdge),
                             true, false) > 0;
    }
    if (excluded)
      report.excluded.push_back(t);
    else if (!report.min_candidate)
      report.min_candidate = t;
  }
  return report;
}

RealizationResult realize_quadratic_disc(const Int& d) {
  auto [a, b] = quadratic_ab(d, 0);
  IntPoly factor = quadratic_of(a, b);
  return pack_quadratic(a, b, standardize(factor).shift);
}

RealizationResult realize_quadratic(const AlgebraicTarget& target) {
  if (target.minpoly.degree() != 2)
    throw std::invalid_argument("realize_quadratic: target must be quadratic");
  const Int d = discriminant(target.minpoly);
  const Int target_shift = standardize(target.minpoly).shift;
  for (int extra = 0;; ++extra) {
    auto [a, b] = quadratic_ab(d, extra);
    IntPoly factor = quadratic_of(a, b);
    ShiftResult st = standardize(factor);
    if (st.standard != standardize(target.minpoly).standard)
      throw std::logic_error("realize_quadratic: standard forms failed to match");
    Int shift_n = st.shift - target_shift;
    if (shift_n >= 0) return pack_quadratic(a, b, shift_n);
  }
}

bool verify_realization(const RealizationResult& r, const AlgebraicTarget& target) {
  Int s = -r.shift;
  IntPoly shifted_target = shift(target.minpoly, s);  // min poly of alpha + shift
  if (shifted_target != r.factor && !divrem_monic(r.factor, shifted_target).second.is_zero())
    return false;
  IntPoly full = family_full_polynomial(r.family);
  return divrem_monic(full, shifted_target).second.is_zero();
}

std::vector<RealizationResult> search_alpha_n(const AlgebraicTarget& target,
                                              const SearchBounds& bounds, int max_shift) {
  const ShiftResult target_std = standardize(target.minpoly);
  const int D = target.minpoly.degree();
  std::vector<RealizationResult> results;

  auto try_factor = [&](const IntPoly& interesting, const FamilySpec& family, int vertices) {
    for (const auto& [u, mult] : factor(interesting).factors) {
      if (u.degree() != D || !u.is_monic()) continue;
      ShiftResult su = standardize(u);
      if (su.standard != target_std.standard) continue;
      Int n = su.shift - target_std.shift;
      if (n < 0 || n > max_shift) continue;
      RealizationResult r{family, u, n, vertices};
      if (!verify_realization(r, target))
        throw std::logic_error("search_alpha_n: realization failed re-verification");
      results.push_back(std::move(r));
    }
  };

  if (bounds.ring_max_entry > 0) {
    // non-decreasing (a_1..a_{D+1}) with entries in [1, max]; R(1, a...) has an
    // interesting factor of degree D
    std::vector<int> a(static_cast<std::size_t>(D) + 1, 1);
    while (true) {
      std::vector<int> sizes{1};
      sizes.insert(sizes.end(), a.begin(), a.end());
      int vertices = 1;
      for (int v : a) vertices += v;
      try_factor(ring_interesting_factor(a), RingSpec{sizes}, vertices);
      int i = static_cast<int>(a.size()) - 1;
      while (i >= 0 && a[static_cast<std::size_t>(i)] == bounds.ring_max_entry) --i;
      if (i < 0) break;
      int v = a[static_cast<std::size_t>(i)] + 1;
      for (std::size_t j = static_cast<std::size_t>(i); j < a.size(); ++j) a[j] = v;
    }
  }

  if (bounds.biclique_max_n > 0) {
    // canonical biclique instances (per the clique-sum / dominating-vertex
    // reductions): m = D sets covering C with empty common intersection
    const int m = D;
    for (int n = 1; n <= bounds.biclique_max_n; ++n) {
      const std::uint32_t full_mask = (std::uint32_t(1) << n) - 1;
      std::vector<std::uint32_t> masks(static_cast<std::size_t>(m), 1);
      while (true) {
        std::uint32_t u = 0, inter = full_mask;
        for (std::uint32_t msk : masks) {
          u |= msk;
          inter &= msk;
        }
        if (u == full_mask && inter == 0) {
          std::vector<std::vector<int>> sets;
          for (std::uint32_t msk : masks) {
            std::vector<int> s;
            for (int v = 0; v < n; ++v)
              if (msk & (std::uint32_t(1) << v)) s.push_back(v);
            sets.push_back(std::move(s));
          }
          try_factor(biclique_polynomial(n, sets).interesting, BicliqueSpec{n, sets}, n + m);
        }
        int i = m - 1;
        while (i >= 0 && masks[static_cast<std::size_t>(i)] == full_mask) --i;
        if (i < 0) break;
        std::uint32_t v = masks[static_cast<std::size_t>(i)] + 1;
        for (std::size_t j = static_cast<std::size_t>(i); j < masks.size(); ++j) masks[j] = v;
      }
    }
  }

  if (bounds.cycles_max_k > 0) {
    for (int k = 3; k <= bounds.cycles_max_k; ++k) {
      std::vector<int> ones(static_cast<std::size_t>(k), 1);
      try_factor(cycle_interesting_factor(k), RingSpec{ones}, k);
    }
  }

  std::stable_sort(results.begin(), results.end(),
                   [](const RealizationResult& x, const RealizationResult& y) {
                     if (x.shift != y.shift) return x.shift < y.shift;
                     return x.vertex_count < y.vertex_count;
                   });
  return results;
}

std::string realization_to_json(const RealizationResult& r) {
  std::ostringstream os;
  os << "{\"family\":\"" << family_to_string(r.family) << "\",\"factor\":\""
     << format_poly(r.factor) << "\",\"shift\":" << r.shift
     << ",\"vertices\":" << r.vertex_count << "}";
  return os.str();
}

}  // namespace chromalg
