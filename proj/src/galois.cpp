#include "chromalg/galois.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chromalg/factorization.hpp"

namespace chromalg {

namespace {

// Candidates whose chi-square statistic exceeds the best fit by more than
// this are dropped from ambiguous_with; clear cases differ by hundreds.
constexpr double kChiSquareWindow = 25.0;

// Default sample budget: 2000 unramified primes. A cycle type carried by a
// fraction >= 1/|G| of the group (|G| <= 2520 at degree 7) is missed with
// probability <= (1 - 1/2520)^2000 ~ 0.45 in the worst case, so a missing
// rare type can shrink the candidate filter; the chi-square stage plus
// ambiguous_with reporting keeps such runs honest rather than wrong.

bool type_even(const std::vector<int>& type) {
  int parity = 0;
  for (int part : type) parity ^= (part - 1) & 1;
  return parity == 0;
}

// lc^(n-1)·f(x/lc): monic with the same splitting field.
IntPoly monicize(const IntPoly& f) {
  if (f.is_monic()) return f;
  const int n = f.degree();
  const Int l = f.leading();
  std::vector<Int> c(static_cast<std::size_t>(n) + 1);
  c[static_cast<std::size_t>(n)] = 1;
  Int scale = 1;
  for (int i = n - 1; i >= 0; --i) {
    c[static_cast<std::size_t>(i)] = f.coeff(i) * scale;
    scale *= l;
  }
  return IntPoly(std::move(c));
}

GaloisResult exact_small_core(const IntPoly& f) {
  const int n = f.degree();
  GaloisResult r;
  r.degree = n;
  if (n == 2) {
    r.name = "C2";
    r.order = 2;
    r.method = "exact-discriminant";
    return r;
  }
  if (n == 3) {
    bool square = is_square(discriminant(f));
    r.name = square ? "C3" : "S3";
    r.order = square ? 3 : 6;
    r.method = "exact-discriminant";
    return r;
  }
  // Quartic: resolvent cubic + discriminant (Kappe–Warren).
  IntPoly F = monicize(f);
  const Int a = F.coeff(3), b = F.coeff(2), c = F.coeff(1), d = F.coeff(0);
  IntPoly resolvent(
      std::vector<Int>{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Int(1)});
  const Int D = discriminant(F);
  const bool D_square = is_square(D);

  std::vector<Int> rational_roots;
  for (const auto& [g, mult] : factor(resolvent).factors)
    if (g.degree() == 1) rational_roots.push_back(-g.coeff(0));

  r.method = "exact-resolvent";
  if (rational_roots.empty()) {
    r.name = D_square ? "A4" : "S4";
    r.order = D_square ? 12 : 24;
  } else if (rational_roots.size() == 3) {
    r.name = "V4";
    r.order = 4;
  } else {
    const Int y0 = rational_roots[0];
    auto splits_over_QsqrtD = [&D](const Int& delta) {
      return delta == 0 || is_square(delta) || is_square(delta * D);
    };
    const Int delta1 = y0 * y0 - 4 * d;
    const Int delta2 = a * a - 4 * (b - y0);
    if (splits_over_QsqrtD(delta1) && splits_over_QsqrtD(delta2)) {
      r.name = "C4";
      r.order = 4;
    } else {
      r.name = "D4";
      r.order = 8;
    }
  }
  return r;
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

GaloisResult classify_large_degree(const IntPoly& f, int sample_budget) {
  const int n = f.degree();
  GaloisResult r;
  r.degree = n;
  r.method = "heuristic-large";
  auto samples = frobenius_samples(f, sample_budget);
  r.samples = static_cast<int>(samples.size());

  bool has_n_minus_1_cycle = false, has_mid_prime_cycle = false, has_odd_type = false;
  for (const auto& type : samples) {
    if (type.size() == 2 && type[0] == n - 1) has_n_minus_1_cycle = true;
    for (int part : type)
      if (2 * part > n && part <= n - 2 && is_prime_u64(static_cast<std::uint64_t>(part)))
        has_mid_prime_cycle = true;
    if (!type_even(type)) has_odd_type = true;
  }
  const bool disc_sq = is_square(discriminant(f));
  if (has_n_minus_1_cycle && has_mid_prime_cycle && has_odd_type) {
    r.name = "Sn";
    r.order = factorial(n);
  } else if (disc_sq && has_n_minus_1_cycle && has_mid_prime_cycle) {
    r.name = "An";
    r.order = factorial(n) / 2;
  } else {
    r.name = "UNKNOWN";
    r.order = 0;
  }
  return r;
}

GaloisResult classify_core(const IntPoly& f, int sample_budget) {
  const int n = f.degree();
  if (n <= 4) return exact_small_core(f);
  if (n >= 8) return classify_large_degree(f, sample_budget);

  const CycleTypeTable& table = cycle_type_table(n);
  auto samples = frobenius_samples(f, sample_budget);
  const int N = static_cast<int>(samples.size());
  std::map<std::vector<int>, long> observed;
  for (const auto& type : samples) ++observed[type];

  const bool disc_sq = is_square(discriminant(f));
  std::vector<const CycleTypeEntry*> candidates;
  for (const CycleTypeEntry& e : table.entries) {
    if (e.inside_alternating != disc_sq) continue;
    bool covers = true;
    for (const auto& [type, cnt] : observed)
      if (!e.counts.count(type)) covers = false;
    if (covers) candidates.push_back(&e);
  }
  if (candidates.empty())
    throw std::logic_error("classify: no group covers the observed cycle types");

  GaloisResult r;
  r.degree = n;
  r.samples = N;
  r.method = "frobenius-mc";
  if (candidates.size() == 1) {
    r.name = candidates[0]->name;
    r.order = candidates[0]->order;
    return r;
  }
  std::vector<std::pair<double, const CycleTypeEntry*>> fits;
  for (const CycleTypeEntry* e : candidates) {
    double chi = 0.0;
    for (const auto& [type, cnt] : e->counts) {
      double expected = static_cast<double>(N) * static_cast<double>(cnt) /
                        static_cast<double>(e->order);
      auto it = observed.find(type);
      double obs = it == observed.end() ? 0.0 : static_cast<double>(it->second);
      chi += (obs - expected) * (obs - expected) / expected;
    }
    fits.emplace_back(chi, e);
  }
  std::sort(fits.begin(), fits.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  r.name = fits[0].second->name;
  r.order = fits[0].second->order;
  for (std::size_t i = 1; i < fits.size(); ++i)
    if (fits[i].first - fits[0].first <= kChiSquareWindow)
      r.ambiguous_with.push_back(fits[i].second->name);
  std::sort(r.ambiguous_with.begin(), r.ambiguous_with.end());
  return r;
}

}  // namespace

std::vector<std::vector<int>> frobenius_samples(const IntPoly& f, int count) {
  const Int bad = discriminant(f) * f.leading();
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(count));
  std::uint64_t p = 2;
  while (static_cast<int>(out.size()) < count) {
    p = next_prime(p);
    if (bad % Int(p) == 0) continue;
    auto pattern = frobenius_pattern(f, p);
    if (!pattern)
      throw std::logic_error("frobenius_samples: unramified prime gave no pattern");
    out.push_back(std::move(*pattern));
  }
  return out;
}

GaloisResult classify_exact_small(const IntPoly& f) {
  if (f.degree() < 2 || f.degree() > 4)
    throw DegreeOutOfRange("classify_exact_small: degree must be 2..4");
  if (!is_irreducible(f)) throw NotIrreducible("classify_exact_small: input is reducible");
  return exact_small_core(f);
}

GaloisResult classify(const IntPoly& f, int sample_budget) {
  if (f.degree() < 2) throw DegreeOutOfRange("classify: degree must be >= 2");
  if (!is_irreducible(f)) throw NotIrreducible("classify: input is reducible");
  return classify_core(f, sample_budget);
}

GaloisResult classify_assume_irreducible(const IntPoly& f, int sample_budget) {
  if (f.degree() < 2) throw DegreeOutOfRange("classify: degree must be >= 2");
  return classify_core(f, sample_budget);
}

std::string galois_result_to_json(const GaloisResult& r) {
  std::ostringstream os;
  os << "{\"degree\":" << r.degree << ",\"name\":\"" << r.name << "\"";
  if (r.order != 0) os << ",\"order\":" << r.order;
  os << ",\"method\":\"" << r.method << "\",\"samples\":" << r.samples
     << ",\"ambiguous_with\":[";
  for (std::size_t i = 0; i < r.ambiguous_with.size(); ++i) {
    if (i) os << ",";
    os << "\"" << r.ambiguous_with[i] << "\"";
  }
  os << "]}";
  return os.str();
}

}  // namespace chromalg
