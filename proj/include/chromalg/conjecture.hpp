#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chromalg/galois.hpp"
#include "chromalg/graphs.hpp"

namespace chromalg {

struct BadDiscriminant : std::runtime_error {
  explicit BadDiscriminant(const std::string& what) : std::runtime_error(what) {}
};

/// A monic irreducible integer polynomial; irreducibility is verified at
/// construction.
struct AlgebraicTarget {
  IntPoly minpoly;
  explicit AlgebraicTarget(IntPoly p);
};

struct ExclusionReport {
  std::optional<int> min_candidate;  // least non-excluded shift, if any
  std::vector<int> excluded;
};

/// For each shift t in 0..max_shift, tests whether some conjugate of
/// target + t lands in the forbidden part of the real line
/// (-inf, 32/27]; such shifts cannot be chromatic roots.
ExclusionReport exclusion_min_shift(const AlgebraicTarget& target, int max_shift);

struct RealizationResult {
  FamilySpec family;
  IntPoly factor;  // the matched irreducible divisor of the interesting factor
  Int shift;       // n with target + n a root of the family's polynomial
  int vertex_count = 0;
};

/// Constructive realization of a quadratic integer as a chromatic root via
/// R(1,1,a,b); when called with the target polynomial, m grows until the
/// reported shift is non-negative.
RealizationResult realize_quadratic(const AlgebraicTarget& target);
RealizationResult realize_quadratic_disc(const Int& d);

struct SearchBounds {
  int ring_max_entry = 0;  // ring search R(1, a...) with entries <= this (0 = off)
  int biclique_max_n = 0;  // biclique search with |C| <= this (0 = off)
  int cycles_max_k = 0;    // cycle search up to this length (0 = off)
};

/// Enumerates family instances, factors their interesting factors, and
/// reports every irreducible divisor whose standard form matches the
/// target's, with shift in [0, max_shift]; sorted by (shift, vertex count).
std::vector<RealizationResult> search_alpha_n(const AlgebraicTarget& target,
                                              const SearchBounds& bounds, int max_shift);

/// Independent soundness check: minpoly(x - shift) must divide the family's
/// full chromatic polynomial exactly.
bool verify_realization(const RealizationResult& r, const AlgebraicTarget& target);

std::string realization_to_json(const RealizationResult& r);

}  // namespace chromalg
