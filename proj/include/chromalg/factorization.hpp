#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chromalg/intpoly.hpp"

namespace chromalg {

struct BadPrime : std::runtime_error {
  explicit BadPrime(const std::string& what) : std::runtime_error(what) {}
};

/// content · ∏ factor_i^mult_i reproduces the input exactly; factors are
/// primitive, irreducible over Q, have positive leading coefficient, and are
/// sorted by (degree, coefficient sequence) for deterministic output.
struct Factorization {
  Int content;
  std::vector<std::pair<IntPoly, int>> factors;

  IntPoly expand() const {
    IntPoly acc = IntPoly::constant(content);
    for (const auto& [f, m] : factors) acc = acc * pow(f, m);
    return acc;
  }
};

/// Yun decomposition of the primitive part: pairwise-coprime squarefree parts
/// with ascending multiplicities.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

/// Monic irreducible factors of f over GF(p) with multiplicities, coefficients
/// reduced into [0, p). Throws BadPrime when p divides the leading coefficient.
std::vector<std::pair<IntPoly, int>> factor_mod_p(const IntPoly& f, std::uint64_t p);

/// Degree pattern (sorted descending) of the factorization of f mod p, or
/// nullopt when p divides lc(f) or the image is not squarefree. Needs only
/// distinct-degree factorization, so it is cheap for Frobenius sampling.
std::optional<std::vector<int>> frobenius_pattern(const IntPoly& f, std::uint64_t p);

Factorization factor(const IntPoly& f);

bool is_irreducible(const IntPoly& f);

std::string factorization_to_json(const Factorization& fac);

bool is_prime_u64(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t after);

}  // namespace chromalg
