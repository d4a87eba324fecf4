#pragma once

#include <map>
#include <string>
#include <vector>

#include "chromalg/intpoly.hpp"

namespace chromalg {

struct NotIrreducible : std::runtime_error {
  explicit NotIrreducible(const std::string& what) : std::runtime_error(what) {}
};
struct DegreeOutOfRange : std::runtime_error {
  explicit DegreeOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

/// Classification verdict for the Galois group of an irreducible polynomial.
/// order is 0 when unknown; ambiguous_with lists the statistically viable
/// alternatives when the Monte Carlo method cannot separate candidates.
struct GaloisResult {
  int degree = 0;
  std::string name;
  Int order = 0;
  std::string method;  // exact-discriminant | exact-resolvent | frobenius-mc | heuristic-large
  int samples = 0;
  std::vector<std::string> ambiguous_with;
};

struct CycleTypeEntry {
  std::string name;
  long long order = 0;
  std::map<std::vector<int>, long long> counts;  // partition of degree -> element count
  bool inside_alternating = false;
};

struct CycleTypeTable {
  int degree = 0;
  std::vector<CycleTypeEntry> entries;
};

/// Built-in tables for all transitive groups of degrees 2..7, generated by
/// element enumeration from standard generators (regeneration-tested).
const CycleTypeTable& cycle_type_table(int degree);

/// Factorization degree patterns of f modulo the first `count` primes >= 3
/// that do not divide disc(f)·lc(f); each pattern sorted descending.
std::vector<std::vector<int>> frobenius_samples(const IntPoly& f, int count);

/// Exact classification for irreducible polynomials of degree 2..4
/// (discriminant test, resolvent cubic for quartics).
GaloisResult classify_exact_small(const IntPoly& f);

/// Full classifier: exact for degree <= 4, Frobenius cycle-type Monte Carlo
/// against the built-in tables for 5..7, Sn/An certificates for degree >= 8.
GaloisResult classify(const IntPoly& f, int sample_budget = 2000);

/// classify without the irreducibility precondition check (survey hot path;
/// the caller must have established irreducibility already).
GaloisResult classify_assume_irreducible(const IntPoly& f, int sample_budget = 2000);

std::string galois_result_to_json(const GaloisResult& r);

}  // namespace chromalg
