#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromalg {

using Int = boost::multiprecision::cpp_int;

struct NonExactDivision : std::runtime_error {
  explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};
struct NotMonic : std::runtime_error {
  explicit NotMonic(const std::string& what) : std::runtime_error(what) {}
};
struct NotSquarefree : std::runtime_error {
  explicit NotSquarefree(const std::string& what) : std::runtime_error(what) {}
};
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// Dense univariate polynomial over the integers. coeffs()[i] is the
/// coefficient of x^i; the zero polynomial has an empty coefficient vector,
/// every other value keeps a nonzero leading coefficient.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long long> ascending) {
    c_.reserve(ascending.size());
    for (long long v : ascending) c_.emplace_back(v);
    trim();
  }

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return constant(1); }
  static IntPoly x() { return monomial(1, 1); }
  static IntPoly constant(Int v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(std::move(v));
    return p;
  }
  static IntPoly monomial(Int coeff, int power) {
    IntPoly p;
    if (coeff != 0) {
      p.c_.assign(static_cast<std::size_t>(power) + 1, Int(0));
      p.c_.back() = std::move(coeff);
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Int>& coeffs() const { return c_; }

  /// Coefficient of x^i, zero beyond the degree.
  const Int& coeff(int i) const {
    static const Int kZero{0};
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
  }

  const Int& leading() const {
    static const Int kZero{0};
    return c_.empty() ? kZero : c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Int eval(const Int& v) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
  }

  IntPoly derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<Int> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Int(i);
    return IntPoly(std::move(d));
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const Int& s);
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const Int& s);
IntPoly operator-(const IntPoly& a);

IntPoly pow(const IntPoly& f, int e);

/// f(g(x)), computed exactly by Horner over IntPoly.
IntPoly compose(const IntPoly& f, const IntPoly& g);

enum class DivMode { exact, pseudo };

/// divrem result; in pseudo mode multiplier·f = quotient·g + remainder with
/// multiplier = lc(g)^(deg f − deg g + 1); exact mode has multiplier 1 and
/// remainder 0.
struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
  Int multiplier{1};
};

DivRem divrem(const IntPoly& f, const IntPoly& g, DivMode mode);

/// Exact quotient f/g; throws NonExactDivision if g does not divide f over Z.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);

/// Plain division with remainder; requires g monic.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& f, const IntPoly& g);

/// Pseudo-division: lc(g)^(deg f − deg g + 1) · f = q·g + r, deg r < deg g.
DivRem pseudo_divrem(const IntPoly& f, const IntPoly& g);

/// Taylor shift: returns f(x + a).
IntPoly shift(const IntPoly& f, const Int& a);

/// standard(x) = input(x + shift); the coefficient of x^(n−1) in standard
/// lies in [0, n−1].
struct ShiftResult {
  IntPoly standard;
  Int shift;
};
ShiftResult standardize(const IntPoly& f);

/// gcd of all coefficients, carrying the sign of the leading coefficient;
/// 0 for the zero polynomial.
Int content(const IntPoly& f);
IntPoly primitive_part(const IntPoly& f);

/// Integer polynomial gcd (primitive PRS); result has positive leading
/// coefficient and content gcd(content(a), content(b)).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

Int resultant(const IntPoly& f, const IntPoly& g);
Int discriminant(const IntPoly& f);

struct Rational {
  Int num{0};
  Int den{1};  // always >= 1, gcd(num, den) = 1

  Rational() = default;
  Rational(Int n) : num(std::move(n)) {}  // NOLINT: implicit by design
  Rational(Int n, Int d);
  static Rational parse(const std::string& text);
  std::string str() const;
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

struct Bound {
  enum class Kind { neg_inf, finite, pos_inf };
  Kind kind{Kind::finite};
  Rational value;

  static Bound minus_infinity() { return Bound{Kind::neg_inf, {}}; }
  static Bound plus_infinity() { return Bound{Kind::pos_inf, {}}; }
  static Bound at(Rational r) { return Bound{Kind::finite, std::move(r)}; }
};

/// Exact count of distinct real roots of a squarefree f in the interval with
/// the given endpoint conventions. Throws NotSquarefree when gcd(f, f') is
/// non-constant.
long sturm_count(const IntPoly& f, const Bound& lo, const Bound& hi,
                 bool lo_open = true, bool hi_open = false);

/// n-th cyclotomic polynomial, by iterated exact division of x^n − 1.
IntPoly cyclotomic(int n);

/// q(q−1)···(q−k+1); k = 0 gives 1.
IntPoly falling_factorial(int k);

/// Stirling number of the second kind S(m, k).
Int stirling2(int m, int k);

/// All complex roots via Durand–Kerner. Each root z satisfies
/// |f(z)| <= tol · Σ|c_i|·max(1,|z|)^i; throws NoConvergence after 2000
/// iterations without meeting the update tolerance.
std::vector<std::complex<double>> numeric_roots(const IntPoly& f, double tol = 1e-10);

/// Text grammar: poly := term (('+'|'-') term)*;
/// term := int | int '*'? var ('^' uint)? | var ('^' uint)?; var := 'x'|'q'.
/// Also accepts the JSON form "[c0, c1, ...]" (low to high).
IntPoly parse_poly(const std::string& text);

/// Canonical text: descending powers, single spaces around +/−, no '*'.
std::string format_poly(const IntPoly& f, char var = 'x');

/// JSON array of decimal strings, low to high.
std::string poly_to_json(const IntPoly& f);

Int floordiv(const Int& a, const Int& b);
bool is_square(const Int& n);
Int isqrt(const Int& n);

}  // namespace chromalg
