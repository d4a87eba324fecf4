#include "chromalg/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

namespace chromalg {

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const Int& s) {
  if (s == 0) return IntPoly();
  std::vector<Int> c(a.c_);
  for (auto& v : c) v *= s;
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Int> c(a.c_);
  for (auto& v : c) v = -v;
  return IntPoly(std::move(c));
}

IntPoly pow(const IntPoly& f, int e) {
  IntPoly acc = IntPoly::one();
  IntPoly base = f;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

IntPoly compose(const IntPoly& f, const IntPoly& g) {
  IntPoly acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * g + IntPoly::constant(f.coeff(i));
  return acc;
}

std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& f, const IntPoly& g) {
  if (!g.is_monic()) throw NotMonic("divrem_monic: divisor is not monic");
  const int dg = g.degree();
  std::vector<Int> rem(f.coeffs());
  std::vector<Int> quo;
  if (f.degree() >= dg) quo.assign(static_cast<std::size_t>(f.degree() - dg) + 1, Int(0));
  for (int i = f.degree(); i >= dg; --i) {
    Int c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - dg)] = c;
    for (int j = 0; j <= dg; ++j)
      rem[static_cast<std::size_t>(i - dg + j)] -= c * g.coeff(j);
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
  if (f.is_zero()) return IntPoly();
  if (f.degree() < g.degree()) throw NonExactDivision("exact_div: divisor degree exceeds dividend");
  const int dg = g.degree();
  std::vector<Int> rem(f.coeffs());
  std::vector<Int> quo(static_cast<std::size_t>(f.degree() - dg) + 1, Int(0));
  for (int i = f.degree(); i >= dg; --i) {
    Int c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (c % g.leading() != 0)
      throw NonExactDivision("exact_div: leading coefficient step not integral");
    c /= g.leading();
    quo[static_cast<std::size_t>(i - dg)] = c;
    for (int j = 0; j <= dg; ++j)
      rem[static_cast<std::size_t>(i - dg + j)] -= c * g.coeff(j);
  }
  for (const Int& v : rem)
    if (v != 0) throw NonExactDivision("exact_div: nonzero remainder");
  return IntPoly(std::move(quo));
}

DivRem pseudo_divrem(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("pseudo_divrem: division by zero polynomial");
  const int dg = g.degree();
  if (f.degree() < dg) return DivRem{IntPoly(), f, Int(1)};
  const Int& lg = g.leading();
  IntPoly r = f;
  IntPoly q;
  int e = f.degree() - dg + 1;
  while (!r.is_zero() && r.degree() >= dg) {
    IntPoly s = IntPoly::monomial(r.leading(), r.degree() - dg);
    q = q * lg + s;
    r = r * lg - s * g;
    --e;
  }
  Int adjust = 1;
  for (int i = 0; i < e; ++i) adjust *= lg;
  q = q * adjust;
  r = r * adjust;
  Int mult = 1;
  for (int i = 0; i < f.degree() - dg + 1; ++i) mult *= lg;
  return DivRem{std::move(q), std::move(r), std::move(mult)};
}

DivRem divrem(const IntPoly& f, const IntPoly& g, DivMode mode) {
  if (g.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
  if (mode == DivMode::exact) {
    if (f.is_zero()) return DivRem{IntPoly(), IntPoly(), Int(1)};
    return DivRem{exact_div(f, g), IntPoly(), Int(1)};
  }
  return pseudo_divrem(f, g);
}

IntPoly shift(const IntPoly& f, const Int& a) {
  if (f.is_zero() || a == 0) return f;
  // Repeated synthetic division: f(x) = sum r_i (x-a)^i gives f(x+a) = sum r_i x^i.
  std::vector<Int> c(f.coeffs());
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) c[j - 1] += a * c[j];
  return IntPoly(std::move(c));
}

ShiftResult standardize(const IntPoly& f) {
  if (f.degree() < 1 || !f.is_monic())
    throw NotMonic("standardize: input must be monic of degree >= 1");
  const Int n{f.degree()};
  const Int& c = f.coeff(f.degree() - 1);
  Int a = -floordiv(c, n);
  return ShiftResult{shift(f, a), a};
}

Int content(const IntPoly& f) {
  Int g = 0;
  for (const Int& v : f.coeffs()) g = boost::multiprecision::gcd(g, v);
  if (f.leading() < 0) g = -g;
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Int c = content(f);
  std::vector<Int> v(f.coeffs());
  for (auto& x : v) x /= c;
  return IntPoly(std::move(v));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  Int cont = boost::multiprecision::gcd(boost::multiprecision::abs(content(a)),
                                        boost::multiprecision::abs(content(b)));
  IntPoly A = primitive_part(a);
  IntPoly B = primitive_part(b);
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    IntPoly r = pseudo_divrem(A, B).remainder;
    A = std::move(B);
    B = r.is_zero() ? IntPoly() : primitive_part(r);
  }
  if (A.leading() < 0) A = -A;
  return A * cont;
}

Int resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0) {
    Int r = 1;
    for (int i = 0; i < n; ++i) r *= f.leading();
    return r;
  }
  if (n == 0) {
    Int r = 1;
    for (int i = 0; i < m; ++i) r *= g.leading();
    return r;
  }
  // Bareiss fraction-free elimination on the Sylvester matrix.
  const int N = m + n;
  std::vector<std::vector<Int>> M(static_cast<std::size_t>(N),
                                  std::vector<Int>(static_cast<std::size_t>(N), Int(0)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j) M[r][r + j] = f.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) M[n + r][r + j] = g.coeff(n - j);

  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (M[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < N; ++r)
        if (M[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev;
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign > 0 ? M[N - 1][N - 1] : -M[N - 1][N - 1];
}

Int discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
  const int n = f.degree();
  Int r = resultant(f, f.derivative());
  r /= f.leading();
  return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

Rational::Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Int(text));
  return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

std::string Rational::str() const {
  std::ostringstream os;
  os << num;
  if (den != 1) os << "/" << den;
  return os.str();
}

namespace {

int sign_of(const Int& v) { return v == 0 ? 0 : (v > 0 ? 1 : -1); }

// Sign of p at num/den (den > 0), via the homogenized sum c_i num^i den^(n-i).
int sign_at(const IntPoly& p, const Rational& r) {
  if (p.is_zero()) return 0;
  const int n = p.degree();
  Int acc = 0;
  Int num_pow = 1;
  std::vector<Int> den_pows(static_cast<std::size_t>(n) + 1);
  den_pows[0] = 1;
  for (int i = 1; i <= n; ++i) den_pows[static_cast<std::size_t>(i)] = den_pows[i - 1] * r.den;
  for (int i = 0; i <= n; ++i) {
    acc += p.coeff(i) * num_pow * den_pows[static_cast<std::size_t>(n - i)];
    if (i < n) num_pow *= r.num;
  }
  return sign_of(acc);
}

int sign_at_bound(const IntPoly& p, const Bound& b) {
  if (p.is_zero()) return 0;
  switch (b.kind) {
    case Bound::Kind::finite:
      return sign_at(p, b.value);
    case Bound::Kind::pos_inf:
      return sign_of(p.leading());
    case Bound::Kind::neg_inf:
      return p.degree() % 2 == 0 ? sign_of(p.leading()) : -sign_of(p.leading());
  }
  return 0;
}

// Divide out the positive content; keeps every sign intact (primitive_part
// would flip negative-leading polynomials).
IntPoly shrink_keep_sign(const IntPoly& p) {
  if (p.is_zero()) return p;
  Int c = boost::multiprecision::abs(content(p));
  if (c == 1) return p;
  std::vector<Int> v(p.coeffs());
  for (auto& x : v) x /= c;
  return IntPoly(std::move(v));
}

long variations(const std::vector<IntPoly>& chain, const Bound& b) {
  long v = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = sign_at_bound(p, b);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

long sturm_count(const IntPoly& f, const Bound& lo, const Bound& hi,
                 bool lo_open, bool hi_open) {
  if (f.degree() < 1) throw std::invalid_argument("sturm_count: degree must be >= 1");
  {
    IntPoly g = poly_gcd(f, f.derivative());
    if (g.degree() > 0) throw NotSquarefree("sturm_count: input has repeated roots");
  }
  // Integer Sturm chain: pseudo-remainders with a sign fix so each element is
  // a positive rational multiple of the classical -rem(s_{i-1}, s_i).
  std::vector<IntPoly> chain;
  chain.push_back(shrink_keep_sign(f));
  chain.push_back(shrink_keep_sign(f.derivative()));
  while (!chain.back().is_zero() && chain.back().degree() >= 1) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    DivRem pd = pseudo_divrem(a, b);
    if (pd.remainder.is_zero()) break;
    IntPoly next = pd.multiplier > 0 ? -pd.remainder : pd.remainder;
    chain.push_back(shrink_keep_sign(next));
  }

  long count = variations(chain, lo) - variations(chain, hi);
  if (lo.kind == Bound::Kind::finite && !lo_open && sign_at(f, lo.value) == 0) ++count;
  if (hi.kind == Bound::Kind::finite && hi_open && sign_at(f, hi.value) == 0) --count;
  return count;
}

IntPoly cyclotomic(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
  std::map<int, IntPoly> phi;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    std::vector<Int> xn(static_cast<std::size_t>(d) + 1, Int(0));
    xn[0] = -1;
    xn.back() = 1;
    IntPoly p{std::move(xn)};
    for (const auto& [e, q] : phi)
      if (d % e == 0) p = exact_div(p, q);
    phi.emplace(d, std::move(p));
  }
  return phi.at(n);
}

IntPoly falling_factorial(int k) {
  IntPoly acc = IntPoly::one();
  for (int i = 0; i < k; ++i) acc = acc * IntPoly(std::vector<Int>{Int(-i), Int(1)});
  return acc;
}

Int stirling2(int m, int k) {
  if (k < 0 || k > m) return 0;
  if (m == 0) return 1;  // S(0,0) = 1
  std::vector<Int> row(static_cast<std::size_t>(k) + 1, Int(0));
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] = Int(j) * row[static_cast<std::size_t>(j)] +
                                         row[static_cast<std::size_t>(j) - 1];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

std::vector<std::complex<double>> numeric_roots(const IntPoly& f, double tol) {
  if (f.degree() < 1) throw std::invalid_argument("numeric_roots: degree must be >= 1");
  const int n = f.degree();
  std::vector<double> a(static_cast<std::size_t>(n) + 1);
  const double lead = f.leading().convert_to<double>();
  for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = f.coeff(i).convert_to<double>() / lead;

  auto eval = [&](std::complex<double> z) {
    std::complex<double> acc = 0;
    for (int i = n; i >= 0; --i) acc = acc * z + a[static_cast<std::size_t>(i)];
    return acc;
  };

  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> p = 1.0;
  for (auto& zi : z) {
    p *= seed;
    zi = p;
  }
  const int max_iter = 2000;
  for (int iter = 0; iter < max_iter; ++iter) {
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
      std::complex<double> denom = 1.0;
      for (int k = 0; k < n; ++k)
        if (k != j) denom *= z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(k)];
      std::complex<double> w = eval(z[static_cast<std::size_t>(j)]) / denom;
      z[static_cast<std::size_t>(j)] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(z[static_cast<std::size_t>(j)])));
    }
    if (worst < tol) return z;
  }
  throw NoConvergence("numeric_roots: Durand-Kerner did not converge");
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }

  Int parse_uint() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected digits", start);
    return Int(s.substr(start, i - start));
  }

  // term := int | int '*'? var ('^' uint)? | var ('^' uint)?
  IntPoly parse_term() {
    skip_ws();
    Int coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coeff = parse_uint();
      have_coeff = true;
    }
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      if (!have_coeff) throw ParseError("unexpected '*'", i);
      ++i;
      skip_ws();
    }
    if (i < s.size() && (s[i] == 'x' || s[i] == 'q')) {
      ++i;
      int power = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        Int p = parse_uint();
        if (p > 100000) throw ParseError("exponent too large", i);
        power = p.convert_to<int>();
      }
      return IntPoly::monomial(coeff, power);
    }
    if (!have_coeff) throw ParseError("expected term", i);
    return IntPoly::constant(coeff);
  }

  IntPoly parse_poly_text() {
    IntPoly acc;
    bool first = true;
    while (!eof()) {
      int sign = 1;
      skip_ws();
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", i);
      }
      IntPoly t = parse_term();
      acc = sign > 0 ? acc + t : acc - t;
      first = false;
    }
    if (first) throw ParseError("empty polynomial", 0);
    return acc;
  }

  IntPoly parse_json_array() {
    skip_ws();
    if (s[i] != '[') throw ParseError("expected '['", i);
    ++i;
    std::vector<Int> coeffs;
    skip_ws();
    if (i < s.size() && s[i] == ']') {
      ++i;
    } else {
      while (true) {
        skip_ws();
        bool quoted = i < s.size() && s[i] == '"';
        if (quoted) ++i;
        std::size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected integer", i);
        coeffs.emplace_back(s.substr(start, i - start));
        if (quoted) {
          if (i >= s.size() || s[i] != '"') throw ParseError("expected closing quote", i);
          ++i;
        }
        skip_ws();
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        if (i < s.size() && s[i] == ']') {
          ++i;
          break;
        }
        throw ParseError("expected ',' or ']'", i);
      }
    }
    if (!eof()) throw ParseError("trailing input after ']'", i);
    return IntPoly(std::move(coeffs));
  }
};

}  // namespace

IntPoly parse_poly(const std::string& text) {
  Parser p{text};
  if (p.peek() == '[') return p.parse_json_array();
  return p.parse_poly_text();
}

std::string format_poly(const IntPoly& f, char var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Int& c = f.coeff(i);
    if (c == 0) continue;
    Int a = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << a;
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

std::string poly_to_json(const IntPoly& f) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i <= f.degree(); ++i) {
    if (i) os << ",";
    os << "\"" << f.coeff(i) << "\"";
  }
  os << "]";
  return os.str();
}

Int floordiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative input");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Int& n) {
  if (n < 0) return false;
  Int s = boost::multiprecision::sqrt(n);
  return s * s == n;
}

}  // namespace chromalg
