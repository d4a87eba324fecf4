#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chromalg/intpoly.hpp"

using namespace chromalg;

namespace {

IntPoly P(const std::string& s) { return parse_poly(s); }

IntPoly random_poly(std::mt19937_64& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-max_abs, max_abs);
  int d = deg(rng);
  std::vector<Int> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = coeff(rng);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("arith basics") {
  CHECK(P("x+1") * P("x-1") == P("x^2-1"));
  CHECK(P("x^2") + IntPoly::zero() == P("x^2"));
  // (q-1)^2 (q-5), expanded by hand
  CHECK(P("q-1") * P("q-1") * P("q-5") == P("q^3 - 7q^2 + 11q - 5"));
  CHECK(P("x^2-1") - P("x^2") == P("-1"));
  CHECK(-P("x-2") == P("2-x"));
}

TEST_CASE("divrem exact mode") {
  auto r = divrem(P("q^3-7q^2+11q"), P("q"), DivMode::exact);
  CHECK(r.quotient == P("q^2-7q+11"));
  CHECK(r.remainder.is_zero());
  CHECK(divrem(P("x^2-1"), P("x-1"), DivMode::exact).quotient == P("x+1"));
  // geometric series identity
  CHECK(divrem(P("x^5-1"), P("x-1"), DivMode::exact).quotient == P("x^4+x^3+x^2+x+1"));
  CHECK_THROWS_AS(divrem(P("x^2+1"), P("x-1"), DivMode::exact), NonExactDivision);
}

TEST_CASE("divrem pseudo mode and recombination") {
  std::mt19937_64 rng(12345);
  int done = 0;
  while (done < 200) {
    IntPoly f = random_poly(rng, 10, 100);
    IntPoly g = random_poly(rng, 10, 100);
    if (g.is_zero()) continue;
    DivRem d = divrem(f, g, DivMode::pseudo);
    CHECK(f * d.multiplier == d.quotient * g + d.remainder);
    if (!d.remainder.is_zero()) CHECK(d.remainder.degree() < g.degree());
    ++done;
  }
}

TEST_CASE("shift") {
  CHECK(shift(P("x^2-7x+11"), 4) == P("x^2+x-1"));
  CHECK(shift(P("x^3-2x+5"), 0) == P("x^3-2x+5"));
  CHECK(shift(P("x^2"), -1) == P("x^2-2x+1"));

  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> a(-30, 30);
  for (int i = 0; i < 100; ++i) {
    IntPoly f = random_poly(rng, 9, 50);
    Int t{a(rng)};
    CHECK(shift(shift(f, t), -t) == f);
  }
}

TEST_CASE("standardize") {
  auto r = standardize(P("x^2-7x+11"));
  CHECK(r.standard == P("x^2+x-1"));
  CHECK(r.shift == 4);

  auto s = standardize(P("x^2+x-1"));
  CHECK(s.standard == P("x^2+x-1"));
  CHECK(s.shift == 0);

  auto t = standardize(P("x+5"));
  CHECK(t.standard == P("x"));
  CHECK(t.shift == -5);

  CHECK_THROWS_AS(standardize(P("2x+1")), NotMonic);
  CHECK_THROWS_AS(standardize(P("7")), NotMonic);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    IntPoly f = random_poly(rng, 7, 40);
    if (f.degree() < 1) continue;
    std::vector<Int> c(f.coeffs());
    c.back() = 1;
    f = IntPoly(std::move(c));
    auto st = standardize(f);
    // window and idempotence
    Int c1 = st.standard.coeff(st.standard.degree() - 1);
    CHECK(c1 >= 0);
    CHECK(c1 < st.standard.degree());
    auto st2 = standardize(st.standard);
    CHECK(st2.shift == 0);
    CHECK(st2.standard == st.standard);
    CHECK(shift(f, st.shift) == st.standard);
  }
}

TEST_CASE("discriminant") {
  CHECK(discriminant(P("x^2-7x+11")) == 5);
  CHECK(discriminant(P("x^2-6x+7")) == 8);
  CHECK(discriminant(P("x^2+1")) == -4);
  CHECK(discriminant(P("x^3+x^2-2x-1")) == 49);
  CHECK(discriminant(P("x^3-2")) == -108);

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> v(-100, 100);
  for (int i = 0; i < 100; ++i) {
    Int b{v(rng)}, c{v(rng)};
    IntPoly f = IntPoly(std::vector<Int>{c, b, Int(1)});
    CHECK(discriminant(f) == b * b - 4 * c);
  }
}

TEST_CASE("resultant corner cases") {
  CHECK(resultant(P("3"), P("x^2+1")) == 9);
  CHECK(resultant(P("x-2"), P("x-2")) == 0);
  CHECK(resultant(P("x-1"), P("x+1")) == 2);
}

TEST_CASE("sturm_count") {
  CHECK(sturm_count(P("x^2-3x+1"), Bound::at(Rational(Int(0))), Bound::at(Rational(Int(1))),
                    true, true) == 1);
  CHECK(sturm_count(P("x^2+1"), Bound::minus_infinity(), Bound::plus_infinity()) == 0);
  // roots (5 +- sqrt(5))/2, the smaller ~1.38 > 32/27
  CHECK(sturm_count(P("x^2-5x+5"), Bound::minus_infinity(),
                    Bound::at(Rational(Int(32), Int(27))), true, false) == 0);
  CHECK_THROWS_AS(sturm_count(P("x^2-2x+1"), Bound::minus_infinity(), Bound::plus_infinity()),
                  NotSquarefree);

  // endpoint conventions at an exact rational root
  IntPoly f = P("x^2-1");  // roots -1, 1
  auto one = Bound::at(Rational(Int(1)));
  auto mone = Bound::at(Rational(Int(-1)));
  CHECK(sturm_count(f, mone, one, true, false) == 1);    // (-1, 1]
  CHECK(sturm_count(f, mone, one, false, false) == 2);   // [-1, 1]
  CHECK(sturm_count(f, mone, one, true, true) == 0);     // (-1, 1)
  CHECK(sturm_count(f, mone, one, false, true) == 1);    // [-1, 1)
}

TEST_CASE("sturm against numeric roots on random squarefree polynomials") {
  std::mt19937_64 rng(424242);
  int done = 0;
  while (done < 500) {
    IntPoly f = random_poly(rng, 8, 60);
    if (f.degree() < 2) continue;
    IntPoly g = poly_gcd(f, f.derivative());
    if (g.degree() > 0) f = exact_div(f, g);
    if (f.degree() < 1) continue;
    long total = sturm_count(f, Bound::minus_infinity(), Bound::plus_infinity());
    auto roots = numeric_roots(f, 1e-11);
    long numeric_real = 0;
    for (auto z : roots)
      if (std::abs(z.imag()) < 1e-6) ++numeric_real;
    CHECK(total == numeric_real);
    // interval counts partition the total
    auto zero = Bound::at(Rational(Int(0)));
    long below = sturm_count(f, Bound::minus_infinity(), zero, true, false);
    long above = sturm_count(f, zero, Bound::plus_infinity(), true, false);
    CHECK(below + above == total);
    ++done;
  }
}

TEST_CASE("cyclotomic") {
  CHECK(cyclotomic(1) == P("x-1"));
  CHECK(cyclotomic(6) == P("x^2-x+1"));
  // (x^7+1)/(x+1) as the independent route
  CHECK(cyclotomic(14) == exact_div(P("x^7+1"), P("x+1")));
  CHECK(cyclotomic(14) == P("x^6-x^5+x^4-x^3+x^2-x+1"));

  for (int n = 1; n <= 50; ++n) {
    IntPoly prod = IntPoly::one();
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic(d);
    IntPoly xn = IntPoly::monomial(1, n) - IntPoly::one();
    CHECK(prod == xn);
  }
}

TEST_CASE("falling factorial and stirling numbers") {
  CHECK(falling_factorial(0) == IntPoly::one());
  CHECK(falling_factorial(2) == P("q^2-q"));
  CHECK(falling_factorial(3) == P("q^3-3q^2+2q"));

  CHECK(stirling2(3, 2) == 3);
  for (int m = 0; m <= 8; ++m) CHECK(stirling2(m, m) == 1);

  // brute-force partition count of a 4-set into 2 parts
  int count = 0;
  for (int mask = 1; mask < 15; ++mask) {
    if ((mask & 1) == 0) continue;  // block containing element 0, complement nonempty
    ++count;
  }
  CHECK(stirling2(4, 2) == count);
  CHECK(stirling2(4, 2) == 7);
}

TEST_CASE("numeric roots") {
  auto r1 = numeric_roots(P("x^2-1"), 1e-12);
  std::vector<double> re{r1[0].real(), r1[1].real()};
  std::sort(re.begin(), re.end());
  CHECK(re[0] == doctest::Approx(-1.0));
  CHECK(re[1] == doctest::Approx(1.0));

  auto r2 = numeric_roots(P("x^2-7x+11"), 1e-12);
  std::vector<double> re2{r2[0].real(), r2[1].real()};
  std::sort(re2.begin(), re2.end());
  CHECK(re2[0] == doctest::Approx((7.0 - std::sqrt(5.0)) / 2.0));
  CHECK(re2[1] == doctest::Approx((7.0 + std::sqrt(5.0)) / 2.0));

  auto r3 = numeric_roots(P("x^2+x-1"), 1e-12);
  std::vector<double> re3{r3[0].real(), r3[1].real()};
  std::sort(re3.begin(), re3.end());
  CHECK(re3[0] == doctest::Approx(-(std::sqrt(5.0) + 1.0) / 2.0));
  CHECK(re3[1] == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0));

  // residual bound documented on the operation
  IntPoly f = P("x^5-4x^3+x-3");
  for (auto z : numeric_roots(f, 1e-10)) {
    std::complex<double> acc = 0;
    double scale = 0;
    for (int i = f.degree(); i >= 0; --i) acc = acc * z + f.coeff(i).convert_to<double>();
    for (int i = 0; i <= f.degree(); ++i)
      scale += std::abs(f.coeff(i).convert_to<double>()) *
               std::pow(std::max(1.0, std::abs(z)), i);
    CHECK(std::abs(acc) <= 1e-8 * scale);
  }
}

TEST_CASE("parse and format") {
  CHECK(P("x^2 - 7*x + 11").coeffs() == std::vector<Int>{11, -7, 1});
  CHECK(P("q^2-7q+11").coeffs() == std::vector<Int>{11, -7, 1});
  CHECK(format_poly(IntPoly(std::vector<Int>{11, -7, 1})) == "x^2 - 7x + 11");
  CHECK(format_poly(IntPoly(std::vector<Int>{11, -7, 1}), 'q') == "q^2 - 7q + 11");
  CHECK(format_poly(IntPoly::zero()) == "0");
  CHECK(format_poly(P("-x^3+x")) == "-x^3 + x");
  CHECK(P("[11, -7, 1]") == P("x^2-7x+11"));
  CHECK(P("[\"11\",\"-7\",\"1\"]") == P("x^2-7x+11"));
  CHECK(poly_to_json(P("x^2-7x+11")) == "[\"11\",\"-7\",\"1\"]");
  CHECK_THROWS_AS(P("x^2 + + 3y"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);

  std::mt19937_64 rng(5150);
  for (int i = 0; i < 200; ++i) {
    IntPoly f = random_poly(rng, 12, 1000);
    CHECK(parse_poly(format_poly(f)) == f);
    CHECK(parse_poly(poly_to_json(f)) == f);
  }
}

TEST_CASE("integer helpers") {
  CHECK(is_square(Int(49)));
  CHECK_FALSE(is_square(Int(5)));
  CHECK(is_square(Int(0)));
  CHECK_FALSE(is_square(Int(-4)));
  CHECK(floordiv(Int(-7), Int(2)) == -4);
  CHECK(floordiv(Int(7), Int(2)) == 3);
  CHECK(floordiv(Int(-6), Int(2)) == -3);
}

TEST_CASE("compose and pow") {
  // x = 1 - q substitution round trip
  IntPoly sub = P("1-x");
  IntPoly f = P("x^3-2x+5");
  CHECK(compose(compose(f, sub), sub) == f);
  CHECK(pow(P("x+1"), 3) == P("x^3+3x^2+3x+1"));
}
