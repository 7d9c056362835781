#include <algorithm>

#include "doctest.h"
#include "godeaux/matrix.hpp"
#include "godeaux/parse.hpp"
#include "godeaux/ringmap.hpp"
#include "godeaux/rng.hpp"
#include "godeaux/scalarmat.hpp"

using namespace godeaux;
using namespace godeaux::algebra;

TEST_CASE("scalar arithmetic over QQ and F_p") {
  Field q = Field::rationals();
  Scalar a = Scalar::from_mpq(mpq_class(2, 3), q);
  Scalar b = Scalar::from_mpq(mpq_class(1, 5), q);
  Scalar c = a + b;
  CHECK(c.str() == "13/15");
  CHECK((a * b).str() == "2/15");
  CHECK((a / b).str() == "10/3");
  CHECK((-a).str() == "-2/3");
  CHECK(a.pow(3).str() == "8/27");

  Field f31 = Field::prime(31);
  Scalar x = Scalar::from_int(17, f31);
  Scalar y = Scalar::from_int(-3, f31);
  CHECK(y.fp_value() == 28);
  CHECK((x * y).fp_value() == (17 * 28) % 31);
  CHECK((x * x.inverse()).is_one());
  CHECK(Scalar::from_mpq(mpq_class(1, 2), f31).fp_value() == 16);

  CHECK_THROWS_AS(x + a, UsageError);
  CHECK_THROWS_AS(a / Scalar::zero(q), MathError);
  CHECK_THROWS_AS(Field::prime(15), UsageError);
  CHECK_THROWS_AS(Field::prime(1ull << 32), UsageError);
}

TEST_CASE("monomial helpers") {
  Monomial a = Monomial::var(0, 2) * Monomial::var(1, 3);
  Monomial b = Monomial::var(1, 1) * Monomial::var(2, 4);
  CHECK(a.lcm(b) == Monomial::var(0, 2) * Monomial::var(1, 3) * Monomial::var(2, 4));
  CHECK(a.gcd(b) == Monomial::var(1));
  CHECK(!a.coprime(b));
  CHECK(Monomial::var(0).coprime(Monomial::var(2)));
  CHECK(b.divides(a.lcm(b)));
  CHECK(!a.divides(b));
  CHECK(a.lcm(b).div(a) == Monomial::var(2, 4));
  CHECK(a.total_degree() == 5);
}

TEST_CASE("weighted grevlex respects weights, lex and elimination blocks behave") {
  // weights (1,2,3): y^1 ranks with x^2, z beats both
  RingPtr r = make_ring(Field::rationals(), {"x", "y", "z"}, {1, 2, 3});
  Order o = Order::wgrevlex();
  Monomial x2 = Monomial::var(0, 2), y = Monomial::var(1), z = Monomial::var(2);
  CHECK(o.cmp(z, x2, *r) > 0);      // degree 3 beats degree 2
  CHECK(o.cmp(x2, y, *r) > 0);      // same degree, tie broken to the earlier variable
  CHECK(o.cmp(y, y, *r) == 0);

  Order l = Order::lex();
  CHECK(l.cmp(Monomial::var(0), Monomial::var(1, 9), *r) > 0);

  // elimination order: any monomial touching the front block dominates
  Order e = Order::elim(1);
  CHECK(e.cmp(Monomial::var(0), Monomial::var(1, 8) * Monomial::var(2, 8), *r) > 0);
}

TEST_CASE("polynomial arithmetic and homogeneity") {
  RingPtr r = make_ring(Field::rationals(), {"x", "y"}, {1, 1});
  Polynomial x = Polynomial::variable(r, 0);
  Polynomial y = Polynomial::variable(r, 1);
  Polynomial f = (x + y).pow(2);
  CHECK(f == x * x + x * y.scale(Scalar::from_int(2, r->field())) + y * y);
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 2);
  CHECK((f - f).is_zero());
  Polynomial g = f + Polynomial::from_int(r, 1);
  CHECK(!g.is_homogeneous());
  CHECK(g.evaluate({Scalar::from_int(2, r->field()), Scalar::from_int(3, r->field())}).str() ==
        "26");

  // substitution: y -> x^2 turns x*y into x^3
  Polynomial s = (x * y).substitute_var(1, x * x);
  CHECK(s == x.pow(3));
}

TEST_CASE("parameters live in coefficients, not in the ring") {
  RingPtr r = make_ring(Field::rationals(), {"x", "y"}, {1, 2}, {"a", "l1"});
  Polynomial f = parse_polynomial(r, "(a^2 - 1)*x^2 + l1*y - 2*x^2");
  CHECK(f.degree() == 2);
  CHECK(f.is_homogeneous());  // params carry no weight
  // specializing a = 2 merges the x^2 terms
  Polynomial g = f.substitute_param(0, Scalar::from_int(2, r->field()));
  CHECK(g == parse_polynomial(r, "x^2 + l1*y"));
  Polynomial h = g.substitute_param(1, Scalar::from_int(-1, r->field()));
  CHECK(h == parse_polynomial(r, "x^2 - y"));
  // specializing a = sqrt(3)'s rational stand-in 1 kills the x^2 part entirely
  CHECK(f.substitute_param(0, Scalar::from_int(1, r->field())).substitute_param(1, Scalar::zero(r->field())) ==
        -parse_polynomial(r, "2*x^2"));
  // full evaluation with parameter values
  Scalar v = f.evaluate({Scalar::from_int(1, r->field()), Scalar::from_int(1, r->field())},
                        {Scalar::from_int(3, r->field()), Scalar::from_int(5, r->field())});
  CHECK(v.str() == "11");  // (9-1) - 2 + 5
}

TEST_CASE("parse/print round-trip on random polynomials") {
  RingPtr r = make_ring(Field::rationals(), {"x", "y", "z"}, {1, 2, 3}, {"a", "b"});
  Rng rng(20260822);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Term> raw;
    int nterms = 1 + int(rng.below(6));
    for (int t = 0; t < nterms; ++t) {
      Monomial m;
      for (int i = 0; i < 3; ++i) m.e[i] = std::uint16_t(rng.below(4));
      Monomial pm;
      for (int i = 0; i < 2; ++i) pm.e[i] = std::uint16_t(rng.below(3));
      long num = long(rng.below(19)) - 9;
      long den = 1 + long(rng.below(7));
      Scalar c = Scalar::from_mpq(mpq_class(num, den), r->field());
      raw.push_back({m, ParamPoly::make({{pm, c}})});
    }
    Polynomial f = Polynomial::from_terms(r, Order::wgrevlex(), raw);
    CHECK(parse_polynomial(r, f.str()) == f);
  }
  // and over a prime field
  RingPtr rp = make_ring(Field::prime(31), {"x", "y"}, {1, 1}, {"a"});
  Rng rng2(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Term> raw;
    for (int t = 0; t < 4; ++t) {
      Monomial m;
      m.e[0] = std::uint16_t(rng2.below(5));
      m.e[1] = std::uint16_t(rng2.below(5));
      Monomial pm;
      pm.e[0] = std::uint16_t(rng2.below(2));
      raw.push_back({m, ParamPoly::make({{pm, Scalar::from_int(long(rng2.below(31)), rp->field())}})});
    }
    Polynomial f = Polynomial::from_terms(rp, Order::wgrevlex(), raw);
    CHECK(parse_polynomial(rp, f.str()) == f);
  }
}

TEST_CASE("parser handles precedence, rationals, whitespace, lists") {
  RingPtr r = make_ring(Field::rationals(), {"x", "y"}, {1, 1});
  CHECK(parse_polynomial(r, "2*x^2 + 3/2*y - 1") ==
        parse_polynomial(r, "  2 * x ^ 2+3/2* y-1 "));
  CHECK(parse_polynomial(r, "(x+y)^2") == parse_polynomial(r, "x^2+2*x*y+y^2"));
  CHECK(parse_polynomial(r, "-x*-y") == parse_polynomial(r, "x*y"));
  auto list = parse_list(r, "[x, y^2, x - y]");
  REQUIRE(list.size() == 3);
  CHECK(list[2] == parse_polynomial(r, "x-y"));
  auto m = parse_matrix(r, "[[x, y], [1, 0]]");
  REQUIRE(m.size() == 2);
  CHECK(m[1][0] == Polynomial::from_int(r, 1));
  CHECK(m[1][1].is_zero());
  CHECK_THROWS_AS(parse_polynomial(r, "x + q"), UsageError);
  CHECK_THROWS_AS(parse_polynomial(r, "x +"), UsageError);
}

TEST_CASE("transport moves polynomials between rings by name") {
  RingPtr small = make_ring(Field::rationals(), {"x", "y"}, {1, 2}, {"l"});
  RingPtr big = make_ring(Field::rationals(), {"t", "x", "y"}, {1, 1, 2}, {"l"});
  Polynomial f = parse_polynomial(small, "l*x^2 + y");
  Polynomial g = transport(f, big);
  CHECK(g == parse_polynomial(big, "l*x^2 + y"));
  // back again
  CHECK(transport(g, small) == f);
  // flattening: parameter becomes a ring variable
  RingPtr flat = make_ring(Field::rationals(), {"x", "y", "l"}, {1, 2, 1});
  Polynomial h = transport(f, flat);
  CHECK(h == parse_polynomial(flat, "l*x^2 + y"));
  // QQ -> F_p reduction
  RingPtr modp = make_ring(Field::prime(7), {"x", "y"}, {1, 2}, {"l"});
  Polynomial fp = transport(parse_polynomial(small, "10*x^2 + 1/2*y"), modp);
  CHECK(fp == parse_polynomial(modp, "3*x^2 + 4*y"));
  // dropping an unused variable is fine, a used one is not
  CHECK(transport(parse_polynomial(big, "x*y"), small) == parse_polynomial(small, "x*y"));
  CHECK_THROWS_AS(transport(parse_polynomial(big, "t*x"), small), UsageError);
}

TEST_CASE("ring maps substitute variable images") {
  RingPtr r = make_ring(Field::rationals(), {"x", "y"}, {1, 1});
  // the swap-and-negate involution x -> -y, y -> -x
  RingMap sigma(r, r, {-Polynomial::variable(r, 1), -Polynomial::variable(r, 0)});
  Polynomial f = parse_polynomial(r, "x^2 - x*y + 3");
  CHECK(sigma.apply(f) == parse_polynomial(r, "y^2 - x*y + 3"));
  CHECK(sigma.apply(sigma.apply(f)) == f);
}

TEST_CASE("matrix helpers and small determinants") {
  RingPtr r = make_ring(Field::rationals(), {"x", "y"}, {1, 1});
  auto a = parse_matrix(r, "[[x, y], [1, x]]");
  auto b = parse_matrix(r, "[[0, 1], [1, 0]]");
  auto ab = mat_mul(a, b);
  CHECK(ab[0][0] == parse_polynomial(r, "y"));
  CHECK(ab[0][1] == parse_polynomial(r, "x"));
  CHECK(poly_det(a) == parse_polynomial(r, "x^2 - y"));
  auto c = parse_matrix(r, "[[x, y, 0], [1, x, y], [0, 1, x]]");
  CHECK(poly_det(c) == parse_polynomial(r, "x^3 - 2*x*y"));
  // antisymmetry check: swapping two rows flips the sign
  auto cswap = c;
  std::swap(cswap[0], cswap[1]);
  CHECK(poly_det(cswap) == -poly_det(c));
  CHECK(mat_is_zero(mat_add(a, mat_neg(a))));
}

TEST_CASE("exact linear algebra: rref, kernel, solve") {
  Field f = Field::rationals();
  ScalarMat m(0, 3, f);
  m.append_row({Scalar::from_int(1, f), Scalar::from_int(2, f), Scalar::from_int(3, f)});
  m.append_row({Scalar::from_int(2, f), Scalar::from_int(4, f), Scalar::from_int(6, f)});
  m.append_row({Scalar::from_int(1, f), Scalar::from_int(0, f), Scalar::from_int(1, f)});
  CHECK(m.rank() == 2);
  auto ker = m.kernel();
  REQUIRE(ker.size() == 1);
  // check A k = 0
  for (std::size_t i = 0; i < 3; ++i) {
    Scalar s = Scalar::zero(f);
    for (std::size_t j = 0; j < 3; ++j) s = s + m.at(i, j) * ker[0][j];
    CHECK(s.is_zero());
  }

  auto sol = m.solve({Scalar::from_int(6, f), Scalar::from_int(12, f), Scalar::from_int(2, f)});
  CHECK(sol.status == SolveStatus::ok);
  for (std::size_t i = 0; i < 3; ++i) {
    Scalar s = Scalar::zero(f);
    for (std::size_t j = 0; j < 3; ++j) s = s + m.at(i, j) * sol.x[j];
    CHECK(s == m.at(i, 2) * Scalar::from_int(2, f));
  }
  auto uniq = m.solve({Scalar::from_int(6, f), Scalar::from_int(12, f), Scalar::from_int(2, f)},
                      true);
  CHECK(uniq.status == SolveStatus::underdetermined);
  auto bad = m.solve({Scalar::from_int(6, f), Scalar::from_int(11, f), Scalar::from_int(2, f)});
  CHECK(bad.status == SolveStatus::inconsistent);

  // over F_p
  Field f7 = Field::prime(7);
  ScalarMat mp(0, 2, f7);
  mp.append_row({Scalar::from_int(1, f7), Scalar::from_int(2, f7)});
  mp.append_row({Scalar::from_int(3, f7), Scalar::from_int(4, f7)});
  auto s2 = mp.solve({Scalar::from_int(1, f7), Scalar::from_int(0, f7)}, true);
  REQUIRE(s2.status == SolveStatus::ok);
  CHECK((mp.at(0, 0) * s2.x[0] + mp.at(0, 1) * s2.x[1]).is_one());
  CHECK((mp.at(1, 0) * s2.x[0] + mp.at(1, 1) * s2.x[1]).is_zero());
}

TEST_CASE("parampoly exact division") {
  Field f = Field::rationals();
  RingPtr r = make_ring(f, {"x"}, {1}, {"a", "b"});
  auto pp = [&](const std::string& s) {
    return parse_polynomial(r, s).coeff_of(Monomial::unit());
  };
  ParamPoly n = pp("a^2 - b^2");
  ParamPoly d = pp("a - b");
  CHECK(n.divide_exact(d, f) == pp("a + b"));
  CHECK_THROWS_AS(pp("a^2 + b").divide_exact(d, f), MathError);
}

TEST_CASE("rng reproducibility and fork independence") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(42);
  Rng d = c.fork(1);
  Rng e = c.fork(1);
  CHECK(d.next() != e.next());  // forks advance the parent
}
