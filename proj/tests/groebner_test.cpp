#include <doctest.h>

#include <filesystem>
#include <set>
#include <unistd.h>

#include "godeaux/gbcache.hpp"
#include "godeaux/groebner.hpp"
#include "godeaux/hilbert.hpp"
#include "godeaux/parse.hpp"
#include "godeaux/ringmap.hpp"
#include "godeaux/rng.hpp"
#include "godeaux/scalarmat.hpp"
#include "godeaux/sha256.hpp"

using namespace godeaux;
using namespace godeaux::algebra;
using namespace godeaux::gb;

namespace {

RingPtr qq_ring(std::vector<std::string> vars) {
  std::vector<long> w(vars.size(), 1);
  return make_ring(Field::rationals(), std::move(vars), w);
}

RingPtr fp_ring(long p, std::vector<std::string> vars) {
  std::vector<long> w(vars.size(), 1);
  return make_ring(Field::prime(p), std::move(vars), w);
}

Polynomial pp(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

Ideal ideal_of(const RingPtr& r, std::initializer_list<std::string> gens) {
  std::vector<Polynomial> v;
  for (const auto& s : gens) v.push_back(pp(r, s));
  return Ideal(r, std::move(v));
}

// random homogeneous polynomial of the given degree (weight-1 ring)
Polynomial random_homogeneous(const RingPtr& r, long deg, Rng& rng) {
  const Ring& R = *r;
  std::vector<Term> raw;
  std::vector<Monomial> all;
  // enumerate degree-deg monomials in up to 3 variables
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b) {
      if (R.nvars() == 2) {
        if (a + b == deg) {
          Monomial m;
          m.e[0] = a;
          m.e[1] = b;
          all.push_back(m);
        }
        continue;
      }
      int c = static_cast<int>(deg) - a - b;
      Monomial m;
      m.e[0] = a;
      m.e[1] = b;
      m.e[2] = c;
      all.push_back(m);
    }
  for (const Monomial& m : all) {
    long coef = static_cast<long>(rng.below(7)) - 3;
    if (coef == 0) continue;
    raw.push_back({m, ParamPoly::constant(Scalar::from_int(coef, R.field()))});
  }
  return Polynomial::from_terms(r, Order::wgrevlex(), std::move(raw));
}

// degree-d slice of an ideal as row vectors over the monomial basis
std::vector<Monomial> degree_monomials(const Ring& R, long d) {
  std::vector<Monomial> out;
  if (R.nvars() != 3) throw UsageError("helper expects 3 variables");
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b) {
      Monomial m;
      m.e[0] = a;
      m.e[1] = b;
      m.e[2] = static_cast<int>(d) - a - b;
      out.push_back(m);
    }
  return out;
}

bool member_by_linear_algebra(const Ideal& I, const Polynomial& f) {
  const Ring& R = *I.ring();
  const Field& F = R.field();
  long d = f.degree();
  std::vector<Monomial> basis = degree_monomials(R, d);
  auto row_of = [&](const Polynomial& g) {
    std::vector<Scalar> row;
    row.reserve(basis.size());
    for (const Monomial& m : basis) {
      ParamPoly c = g.coeff_of(m);
      row.push_back(c.is_zero() ? Scalar::zero(F) : c.constant_value(F));
    }
    return row;
  };

  ScalarMat span(0, basis.size(), F);
  for (const Polynomial& g : I.gens()) {
    long gd = g.degree();
    if (gd > d) continue;
    // multiply by every monomial of complementary degree
    for (const Monomial& m : degree_monomials(R, d - gd)) {
      Polynomial prod = g.mul_term(m, ParamPoly::constant(Scalar::one(F)));
      span.append_row(row_of(prod));
    }
  }
  std::size_t base_rank = span.rank();
  span.append_row(row_of(f));
  return span.rank() == base_rank;
}

}  // namespace

TEST_CASE("principal and redundant ideals") {
  auto r = qq_ring({"x", "y"});
  {
    auto B = groebner_basis(ideal_of(r, {"x"}), Order::wgrevlex());
    REQUIRE(B.elems.size() == 1);
    CHECK(B.elems[0] == pp(r, "x"));
  }
  {
    // second generator is (x+y) * f: must disappear
    auto B = groebner_basis(ideal_of(r, {"2*x^2-2*y", "x^3+x^2*y-x*y-y^2"}),
                            Order::wgrevlex());
    REQUIRE(B.elems.size() == 1);
    CHECK(B.elems[0] == pp(r, "x^2-y"));  // made monic
  }
  {
    Ideal zero(r, {});
    auto B = groebner_basis(zero, Order::wgrevlex());
    CHECK(B.elems.empty());
    CHECK(normal_form(pp(r, "x+y"), B) == pp(r, "x+y"));
  }
}

TEST_CASE("twisted cubic: lex basis and elimination") {
  auto r = qq_ring({"t", "x", "y"});
  Ideal I = ideal_of(r, {"x-t^2", "y-t^3"});

  // monic under lex the relation reads x^3 - y^2; same curve either way
  auto B = groebner_basis(I, Order::lex());
  bool found = false;
  for (const auto& e : B.elems)
    if (e == pp(r, "y^2-x^3") || e == pp(r, "x^3-y^2")) found = true;
  CHECK(found);

  Ideal E = eliminate(I, {"t"});
  REQUIRE(E.ring()->nvars() == 2);
  CHECK(E.ring()->var_index("t") == -1);
  REQUIRE(E.gens().size() == 1);
  CHECK(ideal_equal(E, Ideal(E.ring(), {pp(E.ring(), "y^2-x^3")})));

  // every eliminated generator is in the original ideal (block order check)
  auto Bblock = groebner_basis(I, Order::elim(1));
  for (const auto& g : E.gens()) {
    Polynomial back = transport(g, r);
    CHECK(reduces_to_zero(back, Bblock));
  }

  // eliminating nothing returns the ideal unchanged
  Ideal same = eliminate(I, {});
  CHECK(same.gens().size() == I.gens().size());
}

TEST_CASE("normal form: membership, idempotence, pinned remainders") {
  auto r = qq_ring({"x", "y"});
  Ideal I = ideal_of(r, {"x^2-1"});
  auto B = groebner_basis(I, Order::wgrevlex());

  CHECK(normal_form(pp(r, "x^3"), B) == pp(r, "x"));
  CHECK(normal_form(pp(r, "x^2"), B) == pp(r, "1"));
  CHECK(normal_form(pp(r, "x^4+2*x^2*y-y"), B) == pp(r, "y+1"));

  // f in <B> reduces to zero; remainder is a fixed point
  Polynomial member = pp(r, "x^2-1") * pp(r, "x^5-3*x*y+7");
  CHECK(reduces_to_zero(member, B));
  Polynomial nf = normal_form(pp(r, "x^7+y^3+x*y"), B);
  CHECK(normal_form(nf, B) == nf);
}

TEST_CASE("buchberger invariant: S-polynomials of the basis reduce to zero") {
  Rng rng(20260822);
  auto check_ring = [&](const RingPtr& r, int rounds) {
    const Field& F = r->field();
    for (int round = 0; round < rounds; ++round) {
      std::vector<Polynomial> gens;
      int ng = 2 + static_cast<int>(rng.below(2));
      for (int i = 0; i < ng; ++i)
        gens.push_back(random_homogeneous(r, 2 + rng.below(2), rng));
      Ideal I(r, gens);
      if (I.is_zero()) continue;
      auto B = groebner_basis(I, Order::wgrevlex());
      ParamPoly one = ParamPoly::constant(Scalar::one(F));
      for (std::size_t i = 0; i < B.elems.size(); ++i)
        for (std::size_t j = i + 1; j < B.elems.size(); ++j) {
          const Monomial &mi = B.elems[i].leading_monomial(),
                         &mj = B.elems[j].leading_monomial();
          Monomial L = mi.lcm(mj);
          Polynomial s = B.elems[i].mul_term(L.div(mi), one) -
                         B.elems[j].mul_term(L.div(mj), one);
          CHECK(reduces_to_zero(s, B));
        }
      // basis and generators define the same ideal
      CHECK(ideal_equal(I, Ideal(r, B.elems)));
    }
  };
  check_ring(qq_ring({"x", "y", "z"}), 6);
  check_ring(fp_ring(31, {"x", "y", "z"}), 10);
}

TEST_CASE("membership agrees with brute-force graded linear algebra") {
  auto r = fp_ring(31, {"x", "y", "z"});
  const Field& F = r->field();
  Rng rng(971);
  int member_hits = 0, non_member_hits = 0;
  for (int round = 0; round < 25; ++round) {
    Polynomial g1 = random_homogeneous(r, 2, rng);
    Polynomial g2 = random_homogeneous(r, 3, rng);
    if (g1.is_zero() || g2.is_zero()) continue;
    Ideal I(r, {g1, g2});
    auto B = groebner_basis(I, Order::wgrevlex());

    // built members reduce to zero
    Polynomial member = g1 * random_homogeneous(r, 2, rng) + g2 * random_homogeneous(r, 1, rng);
    CHECK(reduces_to_zero(member, B));

    // a random degree-d form: reduction and linear algebra must agree
    long d = 4 + static_cast<long>(rng.below(3));  // 4..6
    Polynomial probe = random_homogeneous(r, d, rng);
    if (probe.is_zero()) continue;
    bool by_nf = reduces_to_zero(probe, B);
    bool by_la = member_by_linear_algebra(I, probe);
    CHECK(by_nf == by_la);
    if (by_nf)
      ++member_hits;
    else
      ++non_member_hits;
  }
  // the probe set must exercise both outcomes to mean anything
  CHECK(non_member_hits > 0);
  (void)member_hits;
  (void)F;
}

TEST_CASE("degree-truncated bases answer low-degree membership exactly") {
  auto r = fp_ring(31, {"x", "y", "z"});
  Rng rng(4242);
  for (int round = 0; round < 6; ++round) {
    Polynomial g1 = random_homogeneous(r, 2, rng);
    Polynomial g2 = random_homogeneous(r, 2, rng);
    if (g1.is_zero() || g2.is_zero()) continue;
    Ideal I(r, {g1, g2});
    auto Bfull = groebner_basis(I, Order::wgrevlex());

    GBOptions capped;
    capped.degree_cap = 4;
    Ideal J(r, {g1, g2});  // fresh wrapper: separate memory cache slot anyway
    auto Bcap = groebner_basis(J, Order::wgrevlex(), capped);

    for (int probe = 0; probe < 10; ++probe) {
      long d = 2 + static_cast<long>(rng.below(3));  // 2..4, inside the cap
      Polynomial f = random_homogeneous(r, d, rng);
      CHECK(reduces_to_zero(f, Bfull) == reduces_to_zero(f, Bcap));
    }
  }
}

TEST_CASE("saturation and ideal quotient") {
  auto r = qq_ring({"x", "y"});
  {
    Ideal I = ideal_of(r, {"x*y"});
    Ideal S = saturate(I, pp(r, "x"));
    CHECK(ideal_equal(S, ideal_of(r, {"y"})));
    // saturation is a fixed point of the colon
    CHECK(ideal_equal(ideal_quotient_single(S, pp(r, "x")), S));
  }
  {
    Ideal I = ideal_of(r, {"x^2-y"});
    CHECK(ideal_equal(saturate(I, pp(r, "7")), I));  // unit changes nothing
  }
  {
    CHECK(ideal_equal(ideal_quotient(ideal_of(r, {"x*y"}), ideal_of(r, {"x"})),
                      ideal_of(r, {"y"})));
    Ideal I = ideal_of(r, {"x^2-y", "y^3"});
    CHECK(ideal_equal(ideal_quotient(I, ideal_of(r, {"1"})), I));
  }
  {
    // plane union line: x=0 component survives saturation by z
    auto r3 = qq_ring({"x", "z", "w"});
    Ideal I = ideal_of(r3, {"x*z", "x*w"});
    Ideal S = saturate(I, pp(r3, "x"));
    CHECK(ideal_equal(S, ideal_of(r3, {"z", "w"})));
  }
}

TEST_CASE("intersection") {
  auto r = qq_ring({"x", "y"});
  CHECK(ideal_equal(intersect(ideal_of(r, {"x"}), ideal_of(r, {"y"})),
                    ideal_of(r, {"x*y"})));
  Ideal I = ideal_of(r, {"x^2-y", "x*y-1"});
  CHECK(ideal_equal(intersect(I, I), I));
}

TEST_CASE("syzygies: Koszul relations") {
  auto r = qq_ring({"x", "y", "z"});
  {
    // two coprime generators in rank 1
    FreeModuleVector a{{pp(r, "x")}, {}};
    FreeModuleVector b{{pp(r, "y")}, {}};
    auto syz = syzygies({a, b}, Order::wgrevlex());
    REQUIRE(syz.size() == 1);
    CHECK(syz[0].entries[0] == pp(r, "y"));
    CHECK(syz[0].entries[1] == pp(r, "-x"));
  }
  {
    // a single generator over a domain has no syzygies
    FreeModuleVector a{{pp(r, "x^2-y*z")}, {}};
    CHECK(syzygies({a}, Order::wgrevlex()).empty());
  }
  {
    // second Koszul map of the regular sequence (x^2, y^2, z^2);
    // its syzygy module is generated by the third Koszul map's column
    std::vector<FreeModuleVector> cols;
    cols.push_back({{pp(r, "y^2"), pp(r, "-x^2"), pp(r, "0")}, {}});
    cols.push_back({{pp(r, "z^2"), pp(r, "0"), pp(r, "-x^2")}, {}});
    cols.push_back({{pp(r, "0"), pp(r, "z^2"), pp(r, "-y^2")}, {}});
    auto syz = syzygies(cols, Order::wgrevlex());
    REQUIRE(syz.size() == 1);
    // v kills the columns entrywise
    for (const auto& v : syz) {
      for (int row = 0; row < 3; ++row) {
        Polynomial acc = Polynomial::zero(r);
        for (int j = 0; j < 3; ++j) acc = acc + v.entries[j] * cols[j].entries[row];
        CHECK(acc.is_zero());
      }
    }
    bool direct = syz[0].entries[0] == pp(r, "z^2") &&
                  syz[0].entries[1] == pp(r, "-y^2") &&
                  syz[0].entries[2] == pp(r, "x^2");
    bool flipped = syz[0].entries[0] == pp(r, "-z^2") &&
                   syz[0].entries[1] == pp(r, "y^2") &&
                   syz[0].entries[2] == pp(r, "-x^2");
    CHECK((direct || flipped));
  }
}

TEST_CASE("matrix lifting") {
  auto r = qq_ring({"x", "y"});
  Polynomial zero = Polynomial::zero(r);
  {
    PolyMatrix P{{pp(r, "1"), zero}, {zero, pp(r, "1")}};
    PolyMatrix H{{pp(r, "x^2-y"), pp(r, "x*y")}, {pp(r, "y"), pp(r, "x+1")}};
    PolyMatrix N = lift_matrix_solution(P, H, Order::wgrevlex());
    CHECK(mat_is_zero(mat_add(N, mat_neg(H))));
  }
  {
    PolyMatrix P{{pp(r, "x"), pp(r, "y")}};
    PolyMatrix H{{pp(r, "x^2+x*y")}};
    PolyMatrix N = lift_matrix_solution(P, H, Order::wgrevlex());
    // the defining identity is re-checked inside; spot-check shape
    REQUIRE(N.size() == 2);
    REQUIRE(N[0].size() == 1);
    CHECK(mat_is_zero(mat_add(mat_mul(P, N), mat_neg(H))));
  }
  {
    PolyMatrix P{{pp(r, "x"), pp(r, "y")}};
    PolyMatrix H{{pp(r, "1")}};
    CHECK_THROWS_AS(lift_matrix_solution(P, H, Order::wgrevlex()), MathError);
  }
  {
    // lift through the Koszul matrix: a combination of its columns
    auto r3 = qq_ring({"x", "y", "z"});
    Polynomial z3 = Polynomial::zero(r3);
    PolyMatrix P{{pp(r3, "y^2"), pp(r3, "z^2"), z3},
                 {pp(r3, "-x^2"), z3, pp(r3, "z^2")},
                 {z3, pp(r3, "-x^2"), pp(r3, "-y^2")}};
    PolyMatrix C{{pp(r3, "x*y^2+y^2*z^2")},
                 {pp(r3, "-x^3")},
                 {pp(r3, "-x^2*z^2")}};
    // C = x*col1 + z^2*col2 - ... fabricate honestly: C = P * (x, z^2, 0)^t
    PolyMatrix V{{pp(r3, "x")}, {pp(r3, "z^2")}, {z3}};
    C = mat_mul(P, V);
    PolyMatrix N = lift_matrix_solution(P, C, Order::wgrevlex());
    CHECK(mat_is_zero(mat_add(mat_mul(P, N), mat_neg(C))));
  }
}

TEST_CASE("hilbert series and projective invariants") {
  {
    // one variable, zero ideal: constants in every degree
    auto r1 = make_ring(Field::rationals(), {"x"}, {1});
    HilbertData h = hilbert_data(Ideal(r1, {}), 10);
    for (long n = 0; n <= 10; ++n) CHECK(h.hilbert_function.at(n) == 1);
    CHECK(h.dimension == 0);
    CHECK(h.degree == 1);
    CHECK(h.numerator_str() == "1");
  }
  {
    // weighted ring of type (1, 2^3, 3^4, 4): count monomials by degree
    auto rw = make_ring(Field::rationals(),
                        {"x", "y1", "y2", "y3", "z1", "z2", "z3", "z4", "w"},
                        {1, 2, 2, 2, 3, 3, 3, 3, 4});
    HilbertData h = hilbert_data(Ideal(rw, {}), 3);
    CHECK(h.hilbert_function.at(0) == 1);
    CHECK(h.hilbert_function.at(1) == 1);
    CHECK(h.hilbert_function.at(2) == 4);
    CHECK(h.hilbert_function.at(3) == 8);
  }
  {
    // hyperplane in P^3
    auto r4 = qq_ring({"x0", "x1", "x2", "x3"});
    DimDeg dd = dimension_degree(ideal_of(r4, {"x0+x1+x2+x3"}));
    CHECK(dd.dim == 2);
    CHECK(dd.deg == 1);
  }
  {
    // twisted cubic curve in P^3 has degree 3
    auto r4 = qq_ring({"x", "y", "z", "w"});
    DimDeg dd = dimension_degree(ideal_of(r4, {"x*z-y^2", "y*w-z^2", "x*w-y*z"}));
    CHECK(dd.dim == 1);
    CHECK(dd.deg == 3);
  }
  {
    // quadric curve in P^2
    auto r3 = qq_ring({"x", "y", "z"});
    DimDeg dd = dimension_degree(ideal_of(r3, {"x^2+y^2-z^2"}));
    CHECK(dd.dim == 1);
    CHECK(dd.deg == 2);
  }
  {
    // empty scheme
    auto r2 = qq_ring({"x", "y"});
    DimDeg dd = dimension_degree(ideal_of(r2, {"1"}));
    CHECK(dd.dim == -1);
    CHECK(dd.deg == 0);
  }
}

TEST_CASE("hilbert prefix matches direct monomial counting") {
  auto rw = make_ring(Field::rationals(), {"x", "y", "z"}, {1, 2, 3});
  Rng rng(555);
  for (int round = 0; round < 10; ++round) {
    // random monomial ideal
    std::vector<Polynomial> gens;
    int ng = 1 + static_cast<int>(rng.below(3));
    std::vector<Monomial> monos;
    for (int i = 0; i < ng; ++i) {
      Monomial m;
      m.e[0] = rng.below(3);
      m.e[1] = rng.below(2);
      m.e[2] = rng.below(2);
      if (m.is_unit()) m.e[0] = 1;
      monos.push_back(m);
      gens.push_back(Polynomial::monomial(rw, m, ParamPoly::constant(Scalar::one(rw->field()))));
    }
    HilbertData h = hilbert_data(Ideal(rw, gens), 8);
    for (long n = 0; n <= 8; ++n) {
      long count = 0;
      for (int a = 0; a <= 8; ++a)
        for (int b = 0; 2 * b <= 8; ++b)
          for (int c = 0; 3 * c <= 8; ++c) {
            if (a + 2 * b + 3 * c != n) continue;
            Monomial m;
            m.e[0] = a;
            m.e[1] = b;
            m.e[2] = c;
            bool in_ideal = false;
            for (const Monomial& g : monos)
              if (g.divides(m)) in_ideal = true;
            if (!in_ideal) ++count;
          }
      CHECK(h.hilbert_function.at(n) == count);
    }
  }
}

TEST_CASE("budgets fail loudly") {
  auto r = qq_ring({"t", "x", "y"});
  Ideal I = ideal_of(r, {"x-t^2", "y-t^3"});
  GBOptions tight;
  tight.budget.max_pairs = 1;
  CHECK_THROWS_AS(groebner_basis(I, Order::lex(), tight), ResourceError);

  Ideal J = ideal_of(r, {"x-t^2", "y-t^3"});
  GBOptions tiny;
  tiny.budget.max_basis = 1;
  CHECK_THROWS_AS(groebner_basis(J, Order::lex(), tiny), ResourceError);
}

TEST_CASE("trim and sum") {
  auto r = qq_ring({"x", "y"});
  Ideal I = ideal_of(r, {"x^2", "x*y", "x", "y"});
  Ideal T = trim_generators(I);
  REQUIRE(T.gens().size() == 2);
  CHECK(T.gens()[0] == pp(r, "x"));
  CHECK(T.gens()[1] == pp(r, "y"));

  Ideal S = ideal_sum(ideal_of(r, {"x"}), {pp(r, "y")});
  CHECK(ideal_equal(S, ideal_of(r, {"x", "y"})));
}

TEST_CASE("parameter coefficients: exact and generic reduction") {
  auto r = make_ring(Field::rationals(), {"x"}, {1}, {"a"});
  Ideal I(r, {pp(r, "a*x-1")});
  auto B = groebner_basis(I, Order::wgrevlex());
  REQUIRE(B.elems.size() == 1);

  // (a x - 1)(a x + 1) is a clean member: exact-division path
  CHECK(reduces_to_zero(pp(r, "a^2*x^2-1"), B));
  // reducing x itself needs the cross-multiplied (generic in a) path
  CHECK(normal_form(pp(r, "x"), B) == pp(r, "1"));
}

TEST_CASE("sha256 known answers") {
  CHECK(sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  // double-block message (length > 55 forces two padding blocks)
  CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("disk cache round-trips bases byte for byte") {
  std::string dir = (std::filesystem::temp_directory_path() /
                     ("godeaux-gb-cache-" + std::to_string(::getpid())))
                        .string();
  GBCache cache(dir);
  cache.clear();

  auto r = qq_ring({"t", "x", "y"});
  GBOptions opts;
  opts.cache = &cache;

  Ideal I1 = ideal_of(r, {"x-t^2", "y-t^3"});
  auto B1 = groebner_basis(I1, Order::lex(), opts);
  CHECK(cache.stats().entries == 1);

  // a fresh ideal object (cold memory cache) must hit the disk entry
  Ideal I2 = ideal_of(r, {"x-t^2", "y-t^3"});
  auto B2 = groebner_basis(I2, Order::lex(), opts);
  REQUIRE(B1.elems.size() == B2.elems.size());
  for (std::size_t i = 0; i < B1.elems.size(); ++i)
    CHECK(B1.elems[i].str() == B2.elems[i].str());

  // the key separates order, cap and characteristic
  std::string k1 = gb_cache_key(I1, Order::lex(), -1);
  std::string k2 = gb_cache_key(I1, Order::wgrevlex(), -1);
  std::string k3 = gb_cache_key(I1, Order::lex(), 4);
  CHECK(k1 != k2);
  CHECK(k1 != k3);
  auto rp = fp_ring(31, {"t", "x", "y"});
  Ideal Ip = ideal_of(rp, {"x-t^2", "y-t^3"});
  CHECK(gb_cache_key(Ip, Order::lex(), -1) != k1);

  CHECK(cache.clear() == 1);
  CHECK(cache.stats().entries == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("deterministic replay") {
  auto r = fp_ring(31, {"x", "y", "z"});
  Rng rng(777);
  std::vector<Polynomial> gens{random_homogeneous(r, 2, rng),
                               random_homogeneous(r, 3, rng),
                               random_homogeneous(r, 2, rng)};
  Ideal I1(r, gens), I2(r, gens);
  auto B1 = groebner_basis(I1, Order::wgrevlex());
  auto B2 = groebner_basis(I2, Order::wgrevlex());
  REQUIRE(B1.elems.size() == B2.elems.size());
  for (std::size_t i = 0; i < B1.elems.size(); ++i)
    CHECK(B1.elems[i].str() == B2.elems[i].str());
}
