#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "waring/engine.hpp"
#include "waring/ring.hpp"
#include "waring/ring_io.hpp"

using namespace waring;

TEST_CASE("zmod agrees with integer arithmetic") {
  for (i64 m : {8, 97, 360}) {
    Ring r = Ring::zmod(m);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<i64> pick(0, m - 1);
    for (int i = 0; i < 1000; ++i) {
      i64 a = pick(rng), b = pick(rng);
      CHECK(r.add(a, b) == (a + b) % m);
      CHECK(r.mul(a, b) == a * b % m);
    }
  }
  Ring z8 = Ring::zmod(8);
  CHECK(z8.add(5, 7) == 4);
  CHECK(z8.neg(3) == 5);
  CHECK(z8.minus_one() == 7);
  CHECK(z8.characteristic() == 8);
}

TEST_CASE("pow basics") {
  Ring r = Ring::quadratic_quotient(2, 32, 16);
  i64 x = r.index_of(std::vector<i64>{1, 1});  // 1 + sqrt(2)
  auto fourth = r.coords_of(r.pow(x, 4));
  CHECK(fourth == std::vector<i64>{17, 12});  // (1+sqrt 2)^4 = 17 + 12 sqrt 2
  for (i64 idx : {i64{0}, i64{1}, x}) {
    CHECK(r.pow(idx, 1) == idx);
    CHECK(r.pow(idx, 0) == r.one());
  }
  CHECK(r.characteristic() == 32);
}

TEST_CASE("finite field constructions") {
  for (auto [p, j] : std::vector<std::pair<i64, i64>>{
           {2, 1}, {2, 4}, {3, 2}, {5, 3}, {7, 2}, {13, 1}}) {
    Ring f = Ring::gf(p, j);
    i64 q = f.size();
    CHECK(f.characteristic() == p);
    for (i64 x = 1; x < q; ++x) CHECK(f.pow(x, q - 1) == f.one());
  }
}

TEST_CASE("validation rejects broken specs") {
  FiniteRingSpec good = Ring::zmod(4).spec();

  SUBCASE("non-commutative table") {
    FiniteRingSpec bad = Ring::gf(3, 2).spec();
    bad.mult[0][1] = {1, 1};  // no longer equal to mult[1][0]
    CHECK_THROWS_AS(Ring{bad}, ValidationError);
  }
  SUBCASE("wrong identity") {
    FiniteRingSpec bad = good;
    bad.one = {2};
    CHECK_THROWS_AS(Ring{bad}, ValidationError);
  }
  SUBCASE("ill-defined structure constants") {
    // Z/2 x Z/4 with e1*e1 = e2 is not well defined: 2*e1 = 0 but 2*e2 != 0.
    FiniteRingSpec bad;
    bad.moduli = {2, 4};
    bad.one = {1, 0};
    bad.mult = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}};
    CHECK_THROWS_AS(Ring{bad}, ValidationError);
  }
  SUBCASE("size cap") {
    RingOptions opt;
    opt.size_cap = 100;
    CHECK_THROWS_AS(Ring::zmod(101, opt), SizeCapError);
  }
}

TEST_CASE("quadratic quotient ideal conditions") {
  CHECK_NOTHROW(Ring::quadratic_quotient(2, 16, 16));
  CHECK_NOTHROW(Ring::quadratic_quotient(2, 16, 8));
  CHECK_NOTHROW(Ring::quadratic_quotient(2, 32, 16));
  // e1 | d*e2 fails: 16 does not divide 3*8
  CHECK_THROWS_AS(Ring::quadratic_quotient(3, 16, 8), ValidationError);
  // e2 | e1 fails
  CHECK_THROWS_AS(Ring::quadratic_quotient(2, 16, 5), ValidationError);
}

TEST_CASE("local structure") {
  auto z8 = Ring::zmod(8).local_structure();
  CHECK(z8.is_local);
  CHECK(z8.units == std::vector<i64>{1, 3, 5, 7});

  auto f7 = Ring::gf(7, 1).local_structure();
  CHECK(f7.is_local);
  CHECK(f7.non_units == std::vector<i64>{0});

  CHECK_FALSE(Ring::zmod(6).local_structure().is_local);

  Ring prod{direct_product(Ring::zmod(4).spec(), Ring::zmod(9).spec())};
  CHECK(prod.size() == 36);
  CHECK_FALSE(prod.local_structure().is_local);
}

TEST_CASE("negative and unreduced coordinates") {
  Ring z8 = Ring::zmod(8);
  CHECK(z8.index_of(std::vector<i64>{-1}) == 7);
  CHECK(z8.index_of(std::vector<i64>{19}) == 3);
}

TEST_CASE("spec document round trip") {
  for (const Ring& r : {Ring::gf(3, 2), Ring::quadratic_quotient(2, 32, 16),
                        Ring::trunc_poly(3, 3)}) {
    std::string text = serialize_ring_spec(r.spec());
    Ring back = make_from_spec(text);
    CHECK(back.spec().moduli == r.spec().moduli);
    CHECK(back.spec().mult == r.spec().mult);
    CHECK(back.spec().one == r.spec().one);
    CHECK(serialize_ring_spec(back.spec()) == text);
  }
}

TEST_CASE("spec document validation") {
  CHECK_THROWS_AS(parse_ring_spec("not json"), ValidationError);
  CHECK_THROWS_AS(parse_ring_spec("{\"moduli\":[8],\"one\":[1]}"),
                  ValidationError);  // missing mult
  CHECK_THROWS_AS(parse_ring_spec("{\"moduli\":[8.5],\"mult\":[[[1]]],\"one\":[1]}"),
                  ValidationError);
}

TEST_CASE("GF(9) document drives the engine") {
  Ring f9 = make_from_spec(serialize_ring_spec(Ring::gf(3, 2).spec()));
  CHECK(f9.size() == 9);
  auto rep = waring_number(f9, 4);
  REQUIRE(rep.s.has_value());
  CHECK(*rep.s == 1);
}
