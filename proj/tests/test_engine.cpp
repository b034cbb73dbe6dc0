#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "waring/engine.hpp"
#include "waring/ring.hpp"

using namespace waring;

TEST_CASE("power sets") {
  CHECK(nth_power_set(Ring::zmod(8), 2).members == std::vector<i64>{0, 1, 4});
  // Direct enumeration: 3^4 = 81 = 17 (mod 32), so 17 is a fourth power even
  // though the literature sometimes lists only {0, 1, 16}.
  auto p32 = nth_power_set(Ring::zmod(32), 4).members;
  CHECK(p32 == std::vector<i64>{0, 1, 16, 17});
  MESSAGE("fourth powers mod 32 enumerate to {0,1,16,17}; 17 = 3^4 mod 32 is "
          "easy to omit by hand");
  Ring f9 = Ring::gf(3, 2);
  CHECK(nth_power_set(f9, 4).members == std::vector<i64>{0, 1, 2});
  auto all = nth_power_set(f9, 1).members;
  CHECK(static_cast<i64>(all.size()) == f9.size());
}

TEST_CASE("frozen length tables") {
  Ring z8 = Ring::zmod(8);
  auto t = length_table(z8, 2);
  CHECK(t.lengths[7] == 4);
  CHECK(t.lengths[1] == 1);
  CHECK(t.lengths[0] == 1);
  CHECK(t.max_finite == 4);
  auto ts = lstar_table(z8, 2);
  CHECK(ts.lengths[7] == 4);

  Ring z32 = Ring::zmod(32);
  auto rep32 = waring_number(z32, 4);
  CHECK(rep32.w == 15);
  REQUIRE(rep32.s.has_value());
  CHECK(*rep32.s == 15);
  CHECK(lstar_table(z32, 4).lengths[31] == 15);

  auto rep27 = waring_number(Ring::zmod(27), 3);
  CHECK(rep27.w == 4);
  CHECK(*rep27.s == 1);
  CHECK(rep27.covers_ring);

  Ring frob = Ring::trunc_poly(3, 3);
  auto t2 = length_table(frob, 2);
  CHECK(t2.lengths[frob.index_of(std::vector<i64>{0, 1, 0})] == 3);
  CHECK(waring_number(frob, 2).w == 3);
  CHECK(waring_number(frob, 6).w == 2);

  auto f7 = waring_number(Ring::gf(7, 1), 3);
  CHECK(f7.w == 3);
  CHECK(*f7.s == 1);
}

TEST_CASE("subadditivity of plain lengths") {
  for (auto [ring, n] : std::vector<std::pair<Ring, i64>>{
           {Ring::zmod(32), 4}, {Ring::quadratic_quotient(2, 32, 16), 4}}) {
    auto t = length_table(ring, n);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<i64> pick(0, ring.size() - 1);
    for (int i = 0; i < 2000; ++i) {
      i64 a = pick(rng), b = pick(rng);
      if (t.lengths[a] == kUnreachable || t.lengths[b] == kUnreachable)
        continue;
      i64 c = ring.add(a, b);
      REQUIRE(t.lengths[c] != kUnreachable);
      CHECK(t.lengths[c] <= t.lengths[a] + t.lengths[b]);
    }
  }
}

namespace {

Ring random_ring(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> family(0, 5);
  switch (family(rng)) {
    case 0: {
      std::uniform_int_distribution<i64> m(2, 5000);
      return Ring::zmod(m(rng));
    }
    case 1: {
      static const std::vector<std::pair<i64, i64>> qs = {
          {2, 1}, {2, 5}, {2, 10}, {3, 2}, {3, 6}, {5, 4}, {7, 3}, {31, 2}};
      auto [p, j] = qs[rng() % qs.size()];
      return Ring::gf(p, j);
    }
    case 2: {
      static const std::vector<std::pair<i64, i64>> ts = {
          {2, 3}, {2, 8}, {3, 4}, {5, 3}, {7, 2}, {11, 3}};
      auto [p, k] = ts[rng() % ts.size()];
      return Ring::trunc_poly(p, k);
    }
    case 3: {
      // ramified-style: e1 = p^a, e2 = p^{a-1}, d = p * odd
      static const std::vector<std::tuple<i64, i64, i64>> quads = {
          {2, 32, 16}, {2, 16, 8}, {6, 16, 8}, {3, 27, 9}, {15, 25, 5},
          {5, 25, 25}, {7, 9, 9},  {2, 8, 8}};
      auto [d, e1, e2] = quads[rng() % quads.size()];
      return Ring::quadratic_quotient(d, e1, e2);
    }
    default: {
      std::uniform_int_distribution<i64> m(2, 90);
      return Ring{direct_product(Ring::zmod(m(rng)).spec(),
                                 Ring::zmod(m(rng)).spec())};
    }
  }
}

}  // namespace

TEST_CASE("BFS equals the iterated-sumset oracle on random rings") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<i64> pick_n(1, 12);
  int done = 0;
  while (done < 50) {
    Ring r = random_ring(rng);
    if (r.size() > 10'000) continue;
    i64 n = pick_n(rng);
    auto fast = length_table(r, n);
    auto slow = naive_length_oracle(r, n);
    REQUIRE(fast.lengths == slow.lengths);
    CHECK(fast.max_finite == slow.max_finite);
    CHECK(fast.reachable_count == slow.reachable_count);
    ++done;
  }
}

TEST_CASE("lengths never grow under quotient maps Z/p^a -> Z/p^b") {
  for (i64 p : {2, 3, 5}) {
    for (i64 a = 2; a <= 5; ++a) {
      i64 pa = 1;
      for (i64 i = 0; i < a; ++i) pa *= p;
      for (i64 n : {2, 3, 4, 6, 8, 12}) {
        auto big = length_table(Ring::zmod(pa), n);
        i64 pb = pa;
        for (i64 b = a - 1; b >= 1; --b) {
          pb /= p;
          auto small = length_table(Ring::zmod(pb), n);
          for (i64 x = 0; x < pa; ++x) {
            if (big.lengths[x] == kUnreachable) continue;
            REQUIRE(small.lengths[x % pb] != kUnreachable);
            CHECK(small.lengths[x % pb] <= big.lengths[x]);
          }
        }
      }
    }
  }
}

TEST_CASE("exponent reduces to its char-free part over finite fields") {
  for (auto [p, j] : std::vector<std::pair<i64, i64>>{
           {2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 2}, {7, 2}}) {
    Ring f = Ring::gf(p, j);
    for (i64 n = 1; n <= 20; ++n) {
      i64 m = free_part(n, p);
      auto rn = waring_number(f, n);
      auto rm = waring_number(f, m);
      CHECK(rn.w == rm.w);
      CHECK(rn.s == rm.s);
    }
  }
}

TEST_CASE("odd exponents have level one") {
  std::vector<Ring> rings;
  rings.push_back(Ring::zmod(16));
  rings.push_back(Ring::gf(3, 2));
  rings.push_back(Ring::quadratic_quotient(2, 32, 16));
  rings.push_back(Ring::trunc_poly(3, 3));
  rings.push_back(Ring{direct_product(Ring::zmod(8).spec(), Ring::zmod(15).spec())});
  for (const Ring& r : rings)
    for (i64 n : {3, 5, 7}) {
      auto rep = waring_number(r, n);
      REQUIRE(rep.s.has_value());
      CHECK(*rep.s == 1);
    }
}

TEST_CASE("anchored lengths dominate plain lengths") {
  for (auto [ring, n] : std::vector<std::pair<Ring, i64>>{
           {Ring::zmod(8), 2},
           {Ring::zmod(32), 4},
           {Ring::quadratic_quotient(2, 32, 16), 4},
           {Ring::trunc_poly(3, 3), 2}}) {
    auto plain = length_table(ring, n);
    auto anchored = lstar_table(ring, n);
    CHECK(anchored.lengths[ring.one()] == 1);
    for (i64 x = 0; x < ring.size(); ++x) {
      if (anchored.lengths[x] == kUnreachable) continue;
      REQUIRE(plain.lengths[x] != kUnreachable);
      CHECK(plain.lengths[x] <= anchored.lengths[x]);
    }
  }
  CHECK_THROWS_AS(lstar_table(Ring::zmod(6), 2), NotApplicableError);
}

TEST_CASE("closures in finite fields are multiplicatively closed") {
  for (auto [p, j] : std::vector<std::pair<i64, i64>>{
           {2, 1}, {3, 2}, {5, 2}, {7, 2}, {11, 2}, {31, 2}, {997, 1}}) {
    Ring f = Ring::gf(p, j);
    for (i64 n : {2, 3, 4, 5, 6}) {
      auto t = length_table(f, n);
      std::vector<i64> closure;
      for (i64 x = 0; x < f.size(); ++x)
        if (t.lengths[x] != kUnreachable) closure.push_back(x);
      for (i64 a : closure)
        for (i64 b : closure)
          CHECK(t.lengths[f.mul(a, b)] != kUnreachable);
    }
  }
}

TEST_CASE("free part") {
  CHECK(free_part(6, 3) == 2);
  CHECK(free_part(8, 2) == 1);
  CHECK(free_part(12, 0) == 12);
  CHECK(free_part(45, 3) == 5);
}

TEST_CASE("naive oracle enforces its size bound") {
  CHECK_THROWS_AS(naive_length_oracle(Ring::zmod(10'001), 2), SizeCapError);
}

TEST_CASE("exponent one reaches everything at depth one") {
  Ring r = Ring::zmod(12);
  auto t = naive_length_oracle(r, 1);
  for (i64 x = 0; x < r.size(); ++x) CHECK(t.lengths[x] == 1);
}
