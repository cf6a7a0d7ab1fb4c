#include <doctest.h>

#include <random>

#include "dblrec/develop.hpp"
#include "dblrec/dynsys.hpp"
#include "dblrec/error.hpp"
#include "support.hpp"

using namespace dblrec;

TEST_CASE("rule table lookup: explicit entries, fallback, dense mirror") {
  RuleTable t(3, LetterId{2});
  t.define(0, 1, 1);
  t.define(1, 0, 0);
  CHECK(t.at(0, 1) == 1);
  CHECK(t.at(1, 0) == 0);
  CHECK(t.at(2, 2) == 2);
  CHECK(t.total());
  CHECK_FALSE(t.dense());
  t.compact();
  CHECK(t.dense());
  for (LetterId a = 0; a < 3; ++a)
    for (LetterId b = 0; b < 3; ++b) CHECK(t.at(a, b) == (t.defined(a, b) ? *t.defined(a, b) : 2u));

  RuleTable partial(2);
  partial.define(0, 0, 1);
  CHECK_FALSE(partial.total());
  partial.compact();
  CHECK_FALSE(partial.dense());
}

TEST_CASE("builder rejects conflicting images and totalizes with bottom") {
  SystemBuilder b;
  const auto x = b.add("x", {RoleKind::Type0});
  b.define(x, b.zero(), x);
  b.define(x, b.zero(), x);
  CHECK_THROWS_AS(b.define(x, b.zero(), b.zero()), ConflictingRule);
  b.define_symmetric(x, b.one(), b.zero());
  CHECK(b.defined(b.one(), x) == b.zero());
  auto sys = std::move(b).build(false);
  REQUIRE(sys.bottom);
  CHECK(sys.rule(x, x) == *sys.bottom);
  CHECK(sys.rule(x, sys.zero) == x);
  CHECK_NOTHROW(check_structure(sys));
}

TEST_CASE("constant systems develop to walls plus constant interior") {
  for (LetterId c : {LetterId{0}, LetterId{1}}) {
    const auto sys = testing::constant_system(c);
    const auto ds = develop(sys, 12);
    REQUIRE(ds.size() == 13);
    for (const auto& d : ds) {
      REQUIRE(d.cells.size() == d.n + 1);
      CHECK(d.cells.front() == sys.one);
      CHECK(d.cells.back() == sys.one);
      for (std::size_t k = 1; k < d.n; ++k) CHECK(d.cells[k] == c);
    }
  }
}

TEST_CASE("xor development is Pascal's triangle mod 2") {
  const auto sys = testing::xor_system();
  const auto ds = develop(sys, 64);
  for (const auto& d : ds)
    for (std::size_t k = 0; k <= d.n; ++k) {
      const std::size_t i = d.n - k, j = k;
      // Lucas: C(i+j, i) is odd iff i and j share no bits
      const LetterId want = (i & j) == 0 ? sys.one : sys.zero;
      CHECK(d.cells[k] == want);
    }
}

TEST_CASE("scan: xor has zero interiors on powers of two but no closure") {
  const auto sys = testing::xor_system();
  CHECK_FALSE(zero_closure(sys));
  const auto v = scan_ultimately_zero(sys, 16);
  CHECK(v.kind == VerdictKind::NotZeroWithin);
  CHECK(v.bound == 16);
  CHECK(v.uncertified_zero == std::vector<std::size_t>{2, 4, 8, 16});
}

TEST_CASE("scan: f = 0 is certified at the first interior") {
  const auto v = scan_ultimately_zero(testing::constant_system(1), 10);
  CHECK(v.certified());
  CHECK(v.diagonal == 2);
  CHECK(describe(v) == "ZeroCertifiedFrom(2)");
  const auto ones = scan_ultimately_zero(testing::constant_system(0), 10);
  CHECK(ones.kind == VerdictKind::NotZeroWithin);
  CHECK(describe(ones) == "NotZeroWithin(10)");
}

TEST_CASE("scan: trailing zero interiors without closure stay uncertified") {
  // letters: 0 one, 1 zero, 2 x; f(1,1) = 0, f(0,1) = f(1,0) = 0, f(0,0) = x
  std::vector<LetterId> img(9, 2);
  img[0 * 3 + 0] = 1;
  img[1 * 3 + 0] = 1;
  img[0 * 3 + 1] = 1;
  img[1 * 3 + 1] = 2;
  const auto sys = testing::table_system(3, img);
  const auto v = scan_ultimately_zero(sys, 3);
  CHECK(v.kind == VerdictKind::InteriorZeroButUncertified);
  CHECK(v.diagonal == 2);
  CHECK(scan_ultimately_zero(sys, 4).kind == VerdictKind::NotZeroWithin);
}

TEST_CASE("property: parallel and serial kernels agree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    const auto sys = testing::random_table(rng, 2 + rng() % 6, trial % 2 == 0);
    const std::size_t n = trial < 10 ? 60 : 4200;  // the last two cross the parallel threshold
    DiagonalStream par(sys, true), ser(sys, false);
    while (par.index() < n) {
      par.advance();
      ser.advance();
      REQUIRE(par.current() == ser.current());
    }
  }
}

TEST_CASE("property: a certificate is never contradicted later") {
  std::mt19937_64 rng(5);
  int certified = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto sys = testing::random_table(rng, 2 + rng() % 3, trial % 3 == 0);
    const std::size_t bound = 40;
    const auto v = scan_ultimately_zero(sys, bound);
    if (!v.certified()) continue;
    ++certified;
    const auto ds = develop_serial(sys, bound + 40);
    for (std::size_t n = v.diagonal; n < ds.size(); ++n) REQUIRE(ds[n].interior_all(sys.zero));
  }
  CHECK(certified > 10);
}

TEST_CASE("streaming keeps two diagonals") {
  const auto sys = testing::xor_system();
  DiagonalStream s(sys);
  while (s.index() < 3000) s.advance();
  CHECK(s.live_cells() <= 2 * 3001 + 64);
}

TEST_CASE("symmetry and validation reports") {
  const auto sym = testing::xor_system();
  CHECK(table_symmetric(sym));
  std::vector<LetterId> img{0, 1, 0, 0};  // f(1,1) differs from nothing; f(zero,one)=0 vs f(one,zero)=1
  const auto asym = testing::table_system(2, img);
  std::pair<LetterId, LetterId> w;
  CHECK_FALSE(table_symmetric(asym, &w));
  CHECK(((w == std::pair<LetterId, LetterId>{0, 1}) || (w == std::pair<LetterId, LetterId>{1, 0})));

  SystemBuilder b;
  b.define(b.one(), b.one(), b.zero());
  auto partial = std::move(b).build(false);
  const auto r = validate_system(partial, 5);
  CHECK(r.total);
  REQUIRE(r.bottom_at);
  CHECK(*r.bottom_at == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK_FALSE(r.clean());

  const auto ones = validate_system(testing::constant_system(0), 4);
  REQUIRE(ones.one_inside);
  CHECK(ones.one_inside->first == 2);
  const auto zeros = validate_system(testing::constant_system(1), 4);
  CHECK(zeros.clean());
  CHECK(zeros.zero_fixed);
}

TEST_CASE("restriction sends escaping images to zero") {
  // x maps everything to y; restricting to {one, zero, x} folds y into zero
  std::vector<LetterId> img(16, 3);
  const auto sys = testing::table_system(4, img);
  const LetterId keep[] = {0, 1, 2};
  const auto r = restrict_to(sys, keep);
  CHECK(r.size() == 3);
  for (LetterId a = 0; a < 3; ++a)
    for (LetterId b = 0; b < 3; ++b) CHECK(r.rule(a, b) == r.zero);
  const LetterId bad[] = {0, 2};
  CHECK_THROWS(restrict_to(sys, bad));
}
