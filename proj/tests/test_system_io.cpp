#include <doctest.h>

#include <sstream>

#include "dblrec/error.hpp"
#include "dblrec/reduce_uw.hpp"
#include "dblrec/system_io.hpp"
#include "support.hpp"

using namespace dblrec;

namespace {

DynamicalSystem roundtrip(const DynamicalSystem& sys) {
  std::stringstream ss;
  write_system(ss, sys);
  return read_system(ss);
}

}  // namespace

TEST_CASE("system files round-trip rule for rule") {
  const auto m = testing::sample("clean");
  const auto c = compile_uw(m, std::vector<Symbol>{});
  const auto back = roundtrip(c.system);
  REQUIRE(back.size() == c.system.size());
  CHECK(back.one == c.system.one);
  CHECK(back.zero == c.system.zero);
  CHECK(back.bottom == c.system.bottom);
  for (LetterId a = 0; a < back.size(); ++a) {
    CHECK(back.letters[a].name == c.system.letters[a].name);
    CHECK(back.letters[a].role == c.system.letters[a].role);
    for (LetterId b = 0; b < back.size(); ++b) REQUIRE(back.rule(a, b) == c.system.rule(a, b));
  }
  std::stringstream a, b;
  write_system(a, c.system);
  write_system(b, back);
  CHECK(a.str() == b.str());
}

TEST_CASE("reading totalizes a partial table with a fresh bottom") {
  std::istringstream in(
      "# two letters, one rule\n"
      "letters 2\n"
      "L 0 one one\n"
      "L 1 zero zero\n"
      "one 0\n"
      "zero 1\n"
      "symmetric 0\n"
      "R 0 0 1\n");
  const auto sys = read_system(in);
  REQUIRE(sys.bottom);
  CHECK(sys.size() == 3);
  CHECK(sys.letters[*sys.bottom].name == "_bot");
  CHECK(sys.rule(0, 0) == 1);
  CHECK(sys.rule(1, 1) == *sys.bottom);
}

TEST_CASE("malformed system files are rejected") {
  const char* bad[] = {
      "letters 2\nL 0 a one\nL 1 b zero\none 0\nzero 1\nR 0 0 7\n",      // dangling image
      "letters 2\nL 0 a one\nL 1 a zero\none 0\nzero 1\n",               // duplicate name
      "letters 2\nL 0 a one\nL 1 b zero\none 0\nzero 0\n",               // one == zero
      "letters 2\nL 0 a one\nL 1 b wobble\none 0\nzero 1\n",             // unknown role
      "letters 3\nL 0 a one\nL 1 b zero\none 0\nzero 1\n",               // missing letter
      "letters 2\nL 0 a one\nL 1 b zero\none 0\nzero 1\nQ 1 2\n",        // unknown record
  };
  for (const char* text : bad) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_system(in), FormatError);
  }
}

TEST_CASE("dump lines and meta sidecars") {
  std::ostringstream os;
  write_dump_line(os, Diagonal{3, {0, 1, 1, 0}});
  CHECK(os.str() == "D 3: 0 1 1 0\n");

  const MetaEntries meta{{"kind", "uw"}, {"seed_diagonal", "6"}, {"gamma0.1", "3"}};
  std::stringstream ss;
  write_meta(ss, meta);
  CHECK(ss.str() == "meta kind uw\nmeta seed_diagonal 6\nmeta gamma0.1 3\n");
  CHECK(read_meta(ss) == meta);

  const auto m = testing::sample("negdirty");
  const auto c = compile_uw(m, std::vector<Symbol>{1});
  const auto back = uw_meta_from_entries(uw_meta_entries(c.meta));
  CHECK(back.gamma0 == c.meta.gamma0);
  CHECK(back.pair == c.meta.pair);
  CHECK(back.bootstrap == c.meta.bootstrap);
  CHECK(back.seed_diagonal == c.meta.seed_diagonal);
  CHECK_THROWS_AS(uw_meta_from_entries({{"kind", "suw"}}), FormatError);
}
