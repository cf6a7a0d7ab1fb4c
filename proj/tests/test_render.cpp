#include <doctest.h>

#include <set>
#include <sstream>

#include "dblrec/render.hpp"
#include "support.hpp"

using namespace dblrec;

namespace {

std::string image(const DynamicalSystem& sys, std::size_t n) {
  std::ostringstream os;
  render_ppm(os, develop(sys, n), sys);
  return os.str();
}

std::string pixels(const std::string& ppm) { return ppm.substr(std::string("P6\n4 4\n255\n").size()); }

}  // namespace

TEST_CASE("constant developments render as expected") {
  const auto ones = image(testing::constant_system(0), 3);
  CHECK(ones.starts_with("P6\n4 4\n255\n"));
  const auto lit = pixels(ones);
  REQUIRE(lit.size() == 48);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const char want = i + j <= 3 ? '\0' : '\xff';
      for (int c = 0; c < 3; ++c) CHECK(lit[3 * (4 * i + j) + c] == want);
    }

  const auto zeros = pixels(image(testing::constant_system(1), 3));
  REQUIRE(zeros.size() == 48);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const char want = (i == 0 || j == 0) ? '\0' : '\xff';
      for (int c = 0; c < 3; ++c) CHECK(zeros[3 * (4 * i + j) + c] == want);
    }
}

TEST_CASE("rendering is deterministic and the palette fixed") {
  std::mt19937_64 rng(4);
  const auto sys = testing::random_table(rng, 6, false);
  CHECK(image(sys, 30) == image(sys, 30));
  const auto p = palette(sys);
  CHECK(p[sys.zero] == Rgb{255, 255, 255});
  CHECK(p[sys.one] == Rgb{0, 0, 0});
  // 2 * 137.508 = 275.016 degrees: violet sector, red rising
  CHECK(p[2] == Rgb{static_cast<std::uint8_t>(255 * 35016 / 60000), 0, 255});
  std::set<Rgb> distinct(p.begin(), p.end());
  CHECK(distinct.size() == p.size());

  SystemBuilder b;
  b.add("x", {RoleKind::Type0});
  const auto built = std::move(b).build(false);
  CHECK(palette(built)[*built.bottom] == Rgb{255, 0, 255});
}
