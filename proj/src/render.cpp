#include "dblrec/render.hpp"

#include <fstream>
#include <ostream>

#include "dblrec/error.hpp"

namespace dblrec {

namespace {

Rgb hue(std::uint64_t id) {
  const std::uint32_t h = static_cast<std::uint32_t>(id * 137508 % 360000);  // millidegrees
  const std::uint32_t sector = h / 60000;
  const auto up = static_cast<std::uint8_t>(255u * (h % 60000) / 60000);
  const auto down = static_cast<std::uint8_t>(255u - up);
  switch (sector) {
    case 0: return {255, up, 0};
    case 1: return {down, 255, 0};
    case 2: return {0, 255, up};
    case 3: return {0, down, 255};
    case 4: return {up, 0, 255};
    default: return {255, 0, down};
  }
}

}  // namespace

std::vector<Rgb> palette(const DynamicalSystem& sys) {
  std::vector<Rgb> p(sys.size());
  for (LetterId x = 0; x < sys.size(); ++x) p[x] = hue(x);
  p[sys.zero] = {255, 255, 255};
  p[sys.one] = {0, 0, 0};
  if (sys.bottom) p[*sys.bottom] = {255, 0, 255};
  return p;
}

void render_ppm(std::ostream& out, const std::vector<Diagonal>& diagonals, const DynamicalSystem& sys) {
  if (diagonals.empty()) throw Error("nothing to render");
  const std::size_t n = diagonals.size() - 1;
  const auto colours = palette(sys);
  out << "P6\n" << n + 1 << ' ' << n + 1 << "\n255\n";
  std::vector<char> row(3 * (n + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      const Rgb& c = i + j <= n ? colours[diagonals[i + j].cells[j]] : colours[sys.zero];
      for (int k = 0; k < 3; ++k) row[3 * j + k] = static_cast<char>(c[k]);
    }
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

void render_ppm(const std::filesystem::path& path, const std::vector<Diagonal>& diagonals, const DynamicalSystem& sys) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  render_ppm(out, diagonals, sys);
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace dblrec
