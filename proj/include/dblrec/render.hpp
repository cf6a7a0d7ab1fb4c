#pragma once

// PPM pictures of a development: pixel (i, j) is the colour of a(i, j).

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "dblrec/develop.hpp"
#include "dblrec/dynsys.hpp"

namespace dblrec {

using Rgb = std::array<std::uint8_t, 3>;

/// zero white, one black, bottom magenta; every other id gets a golden-angle
/// hue at full saturation.
std::vector<Rgb> palette(const DynamicalSystem& sys);

/// Binary P6 of size (N+1) x (N+1) from D_0..D_N; cells below the
/// anti-diagonal (i + j > N) are painted as zero.
void render_ppm(std::ostream& out, const std::vector<Diagonal>& diagonals, const DynamicalSystem& sys);
void render_ppm(const std::filesystem::path& path, const std::vector<Diagonal>& diagonals, const DynamicalSystem& sys);

}  // namespace dblrec
