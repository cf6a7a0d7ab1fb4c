#pragma once

// Rule tables as bivariate polynomial functions over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dblrec/dynsys.hpp"

namespace dblrec {

using Residue = std::uint32_t;

bool is_prime(std::uint32_t p);

inline constexpr std::uint32_t kMaxFieldPrime = 257;

Residue field_inverse(Residue a, std::uint32_t p);

/// Coefficients c_0..c_{p-1} of the indicator polynomial of a on F_p.
/// Throws NonPrimeModulus.
std::vector<Residue> lagrange_basis(Residue a, std::uint32_t p);

struct Poly2 {
  std::uint32_t p = 2;
  std::vector<Residue> coeffs;  // coefficient of x^i y^j at i * p + j

  Residue coeff(std::size_t i, std::size_t j) const { return coeffs[i * p + j]; }
  Residue eval(Residue x, Residue y) const;
  bool symmetric() const;  // coefficient grid equals its transpose
  std::size_t degree_x() const;
  std::size_t degree_y() const;
  friend bool operator==(const Poly2&, const Poly2&) = default;
};

/// values[a * p + b] is the required F(a, b). Row then column interpolation.
Poly2 interpolate2(std::span<const Residue> values, std::uint32_t p);

struct Embedding {
  std::uint32_t p = 2;
  std::vector<Residue> of_letter;                 // by LetterId
  std::vector<std::optional<LetterId>> letter_of;  // by residue
};

struct EmbeddedSystem {
  Poly2 poly;
  Embedding map;
};

/// zero -> 0, one -> 1, the remaining letters in id order. Pairs not both in
/// the image take the value 0. Throws NonPrimeModulus or ModulusTooSmall.
EmbeddedSystem embed_system(const DynamicalSystem& sys, std::uint32_t p);

struct EmbeddingReport {
  std::size_t diagonals = 0;
  std::optional<std::pair<std::size_t, std::size_t>> divergence;  // (i, j)

  bool ok() const { return !divergence; }
};

/// Develops D_0..D_N by table lookup and, in parallel, by evaluating F on
/// the embedded values; stops at the first cell where they differ.
EmbeddingReport verify_embedding(const DynamicalSystem& sys, const Poly2& poly, const Embedding& map, std::size_t last);

/// `p <p>` then `C <i> <j> <v>` for every nonzero coefficient, sorted by (i, j).
void write_poly(std::ostream& out, const Poly2& poly);
Poly2 read_poly(std::istream& in);

}  // namespace dblrec
