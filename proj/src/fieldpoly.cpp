#include "dblrec/fieldpoly.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "dblrec/error.hpp"

namespace dblrec {

namespace {

Residue mul(Residue a, Residue b, std::uint32_t p) { return static_cast<Residue>(std::uint64_t{a} * b % p); }
Residue add(Residue a, Residue b, std::uint32_t p) { return static_cast<Residue>((std::uint64_t{a} + b) % p); }
Residue sub(Residue a, Residue b, std::uint32_t p) { return add(a, p - b % p, p); }

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Residue field_inverse(Residue a, std::uint32_t p) {
  if (a % p == 0) throw Error("zero has no inverse");
  Residue r = 1, base = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) r = mul(r, base, p);
    base = mul(base, base, p);
  }
  return r;
}

std::vector<Residue> lagrange_basis(Residue a, std::uint32_t p) {
  require_prime(p);
  if (a >= p) throw Error("residue out of range");
  std::vector<Residue> c(p, 0);
  c[0] = 1;
  std::size_t deg = 0;
  Residue denom = 1;
  for (Residue b = 0; b < p; ++b) {
    if (b == a) continue;
    // c *= (x - b)
    const Residue nb = (p - b) % p;
    for (std::size_t i = deg + 2; i-- > 0;) {
      const Residue lower = i > 0 ? c[i - 1] : 0;
      c[i] = add(lower, mul(c[i], nb, p), p);
    }
    ++deg;
    denom = mul(denom, sub(a, b, p), p);
  }
  const Residue inv = field_inverse(denom, p);
  for (auto& x : c) x = mul(x, inv, p);
  return c;
}

Residue Poly2::eval(Residue x, Residue y) const {
  Residue acc = 0;
  for (std::size_t i = p; i-- > 0;) {
    Residue row = 0;
    for (std::size_t j = p; j-- > 0;) row = add(mul(row, y, p), coeffs[i * p + j], p);
    acc = add(mul(acc, x, p), row, p);
  }
  return acc;
}

bool Poly2::symmetric() const {
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j)
      if (coeff(i, j) != coeff(j, i)) return false;
  return true;
}

std::size_t Poly2::degree_x() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (coeff(i, j)) d = std::max(d, i);
  return d;
}

std::size_t Poly2::degree_y() const {
  std::size_t d = 0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (coeff(i, j)) d = std::max(d, j);
  return d;
}

Poly2 interpolate2(std::span<const Residue> values, std::uint32_t p) {
  require_prime(p);
  if (values.size() != std::size_t{p} * p) throw Error("interpolate2 needs a full p x p grid");
  std::vector<std::vector<Residue>> basis(p);
  for (Residue a = 0; a < p; ++a) basis[a] = lagrange_basis(a, p);

  // t[a][j] = sum_b values(a, b) L_b[j]; coeffs[i][j] = sum_a L_a[i] t[a][j]
  std::vector<Residue> t(std::size_t{p} * p, 0);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b) {
      const Residue v = values[a * p + b] % p;
      if (!v) continue;
      for (std::size_t j = 0; j < p; ++j) t[a * p + j] = add(t[a * p + j], mul(v, basis[b][j], p), p);
    }
  Poly2 out{p, std::vector<Residue>(std::size_t{p} * p, 0)};
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t i = 0; i < p; ++i) {
      const Residue l = basis[a][i];
      if (!l) continue;
      for (std::size_t j = 0; j < p; ++j)
        out.coeffs[i * p + j] = add(out.coeffs[i * p + j], mul(l, t[a * p + j], p), p);
    }
  return out;
}

EmbeddedSystem embed_system(const DynamicalSystem& sys, std::uint32_t p) {
  require_prime(p);
  if (p > kMaxFieldPrime) throw Error("interpolation is limited to p <= " + std::to_string(kMaxFieldPrime));
  if (sys.size() > p)
    throw ModulusTooSmall("alphabet of " + std::to_string(sys.size()) + " letters needs p >= " + std::to_string(sys.size()));

  Embedding map{p, std::vector<Residue>(sys.size(), 0), std::vector<std::optional<LetterId>>(p)};
  Residue next = 2;
  for (LetterId x = 0; x < sys.size(); ++x) {
    const Residue r = x == sys.zero ? 0 : x == sys.one ? 1 : next++;
    map.of_letter[x] = r;
    map.letter_of[r] = x;
  }
  std::vector<Residue> grid(std::size_t{p} * p, 0);
  for (LetterId a = 0; a < sys.size(); ++a)
    for (LetterId b = 0; b < sys.size(); ++b)
      grid[std::size_t{map.of_letter[a]} * p + map.of_letter[b]] = map.of_letter[sys.rule(a, b)];
  return {interpolate2(grid, p), std::move(map)};
}

EmbeddingReport verify_embedding(const DynamicalSystem& sys, const Poly2& poly, const Embedding& map, std::size_t last) {
  EmbeddingReport r;
  std::vector<LetterId> letters{sys.one}, next_letters;
  std::vector<Residue> values{map.of_letter[sys.one]}, next_values;
  const Residue one = map.of_letter[sys.one];
  for (std::size_t n = 1; n <= last; ++n) {
    next_letters.assign(n + 1, sys.one);
    next_values.assign(n + 1, one);
    for (std::size_t k = 1; k < n; ++k) {
      next_letters[k] = sys.rule(letters[k], letters[k - 1]);
      next_values[k] = poly.eval(values[k], values[k - 1]);
      if (next_values[k] != map.of_letter[next_letters[k]]) {
        r.divergence = {{n - k, k}};
        r.diagonals = n;
        return r;
      }
    }
    letters.swap(next_letters);
    values.swap(next_values);
  }
  r.diagonals = last;
  return r;
}

void write_poly(std::ostream& out, const Poly2& poly) {
  out << "p " << poly.p << '\n';
  for (std::size_t i = 0; i < poly.p; ++i)
    for (std::size_t j = 0; j < poly.p; ++j)
      if (auto c = poly.coeff(i, j)) out << "C " << i << ' ' << j << ' ' << c << '\n';
}

Poly2 read_poly(std::istream& in) {
  std::string line;
  std::optional<Poly2> poly;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    auto fail = [&](const std::string& why) {
      throw FormatError("poly line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "p") {
      std::uint32_t p = 0;
      if (!(ls >> p) || poly) fail("bad modulus line");
      require_prime(p);
      poly = Poly2{p, std::vector<Residue>(std::size_t{p} * p, 0)};
    } else if (tag == "C") {
      std::size_t i, j;
      Residue v;
      if (!poly || !(ls >> i >> j >> v)) fail("bad coefficient line");
      if (i >= poly->p || j >= poly->p || v >= poly->p) fail("coefficient out of range");
      poly->coeffs[i * poly->p + j] = v;
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (!poly) throw FormatError("poly file has no modulus");
  return *poly;
}

}  // namespace dblrec
