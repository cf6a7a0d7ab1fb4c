#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dblrec/dynsys.hpp"
#include "dblrec/turing.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(DBLREC_DATA_DIR) + "/" + name; }

inline dblrec::TuringMachine sample(const std::string& name) { return dblrec::load_machine(data_path("machines/" + name + ".tm")); }

inline const std::vector<std::string>& sample_names() {
  static const std::vector<std::string> names{"clean", "dirty", "right", "negclean", "negdirty"};
  return names;
}

inline dblrec::TuringMachine machine_from(const std::string& text) {
  std::istringstream in(text);
  return dblrec::parse_machine(in);
}

/// Letters 0 = one, 1 = zero, then size - 2 plain letters; every pair defined.
inline dblrec::DynamicalSystem table_system(std::size_t size, const std::vector<dblrec::LetterId>& images,
                                            bool symmetric = false) {
  dblrec::DynamicalSystem sys;
  for (std::size_t i = 0; i < size; ++i) {
    dblrec::LetterRole role{i == 0 ? dblrec::RoleKind::One : i == 1 ? dblrec::RoleKind::Zero : dblrec::RoleKind::Type0};
    sys.letters.push_back({static_cast<dblrec::LetterId>(i), i == 0 ? "1" : i == 1 ? "0" : "x" + std::to_string(i), role});
  }
  sys.one = 0;
  sys.zero = 1;
  sys.symmetric = symmetric;
  sys.table = dblrec::RuleTable(size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      sys.table.define(static_cast<dblrec::LetterId>(a), static_cast<dblrec::LetterId>(b), images[a * size + b]);
  sys.table.compact();
  return sys;
}

inline dblrec::DynamicalSystem random_table(std::mt19937_64& rng, std::size_t size, bool symmetric) {
  std::vector<dblrec::LetterId> images(size * size);
  std::uniform_int_distribution<dblrec::LetterId> pick(0, static_cast<dblrec::LetterId>(size - 1));
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      if (symmetric && b < a) images[a * size + b] = images[b * size + a];
      else images[a * size + b] = pick(rng);
    }
  return table_system(size, images, symmetric);
}

/// f(a, b) = a xor b on {0, 1}, with the letter "1" as one.
inline dblrec::DynamicalSystem xor_system() {
  // ids: 0 = one (value 1), 1 = zero (value 0)
  auto v = [](dblrec::LetterId id) { return id == 0 ? 1u : 0u; };
  std::vector<dblrec::LetterId> images(4);
  for (dblrec::LetterId a = 0; a < 2; ++a)
    for (dblrec::LetterId b = 0; b < 2; ++b) images[a * 2 + b] = (v(a) ^ v(b)) ? 0 : 1;
  return table_system(2, images, true);
}

inline dblrec::DynamicalSystem constant_system(dblrec::LetterId image) {
  return table_system(2, std::vector<dblrec::LetterId>(4, image), true);
}

inline std::vector<dblrec::Symbol> random_word(std::mt19937_64& rng, const dblrec::TuringMachine& m, std::size_t max_len) {
  std::vector<dblrec::Symbol> w(rng() % (max_len + 1));
  for (auto& s : w) s = static_cast<dblrec::Symbol>(1 + rng() % (m.symbol_count() - 1));
  return w;
}

}  // namespace testing
