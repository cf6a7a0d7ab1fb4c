#pragma once

// Line-based text formats: system files, development dumps and meta sidecars.
//
//   letters <count>
//   L <id> <name> <role>        role: one zero bottom bootstrap type0 pair<k>
//   zero <id>
//   one <id>
//   bottom <id>                 (optional)
//   symmetric 0|1
//   R <a> <b> <c>               defined pairs only
//
// Lines starting with '#' and blank lines are ignored on input.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dblrec/develop.hpp"
#include "dblrec/dynsys.hpp"

namespace dblrec {

void write_system(std::ostream& out, const DynamicalSystem& sys);

/// Parses and totalizes: if any pair is undefined the declared Bottom (or a
/// new letter "_bot" when none is declared) becomes the absorbing fallback.
DynamicalSystem read_system(std::istream& in);

void save_system(const std::filesystem::path& path, const DynamicalSystem& sys);
DynamicalSystem load_system(const std::filesystem::path& path);

/// `D <n>: k0 k1 ... kn`
void write_dump_line(std::ostream& out, const Diagonal& d);

using MetaEntries = std::vector<std::pair<std::string, std::string>>;

/// `meta <key> <value>` per entry.
void write_meta(std::ostream& out, const MetaEntries& meta);
MetaEntries read_meta(std::istream& in);

}  // namespace dblrec
