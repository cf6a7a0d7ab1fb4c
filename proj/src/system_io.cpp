#include "dblrec/system_io.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dblrec/error.hpp"

namespace dblrec {

namespace {

std::uint32_t parse_id(const std::string& tok, std::size_t line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw FormatError("line " + std::to_string(line) + ": expected decimal id, got '" + tok + "'");
  return static_cast<std::uint32_t>(std::stoul(tok));
}

}  // namespace

void write_system(std::ostream& out, const DynamicalSystem& sys) {
  out << "letters " << sys.size() << '\n';
  for (const auto& l : sys.letters) out << "L " << l.id << ' ' << l.name << ' ' << role_name(l.role) << '\n';
  out << "zero " << sys.zero << '\n';
  out << "one " << sys.one << '\n';
  if (sys.bottom) out << "bottom " << *sys.bottom << '\n';
  out << "symmetric " << (sys.symmetric ? 1 : 0) << '\n';
  std::vector<std::array<LetterId, 3>> rules;
  rules.reserve(sys.table.defined_count());
  sys.table.for_each_defined([&](LetterId a, LetterId b, LetterId c) { rules.push_back({a, b, c}); });
  std::sort(rules.begin(), rules.end());
  for (const auto& r : rules) out << "R " << r[0] << ' ' << r[1] << ' ' << r[2] << '\n';
}

DynamicalSystem read_system(std::istream& in) {
  DynamicalSystem sys;
  std::optional<std::size_t> count;
  std::optional<LetterId> zero, one, bottom;
  std::optional<bool> symmetric;
  std::vector<std::optional<Letter>> letters;
  std::vector<std::array<LetterId, 3>> rules;

  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    std::istringstream ls(raw);
    std::string head;
    ls >> head;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    auto need = [&](std::size_t k) {
      if (toks.size() != k) throw FormatError("line " + std::to_string(lineno) + ": malformed '" + head + "' line");
    };
    if (head == "letters") {
      need(1);
      count = parse_id(toks[0], lineno);
      letters.assign(*count, std::nullopt);
    } else if (head == "L") {
      need(3);
      if (!count) throw FormatError("letter before 'letters' header");
      auto id = parse_id(toks[0], lineno);
      if (id >= *count) throw FormatError("line " + std::to_string(lineno) + ": letter id out of range");
      auto role = parse_role(toks[2]);
      if (!role) throw FormatError("line " + std::to_string(lineno) + ": unknown role '" + toks[2] + "'");
      if (letters[id]) throw FormatError("line " + std::to_string(lineno) + ": duplicate letter id");
      letters[id] = Letter{id, toks[1], *role};
    } else if (head == "zero") {
      need(1);
      zero = parse_id(toks[0], lineno);
    } else if (head == "one") {
      need(1);
      one = parse_id(toks[0], lineno);
    } else if (head == "bottom") {
      need(1);
      bottom = parse_id(toks[0], lineno);
    } else if (head == "symmetric") {
      need(1);
      if (toks[0] != "0" && toks[0] != "1") throw FormatError("symmetric flag must be 0 or 1");
      symmetric = toks[0] == "1";
    } else if (head == "R") {
      need(3);
      rules.push_back({parse_id(toks[0], lineno), parse_id(toks[1], lineno), parse_id(toks[2], lineno)});
    } else {
      throw FormatError("line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
    }
  }
  if (!count || !zero || !one || !symmetric) throw FormatError("missing letters/zero/one/symmetric header");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!letters[i]) throw FormatError("letter " + std::to_string(i) + " not declared");
    sys.letters.push_back(std::move(*letters[i]));
  }
  sys.zero = *zero;
  sys.one = *one;
  sys.bottom = bottom;
  sys.symmetric = *symmetric;
  sys.table = RuleTable(sys.size());
  const auto n = sys.size();
  for (const auto& r : rules) {
    if (r[0] >= n || r[1] >= n || r[2] >= n) throw FormatError("dangling id in rule line");
    if (auto prev = sys.table.defined(r[0], r[1]); prev && *prev != r[2]) throw ConflictingRule(r[0], r[1], *prev, r[2]);
    sys.table.define(r[0], r[1], r[2]);
  }
  if (!sys.table.total()) {
    if (!sys.bottom) {
      std::string name = "_bot";
      while (sys.find(name)) name += '_';
      auto id = static_cast<LetterId>(sys.size());
      sys.letters.push_back({id, name, {RoleKind::Bottom}});
      sys.bottom = id;
      sys.table.resize(sys.size());
    }
    sys.table.set_fallback(*sys.bottom);
  }
  check_structure(sys);
  sys.table.compact();
  return sys;
}

void save_system(const std::filesystem::path& path, const DynamicalSystem& sys) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  write_system(out, sys);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

DynamicalSystem load_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  try {
    return read_system(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_dump_line(std::ostream& out, const Diagonal& d) {
  out << "D " << d.n << ':';
  for (auto c : d.cells) out << ' ' << c;
  out << '\n';
}

void write_meta(std::ostream& out, const MetaEntries& meta) {
  for (const auto& [k, v] : meta) out << "meta " << k << ' ' << v << '\n';
}

MetaEntries read_meta(std::istream& in) {
  MetaEntries out;
  std::string raw;
  while (std::getline(in, raw)) {
    if (raw.empty() || raw[0] == '#') continue;
    std::istringstream ls(raw);
    std::string head, key, value;
    ls >> head >> key >> value;
    if (head != "meta" || key.empty() || value.empty()) throw FormatError("malformed meta line '" + raw + "'");
    out.emplace_back(key, value);
  }
  return out;
}

}  // namespace dblrec
