#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dblrec/develop.hpp"
#include "dblrec/error.hpp"
#include "dblrec/fieldpoly.hpp"
#include "dblrec/reduce_suw.hpp"
#include "dblrec/reduce_uw.hpp"
#include "dblrec/render.hpp"
#include "dblrec/symcode.hpp"
#include "dblrec/system_io.hpp"

using namespace dblrec;

namespace {

struct MachineArgs {
  std::string machine;
  std::string word;
};

void add_machine_args(CLI::App* cmd, MachineArgs& a) {
  cmd->add_option("machine", a.machine, "machine file")->required()->check(CLI::ExistingFile);
  cmd->add_option("word", a.word, "input word, '-' for empty")->required();
}

std::string sidecar_path(const std::string& sys, const std::string& meta) { return meta.empty() ? sys + ".meta" : meta; }

void save_meta(const std::string& path, const MetaEntries& e) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_meta(out, e);
}

std::string tape_text(const TuringMachine& m, const Configuration& c) {
  std::ostringstream os;
  const auto lo = std::min(c.touched_min, c.head), hi = std::max(c.touched_max, c.head);
  for (auto i = lo; i <= hi; ++i) {
    if (i > lo) os << ' ';
    if (i == c.head) os << '[' << m.state_name(c.state) << ':' << m.symbol_name(c.read(i)) << ']';
    else os << m.symbol_name(c.read(i));
  }
  return os.str();
}

void print_run(const RunReport& r) {
  std::cout << "halted " << r.halted << "\nsteps " << r.steps << "\ntape_clean_at_halt " << r.tape_clean_at_halt
            << "\nvisited_negative " << r.visited_negative << "\nuw_accept " << r.uw_accept() << "\nsuw_accept "
            << r.suw_accept() << '\n';
}

int print_verify(const char* label, std::size_t steps_checked, const std::vector<bool>& matches,
                 const std::optional<std::pair<std::size_t, std::int64_t>>& mismatch, const ZeroVerdict& verdict,
                 bool resolved, bool agreement, bool ok) {
  std::size_t good = 0;
  for (bool b : matches) good += b;
  std::cout << label << " steps_checked " << steps_checked << " matching " << good << '\n';
  if (mismatch) std::cout << "MismatchAt(" << mismatch->first << "," << mismatch->second << ")\n";
  std::cout << "verdict " << describe(verdict) << '\n'
            << "resolved " << resolved << '\n'
            << "agreement " << (resolved ? (agreement ? "yes" : "NO") : "n/a") << '\n'
            << (ok ? "OK" : "VIOLATION") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamical systems with double recursion: compile, develop, verify"};
  app.require_subcommand(1);

  MachineArgs ma;
  std::string sys_path, meta_path, poly_path, ppm_path;
  std::size_t n = 200, t = 25, max_steps = 100;
  std::uint32_t p = 2;
  bool dump = false, serial = false, no_wide = false;

  auto* cuw = app.add_subcommand("compile-uw", "compile (M, w) into a system");
  add_machine_args(cuw, ma);
  cuw->add_option("-o,--output", sys_path, "system file")->required();
  cuw->add_option("--meta", meta_path, "meta sidecar (default <output>.meta)");

  auto* csuw = app.add_subcommand("compile-suw", "compile (M, w) into a symmetric system");
  add_machine_args(csuw, ma);
  csuw->add_option("-o,--output", sys_path, "system file")->required();
  csuw->add_option("--meta", meta_path, "meta sidecar (default <output>.meta)");

  auto* dev = app.add_subcommand("develop", "develop a system");
  dev->add_option("system", sys_path)->required()->check(CLI::ExistingFile);
  dev->add_option("-n", n, "last diagonal")->required();
  dev->add_flag("--dump", dump, "print every diagonal");
  dev->add_option("--ppm", ppm_path, "write a P6 picture");
  dev->add_flag("--serial", serial, "use the serial kernel");

  auto* run = app.add_subcommand("run-tm", "run a machine");
  add_machine_args(run, ma);
  run->add_option("--max-steps", max_steps)->required();

  auto* vuw = app.add_subcommand("verify-uw", "check the UW simulation against the machine");
  add_machine_args(vuw, ma);
  vuw->add_option("-n", n, "diagonals to develop");
  vuw->add_option("-t", t, "machine steps to compare");

  auto* vsuw = app.add_subcommand("verify-suw", "check the symmetric simulation against the machine");
  add_machine_args(vsuw, ma);
  vsuw->add_option("-n", n, "diagonals to develop");
  vsuw->add_option("-t", t, "machine steps to compare");

  auto* cz = app.add_subcommand("certify-zero", "scan for a zero-closure certificate");
  cz->add_option("system", sys_path)->required()->check(CLI::ExistingFile);
  cz->add_option("-n", n, "last diagonal")->required();

  auto* ip = app.add_subcommand("interpolate", "interpolate the rule table over F_p");
  ip->add_option("system", sys_path)->required()->check(CLI::ExistingFile);
  ip->add_option("-p", p, "prime modulus")->required();
  ip->add_option("-o,--output", poly_path, "polynomial dump")->required();

  auto* vp = app.add_subcommand("verify-poly", "compare table and polynomial developments");
  vp->add_option("system", sys_path)->required()->check(CLI::ExistingFile);
  vp->add_option("poly", poly_path)->required()->check(CLI::ExistingFile);
  vp->add_option("-n", n, "last diagonal")->required();

  auto* sc = app.add_subcommand("symcode-check", "brute-force the code classes for a machine's alphabet");
  sc->add_option("machine", ma.machine)->required()->check(CLI::ExistingFile);
  sc->add_flag("--no-wide", no_wide, "skip decoding against the full tagged alphabet");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cuw->parsed() || csuw->parsed()) {
      const auto m = load_machine(ma.machine);
      const auto w = parse_word(m, ma.word);
      if (cuw->parsed()) {
        auto c = compile_uw(m, w);
        save_system(sys_path, c.system);
        save_meta(sidecar_path(sys_path, meta_path), uw_meta_entries(c.meta));
        std::cout << "letters " << c.system.size() << "\nseed_diagonal " << c.meta.seed_diagonal << '\n';
      } else {
        auto c = compile_suw(m, w);
        save_system(sys_path, c.system);
        save_meta(sidecar_path(sys_path, meta_path), suw_meta_entries(c.meta));
        std::cout << "letters " << c.system.size() << "\nseed_diagonal " << c.meta.seed_diagonal << "\ntype7_rules "
                  << c.meta.type7_rules << '\n';
      }
      return 0;
    }

    if (dev->parsed()) {
      const auto sys = load_system(sys_path);
      if (!ppm_path.empty()) {
        const auto ds = serial ? develop_serial(sys, n) : develop(sys, n);
        if (dump)
          for (const auto& d : ds) write_dump_line(std::cout, d);
        render_ppm(ppm_path, ds, sys);
        return 0;
      }
      DiagonalStream stream(sys, !serial);
      bool bottom = false;
      for (;;) {
        const auto& d = stream.current();
        if (dump) write_dump_line(std::cout, d);
        if (sys.bottom)
          for (auto c : d.cells) bottom = bottom || c == *sys.bottom;
        if (d.n >= n) break;
        stream.advance();
      }
      if (bottom) {
        std::cerr << "bottom letter reached\n";
        return 1;
      }
      return 0;
    }

    if (run->parsed()) {
      const auto m = load_machine(ma.machine);
      const auto w = parse_word(m, ma.word);
      const auto trace = run_trace(m, w, max_steps);
      for (std::size_t i = 0; i < trace.configs.size(); ++i)
        std::cout << i << ": " << tape_text(m, trace.configs[i]) << '\n';
      print_run(classify_trace(m, trace));
      return 0;
    }

    if (vuw->parsed()) {
      const auto m = load_machine(ma.machine);
      const auto w = parse_word(m, ma.word);
      const auto c = compile_uw(m, w);
      const auto r = verify_uw(c, m, w, t, n);
      std::cout << "bottom_free " << r.bottom_free << "\ntype_discipline " << r.type_discipline << "\nmin_margin "
                << r.min_margin << '\n';
      return print_verify("uw", r.steps_checked, r.step_matches, r.first_mismatch, r.verdict, r.resolved,
                          r.agreement, r.ok());
    }

    if (vsuw->parsed()) {
      const auto m = load_machine(ma.machine);
      const auto w = parse_word(m, ma.word);
      const auto c = compile_suw(m, w);
      const auto r = verify_suw(c, m, w, t, n);
      if (r.asymmetry_at) std::cout << "AsymmetryAt(" << r.asymmetry_at->first << "," << r.asymmetry_at->second << ")\n";
      std::cout << "symmetric " << r.symmetric << "\nbottom_free " << r.bottom_free << "\ntype_discipline "
                << r.type_discipline << "\nmin_margin " << r.min_margin << '\n';
      return print_verify("suw", r.steps_checked, r.step_matches, r.first_mismatch, r.verdict, r.resolved,
                          r.agreement, r.ok());
    }

    if (cz->parsed()) {
      const auto sys = load_system(sys_path);
      const auto v = scan_ultimately_zero(sys, n);
      std::cout << describe(v) << "\nclosure " << v.closure << '\n';
      for (auto z : v.uncertified_zero) std::cout << "uncertified_zero " << z << '\n';
      return v.kind == VerdictKind::InteriorZeroButUncertified ? 1 : 0;
    }

    if (ip->parsed()) {
      const auto sys = load_system(sys_path);
      const auto e = embed_system(sys, p);
      std::ofstream out(poly_path);
      if (!out) throw Error("cannot write " + poly_path);
      write_poly(out, e.poly);
      return 0;
    }

    if (vp->parsed()) {
      const auto sys = load_system(sys_path);
      std::ifstream in(poly_path);
      const auto poly = read_poly(in);
      const auto e = embed_system(sys, poly.p);
      const auto r = verify_embedding(sys, poly, e.map, n);
      if (r.divergence) {
        std::cout << "DivergenceAt(" << r.divergence->first << "," << r.divergence->second << ")\n";
        return 1;
      }
      std::cout << "identical " << r.diagonals << '\n';
      return 0;
    }

    if (sc->parsed()) {
      const auto m = load_machine(ma.machine);
      const auto r = check_symcod(m.symbol_count(), m.state_count(), !no_wide);
      std::cout << "generic " << r.generic_count << "\ncentral " << r.central_count << "\nunion " << r.union_count
                << "\nclasses " << r.classes << "\npalindromic " << r.palindromic_classes << "\nreversal_pairs "
                << r.pair_classes << "\ncollisions " << r.collision_count << "\nworst_case_ok " << r.worst_case_ok
                << "\nwide_extra_preimages " << r.wide_extra_preimages << "\nterms " << r.terms << '\n';
      for (const auto& [a, b] : r.collisions) {
        std::cout << "collision";
        for (auto c : a) std::cout << ' ' << g0_name(m, c);
        std::cout << " /";
        for (auto c : b) std::cout << ' ' << g0_name(m, c);
        std::cout << '\n';
      }
      return r.ok() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
