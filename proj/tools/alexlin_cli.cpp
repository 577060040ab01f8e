// Command-line front end: parse presentation files, enumerate periodic
// representations, compute Alexander-Lin polynomials with the structural
// check table, and run torsion-growth experiments.
//
// Exit codes: 0 success, 1 input error, 2 internal failure,
// 3 a structural check failed (red flag).

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "alexlin/alexlin.hpp"

namespace {

using namespace alexlin;

const std::map<std::string, std::string>& embedded_corpus() {
  static const std::map<std::string, std::string> files = {
      {"bs.agp",
       "# Baumslag-Solitar group <x, a | x a x^-1 = a^2>\n"
       "gens x a;\n"
       "eps x=1 a=0;\n"
       "rel x a x^-1 a^-2;\n"},
      {"trefoil.agp",
       "# Trefoil knot group <x, y | x y x = y x y>, meridian x,\n"
       "# longitude (x y)^3 x^-6\n"
       "gens x y;\n"
       "eps x=1 y=1;\n"
       "rel x y x y^-1 x^-1 y^-1;\n"
       "longitude x y x y x y x^-1 x^-1 x^-1 x^-1 x^-1 x^-1;\n"
       "meta knot;\n"
       "meta genus 1;\n"
       "meta fibered;\n"
       "meta gr 1.0;\n"},
      {"fig8.agp",
       "# Figure-eight knot group, two-bridge presentation x w = w y\n"
       "# with w = y x^-1 y^-1 x\n"
       "gens x y;\n"
       "eps x=1 y=1;\n"
       "rel x y x^-1 y^-1 x y^-1 x^-1 y x y^-1;\n"
       "meta knot;\n"
       "meta genus 1;\n"
       "meta fibered;\n"
       "meta gr 2.6180339887498949;\n"},
      {"7_3.agp",
       "# Two-bridge knot 7_3; the longitude lies in the second commutator\n"
       "# subgroup, declared as [K,K]\n"
       "gens x a;\n"
       "eps x=1 a=0;\n"
       "rel a a x a^-1 x^-1 x x a a x^-1 x^-1 x x x a^-1 x^-1 x^-1 x^-1 "
       "x x x x a a x^-1 x^-1 x^-1 x^-1 x x x a^-1 a^-1 x^-1 x^-1 x^-1 "
       "x x a x^-1 x^-1 x a^-1 a^-1 x^-1;\n"
       "longitude [K,K];\n"
       "meta knot;\n"
       "meta genus 2;\n"},
      {"7_3_rep.json",
       "{\"N\": 5, \"r\": 13, \"table\": {\"a\": [\n"
       "  [[1,5,4,3,2]], [[1,3,5,2,4]], [[1,2,3,4,5]], [[1,2,3,4,5]],\n"
       "  [[1,5,4,3,2]], [[1,5,4,3,2]], [[1,4,2,5,3]], [[1,2,3,4,5]],\n"
       "  [[1,5,4,3,2]], [], [], [], [[1,2,3,4,5]]\n"
       "]}}\n"},
      {"bs_rep.json",
       "{\"N\": 3, \"r\": 2, \"table\": {\"a\": [[[1,2,3]], [[1,3,2]]]}}\n"},
      {"hnn_vanish.agp",
       "# HNN decomposition with base B = <a, b>, amalgamated U = <a>,\n"
       "# stable letter x with x a x^-1 = b; the kernel is free of infinite\n"
       "# rank, so representations can kill the invariant\n"
       "gens x a b;\n"
       "eps x=1 a=0 b=0;\n"
       "rel x a x^-1 b^-1;\n"
       "hnn base a b;\n"
       "amalg a_0;\n"},
      {"hnn_vanish_rep.json",
       "{\"N\": 2, \"r\": 2, \"table\": {\"a\": [[], [[1,2]]], \"b\": [[[1,2]], []]}}\n"},
  };
  return files;
}

struct CommonOpts {
  std::string input;
  std::string rep_path;
  bool json_out = false;
  bool timestamp = false;
  bool allow_reducible = false;
  std::size_t threads = 1;
};

json with_meta(json j, const std::string& command, const CommonOpts& o) {
  json out;
  out["command"] = command;
  out["input"] = o.input;
  if (o.timestamp) {
    auto now = std::chrono::system_clock::now().time_since_epoch();
    out["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(now).count();
  }
  for (auto& [k, v] : j.items()) out[k] = v;
  return out;
}

AugmentedGroupSystem load_system(const std::string& path) {
  return parse_dsl(read_file(path));
}

PeriodicRep load_rep(const std::string& path, const AugmentedGroupSystem& sys) {
  json j = json::parse(read_file(path));
  return rep_from_json(j, normalize(sys).base_names());
}

int run_invariant(const CommonOpts& o, int N, int r, bool with_checks) {
  AugmentedGroupSystem sys = load_system(o.input);
  std::vector<PeriodicRep> reps;
  if (!o.rep_path.empty()) {
    reps.push_back(load_rep(o.rep_path, sys));
  } else {
    KernelPresentation kp = kernel_presentation(normalize(sys));
    auto en = enumerate_periodic(kp, N, r, {.allow_reducible = o.allow_reducible});
    if (!en.complete) std::cerr << "warning: enumeration budget exhausted; list is partial\n";
    reps = std::move(en.reps);
  }
  if (reps.empty()) {
    std::cout << (o.json_out ? with_meta(json{{"reports", json::array()}}, "invariant", o).dump(2) + "\n"
                             : "no representations found\n");
    return 0;
  }
  PipelineOptions opt;
  opt.allow_reducible = o.allow_reducible;
  opt.with_checks = with_checks;
  opt.threads = o.threads;
  bool failed = false;
  json reports = json::array();
  std::ostringstream text;
  auto base_names = normalize(sys).base_names();
  for (const auto& rep : reps) {
    InvariantReport rpt = alexander_lin(sys, rep, opt);
    if (with_checks && sys.meta.growth_rate)
      rpt.checks.push_back(fibered_spectral_check(sys, rep, rpt.D));
    failed = failed || rpt.any_failed();
    if (o.json_out) {
      json rj = report_to_json(rpt);
      rj["rep"] = rep_to_json(rep, base_names);
      reports.push_back(std::move(rj));
    } else {
      text << "representation:";
      for (std::size_t g = 0; g < rep.table.size(); ++g)
        for (int v = 0; v < rep.r; ++v)
          text << " " << base_names[g] << "_" << v << " -> " << rep.table[g][static_cast<std::size_t>(v)].str();
      text << "\n" << report_to_text(rpt) << "\n";
    }
  }
  if (o.json_out)
    std::cout << with_meta(json{{"reports", reports}}, with_checks ? "checks" : "invariant", o).dump(2) << "\n";
  else
    std::cout << text.str();
  return failed ? 3 : 0;
}

int run_enumerate(const CommonOpts& o, int N, int r, long p, bool raw, long limit) {
  AugmentedGroupSystem sys = load_system(o.input);
  auto base_names = normalize(sys).base_names();
  json out;
  std::ostringstream text;
  if (p > 0) {
    CyclicRepsResult res = cyclic_reps_mod_p(sys, p, r, o.threads);
    out["resultant"] = res.resultant_value.str();
    if (!res.note.empty()) out["note"] = res.note;
    json reps = json::array();
    for (std::size_t i = 0; i < res.reps.size(); ++i) {
      json rj = rep_to_json(res.reps[i], base_names);
      rj["exponents"] = res.exponent_vectors[i];
      reps.push_back(std::move(rj));
    }
    out["reps"] = reps;
    text << "Res(Delta, t^" << r << " - 1) = " << res.resultant_value.str() << "\n";
    if (!res.note.empty()) text << res.note << "\n";
    text << res.reps.size() << " representations\n";
    for (const auto& e : res.exponent_vectors) {
      text << "  exponents:";
      for (int v : e) text << " " << v;
      text << "\n";
    }
  } else {
    KernelPresentation kp = kernel_presentation(normalize(sys));
    EnumerateOptions eo;
    eo.allow_reducible = o.allow_reducible;
    eo.raw = raw;
    if (limit > 0) eo.budget = limit;
    auto en = enumerate_periodic(kp, N, r, eo);
    out["complete"] = en.complete;
    json reps = json::array();
    for (const auto& rep : en.reps) reps.push_back(rep_to_json(rep, base_names));
    out["reps"] = reps;
    text << en.reps.size() << " representations (complete: " << (en.complete ? "yes" : "no")
         << ")\n";
    for (const auto& rep : en.reps) {
      text << " ";
      for (std::size_t g = 0; g < rep.table.size(); ++g)
        for (int v = 0; v < rep.r; ++v)
          text << " " << base_names[g] << "_" << v << " -> " << rep.table[g][static_cast<std::size_t>(v)].str();
      text << "\n";
    }
  }
  std::cout << (o.json_out ? with_meta(out, "enumerate", o).dump(2) + "\n" : text.str());
  return 0;
}

int run_torsion(const CommonOpts& o, int n) {
  AugmentedGroupSystem sys = load_system(o.input);
  PeriodicRep rep = o.rep_path.empty()
                        ? PeriodicRep::trivial(static_cast<int>(normalize(sys).base_names().size()))
                        : load_rep(o.rep_path, sys);
  TorsionResult t = torsion_number(sys, rep, n);
  if (o.json_out) {
    json j;
    j["n"] = n;
    j["torsion"] = t.torsion.str();
    j["betti"] = t.betti;
    json factors = json::array();
    for (const auto& d : t.smith.invariant_factors)
      if (d != 1) factors.push_back(d.str());
    j["invariant_factors"] = factors;
    std::cout << with_meta(j, "torsion", o).dump(2) << "\n";
  } else {
    std::cout << "n = " << n << ": torsion = " << t.torsion.str() << ", betti = " << t.betti
              << "\n";
  }
  return 0;
}

int run_mahler(const CommonOpts& o, int n_max, const std::string& csv_path) {
  AugmentedGroupSystem sys = load_system(o.input);
  PeriodicRep rep = o.rep_path.empty()
                        ? PeriodicRep::trivial(static_cast<int>(normalize(sys).base_names().size()))
                        : load_rep(o.rep_path, sys);
  PipelineOptions popt;
  popt.allow_reducible = o.allow_reducible;
  popt.with_checks = false;
  popt.threads = o.threads;
  LaurentPoly D = alexander_lin(sys, rep, popt).D;
  GrowthExperiment g = mahler_growth_experiment(sys, rep, n_max, D, o.threads);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    out << growth_to_csv(g);
  }
  if (o.json_out) {
    std::cout << with_meta(growth_to_json(g), "mahler", o).dump(2) << "\n";
  } else {
    std::cout << "M(D) = " << g.mahler << " (bound " << g.mahler_bound << ")\n";
    for (const auto& row : g.rows)
      std::cout << "  n = " << row.n << ": b = " << row.torsion.str()
                << ", b^(1/n) = " << row.torsion_root
                << (row.betti > 0 ? " [betti " + std::to_string(row.betti) + "]" : "") << "\n";
    std::cout << "final gap |b^(1/n) - M| = " << g.final_gap << ", log-slope = " << g.slope
              << " (log M = " << std::log(g.mahler) << ")\n";
  }
  return 0;
}

int run_corpus(const std::string& show, const std::string& install_dir) {
  if (!show.empty()) {
    auto it = embedded_corpus().find(show);
    if (it == embedded_corpus().end()) throw input_error("no bundled file named '" + show + "'");
    std::cout << it->second;
    return 0;
  }
  if (!install_dir.empty()) {
    for (const auto& [name, content] : embedded_corpus()) {
      std::ofstream out(install_dir + "/" + name, std::ios::binary);
      if (!out) throw input_error("cannot write to " + install_dir);
      out << content;
    }
    std::cout << "installed " << embedded_corpus().size() << " files to " << install_dir << "\n";
    return 0;
  }
  for (const auto& [name, content] : embedded_corpus()) std::cout << name << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander-Lin polynomials of augmented group systems from periodic permutation representations"};
  app.require_subcommand(1);

  CommonOpts o;
  int N = 1, r = 1, n = 1, n_max = 10;
  long p = 0, limit = 0;
  bool raw = false;
  std::string csv_path, show, install_dir;

  auto add_common = [&](CLI::App* cmd, bool takes_rep = true) {
    cmd->add_option("input", o.input, "presentation file (.agp)")->required();
    if (takes_rep) cmd->add_option("--rep", o.rep_path, "representation JSON file");
    cmd->add_flag("--json", o.json_out, "emit a JSON report");
    cmd->add_flag("--timestamp", o.timestamp, "include a timestamp field in JSON output");
    cmd->add_flag("--allow-reducible", o.allow_reducible, "accept non-transitive representations");
    cmd->add_option("--threads", o.threads, "worker threads")->default_val(1);
  };

  auto* inv = app.add_subcommand("invariant", "compute D and the check table");
  add_common(inv);
  inv->add_option("--N", N, "degree of the symmetric group");
  inv->add_option("--r", r, "period");

  auto* chk = app.add_subcommand("checks", "compute D and report the full check table");
  add_common(chk);
  chk->add_option("--N", N, "degree of the symmetric group");
  chk->add_option("--r", r, "period");

  auto* en = app.add_subcommand("enumerate", "list periodic representations");
  add_common(en, false);
  en->add_option("--N", N, "degree of the symmetric group");
  en->add_option("--r", r, "period");
  en->add_option("--p", p, "prime for the cyclic (circulant mod p) construction");
  en->add_flag("--raw", raw, "no orbit/conjugacy deduplication");
  en->add_option("--limit", limit, "search budget in nodes");

  auto* tor = app.add_subcommand("torsion", "torsion of H1 of the induced branched-cover");
  add_common(tor);
  tor->add_option("--n", n, "cover multiplier (cover order is r*n)")->required();

  auto* mah = app.add_subcommand("mahler", "torsion growth against the Mahler measure of D");
  add_common(mah);
  mah->add_option("--n-max", n_max, "largest cover multiplier")->required();
  mah->add_option("--csv", csv_path, "write the growth table as CSV");

  auto* cor = app.add_subcommand("corpus", "bundled example inputs");
  cor->add_option("--show", show, "print a bundled file");
  cor->add_option("--install", install_dir, "write all bundled files to a directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(inv)) return run_invariant(o, N, r, true);
    if (app.got_subcommand(chk)) return run_invariant(o, N, r, true);
    if (app.got_subcommand(en)) return run_enumerate(o, N, r, p, raw, limit);
    if (app.got_subcommand(tor)) return run_torsion(o, n);
    if (app.got_subcommand(mah)) return run_mahler(o, n_max, csv_path);
    if (app.got_subcommand(cor)) return run_corpus(show, install_dir);
  } catch (const alexlin::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
