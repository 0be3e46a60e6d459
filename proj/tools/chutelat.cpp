// chutelat: command-line front end for the chute move poset engine.
//
// Exit status: 0 success, 1 failed check or theorem violation, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chutelat/io.hpp"
#include "chutelat/schubert.hpp"
#include "chutelat/verify.hpp"

using namespace chutelat;

namespace {

constexpr int kUsage = 2;
constexpr int kFail = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Permutation perm_arg(const std::string& s) {
  try {
    return Permutation::parse(s);
  } catch (const std::exception& e) {
    throw UsageError("bad permutation '" + s + "': " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

PipeDream read_dream(const std::string& path) {
  try {
    return dream_from_json(read_json_file(path));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

int cmd_enumerate(const Permutation& w, bool count, bool as_json, bool seed_check) {
  if (seed_check) {
    const auto seed = seed_dream(w);
    std::cout << render_ascii(seed);
    std::cout << "seed wiring " << wiring(seed).to_string() << (wiring(seed) == w ? " ok" : " MISMATCH") << '\n';
    return wiring(seed) == w ? 0 : kFail;
  }
  const auto ps = ChutePoset::enumerate(w);
  if (as_json && !count) {
    json out = json::array();
    for (const auto& p : ps.elements()) out.push_back(to_json(p));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << ps.size() << '\n';
  }
  return 0;
}

int cmd_hasse(const Permutation& w, const std::string& file, bool tooltips) {
  const auto ps = ChutePoset::enumerate(w);
  const auto dot = to_dot(ps, tooltips);
  if (file == "-") {
    std::cout << dot;
    return 0;
  }
  std::ofstream out(file);
  if (!out) throw UsageError("cannot write " + file);
  out << dot;
  return 0;
}

int cmd_verify(const Permutation& w, const std::string& checks, std::int64_t budget_ms, bool timing) {
  std::vector<std::string> names;
  if (checks.empty()) {
    names = all_check_names();
  } else {
    std::stringstream ss(checks);
    for (std::string item; std::getline(ss, item, ',');)
      if (!item.empty()) names.push_back(item);
  }
  for (const auto& n : names) {
    const auto& known = all_check_names();
    if (std::find(known.begin(), known.end(), n) == known.end()) throw UsageError("unknown check '" + n + "'");
  }
  const auto report = verify(w, names, budget_ms);
  std::cout << to_json(report, timing).dump(2) << '\n';
  return report.any_failed() ? kFail : 0;
}

int cmd_schubert(const Permutation& w, bool oracle_check) {
  const auto poly = schubert_from_pipedreams(w);
  std::cout << poly.to_string() << '\n';
  if (!oracle_check) return 0;
  const auto oracle = schubert_oracle(w);
  if (oracle == poly) {
    std::cout << "oracle: equal\n";
    return 0;
  }
  std::cout << "oracle: differs\n" << oracle.to_string() << '\n';
  return kFail;
}

int cmd_path(const Permutation& w, const std::string& from_file, const std::string& to_file) {
  const auto from = read_dream(from_file), to = read_dream(to_file);
  for (const auto* p : {&from, &to}) {
    if (p->n() != w.n()) throw UsageError("dream size does not match the permutation");
    const auto t = trace(*p);
    if (t.wiring != w || !is_reduced(t)) throw UsageError("dream is not a reduced pipe dream for " + w.to_string());
  }
  const auto ta = theta(from), tb = theta(to);
  if (!delta_multiset(ta, tb, w)) {
    std::cout << "incomparable\n";
    return 0;
  }
  const auto ps = ChutePoset::enumerate(w);
  const auto steps = chute_path(ta, tb, w);
  json out = json::array();
  bool ok = true;
  for (const auto& s : steps) {
    const auto move = realize_step(ps, s);
    ok = ok && move && s.conditions_hold();
    json step{{"start", {s.start.i, s.start.j}}, {"Y", s.Y}, {"boxes", to_json(s.boxes)}, {"p0", s.p0}, {"q0", s.q0},
              {"move", move ? to_json(*move) : json(nullptr)}, {"conditions", s.conditions_hold()}};
    if (auto k = ps.theta_inverse(s.after)) step["dream"] = to_json(ps.element(*k));
    out.push_back(std::move(step));
  }
  std::cout << out.dump(2) << '\n';
  return ok ? 0 : kFail;
}

int cmd_render(const std::string& file, bool as_json) {
  const auto p = read_dream(file);
  if (as_json) std::cout << to_json(p).dump() << '\n';
  else std::cout << render_ascii(p);
  return 0;
}

int cmd_info(const Permutation& w) {
  json out{{"w", w.to_string()}, {"n", w.n()}, {"inversions", w.length()}, {"code", w.lehmer_code()}};
  // counting through the oracle avoids building the order for large n
  if (w.n() <= 9) out["size"] = schubert_oracle(w).evaluate_at_ones();
  else out["size"] = nullptr;
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chute move posets of reduced pipe dreams"};
  app.require_subcommand(1);
  std::string perm, file, from, to, checks;
  bool count = false, as_json = false, seed_check = false, ascii = false, oracle_check = false, no_tooltips = false,
       no_timing = false;
  std::int64_t budget_ms = default_budget_ms();

  auto* en = app.add_subcommand("enumerate", "list PD(w)");
  en->add_option("w", perm, "permutation, e.g. 2143 or 1,10,2,...")->required();
  auto* count_flag = en->add_flag("--count", count, "print the number of elements");
  en->add_flag("--json", as_json, "print every element as JSON")->excludes(count_flag);
  en->add_flag("--seed-check", seed_check)->group("");

  auto* ha = app.add_subcommand("hasse", "Hasse diagram of PD(w)");
  ha->add_option("w", perm)->required();
  ha->add_option("--dot", file, "output file, - for stdout")->required();
  ha->add_flag("--no-tooltips", no_tooltips, "omit per-node JSON tooltips");

  auto* ve = app.add_subcommand("verify", "run theorem checks on PD(w)");
  ve->add_option("w", perm)->required();
  ve->add_option("--checks", checks, "comma-separated subset of isomorphism,lattice,sd,polygonal,transpose,triforce");
  ve->add_option("--budget-ms", budget_ms, "time budget for all checks on w; 0 disables");
  ve->add_flag("--no-timing", no_timing, "report ms as 0 for byte-stable output");

  auto* sc = app.add_subcommand("schubert", "Schubert polynomial from PD(w)");
  sc->add_option("w", perm)->required();
  sc->add_flag("--oracle-check", oracle_check, "compare with divided differences");

  auto* pa = app.add_subcommand("path", "chute path between two dreams");
  pa->add_option("w", perm)->required();
  pa->add_option("--from", from)->required()->check(CLI::ExistingFile);
  pa->add_option("--to", to)->required()->check(CLI::ExistingFile);

  auto* re = app.add_subcommand("render", "draw a pipe dream");
  re->add_option("dream", file, "pipe dream JSON file")->required()->check(CLI::ExistingFile);
  re->add_flag("--ascii", ascii, "ASCII picture (default)");
  re->add_flag("--json", as_json, "normalized JSON instead of a picture");

  auto* in = app.add_subcommand("info", "basic statistics of w");
  in->add_option("w", perm)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*en) return cmd_enumerate(perm_arg(perm), count, as_json, seed_check);
    if (*ha) return cmd_hasse(perm_arg(perm), file, !no_tooltips);
    if (*ve) return cmd_verify(perm_arg(perm), checks, budget_ms, !no_timing);
    if (*sc) return cmd_schubert(perm_arg(perm), oracle_check);
    if (*pa) return cmd_path(perm_arg(perm), from, to);
    if (*re) return cmd_render(file, as_json && !ascii);
    if (*in) return cmd_info(perm_arg(perm));
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
