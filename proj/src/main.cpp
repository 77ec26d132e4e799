#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gapvec/properties.hpp"
#include "gapvec/report_io.hpp"
#include "gapvec/variety_io.hpp"

namespace {

using namespace gapvec;

struct Opts {
  std::string variety;
  std::string mode = "fp";
  uint64_t seed = 0;
  int trials = 3;
  int margin = 25;
  int jobs = 1;
  bool nested = false;
  std::string out;
  std::string format = "json";
};

FieldContext make_ctx(const std::string& mode) {
  return mode == "qq" ? FieldContext::rational() : FieldContext::modp_index(0);
}

long long parse_ll_or(const std::string& tok, const std::string& usage) {
  try {
    size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(usage);
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << text;
}

// One exit code per failure class; diagnostics on stderr only.
template <class F>
int run_guarded(F&& f) {
  try {
    return f();
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return exit_inconsistency;
  } catch (const GenericityFailure& e) {
    std::cerr << "genericity failure: " << e.what() << "\n";
    return exit_genericity;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const InvalidVariety& e) {
    std::cerr << "invalid variety: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

struct Computed {
  GapReport rep;
  std::vector<CheckResult> checks;  // property battery, then the class row
  std::string label;
  bool all_passed = true;
};

Computed run_pipeline(const Opts& o) {
  Parametrization X = build_from_spec(o.variety, o.seed);
  RankConfig cfg{make_ctx(o.mode), o.seed, o.margin, o.trials};
  Computed r;
  r.rep = gap_vector(X, cfg, GapOptions{o.nested, o.jobs});
  r.checks = verify_gap_properties(r.rep);
  for (const auto& ck : r.checks) r.all_passed = r.all_passed && ck.passed;
  r.label = classify(r.rep);
  CheckResult cls;
  cls.name = "classification";
  cls.passed = true;
  cls.note = r.label;
  r.checks.push_back(std::move(cls));
  return r;
}

int cmd_compute(const Opts& o) {
  Computed r = run_pipeline(o);
  write_text(o.out, o.format == "csv" ? report_to_csv(r.rep)
                                      : report_to_json_text(r.rep, r.checks));
  return exit_ok;
}

int cmd_verify(const Opts& o) {
  Computed r = run_pipeline(o);
  std::cout << check_table(r.rep,
                           {r.checks.begin(), r.checks.end() - 1},  // class row printed below
                           r.label);
  if (!o.out.empty())
    write_text(o.out, o.format == "csv" ? report_to_csv(r.rep)
                                        : report_to_json_text(r.rep, r.checks));
  return r.all_passed ? exit_ok : exit_check_failed;
}

struct SweepRange {
  int n = 0, d_lo = 0, d_hi = 0;
};

SweepRange parse_sweep_range(const std::string& range) {
  const std::string usage = "sweep range '" + range + "': expected veronese:n=N,d=A..B";
  if (range.rfind("veronese:", 0) != 0) throw ParseError(usage);
  SweepRange r;
  bool have_n = false, have_d = false;
  std::istringstream is(range.substr(9));
  std::string item;
  while (std::getline(is, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError(usage);
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (key == "n" && !have_n) {
      r.n = static_cast<int>(parse_ll_or(val, usage));
      have_n = true;
    } else if (key == "d" && !have_d) {
      const auto dots = val.find("..");
      if (dots == std::string::npos) {
        r.d_lo = r.d_hi = static_cast<int>(parse_ll_or(val, usage));
      } else {
        r.d_lo = static_cast<int>(parse_ll_or(val.substr(0, dots), usage));
        r.d_hi = static_cast<int>(parse_ll_or(val.substr(dots + 2), usage));
      }
      have_d = true;
    } else {
      throw ParseError(usage);
    }
  }
  if (!have_n || !have_d) throw ParseError(usage);
  return r;
}

int cmd_sweep(const std::string& range, const Opts& o) {
  SweepRange r = parse_sweep_range(range);
  if (r.d_hi < r.d_lo)
    throw ParseError("sweep range '" + range + "' is empty");
  std::vector<SweepRow> rows;
  int worst = exit_ok;
  for (int d = r.d_lo; d <= r.d_hi; ++d) {
    SweepRow row;
    row.n = r.n;
    row.d = d;
    int code = run_guarded([&]() -> int {
      Parametrization X = veronese(r.n, d);
      RankConfig cfg{make_ctx(o.mode), o.seed, o.margin, o.trials};
      GapReport rep = gap_vector(X, cfg, GapOptions{false, o.jobs});
      ConjectureValues conj = conjecture_values(r.n, d);
      row.m = rep.m;
      row.c = rep.c;
      row.epsilon = rep.epsilon;
      row.gap = rep.gap;
      row.conjecture_jbar = conj.jbar;
      row.conjecture_match = rep.gap == conj.gap;
      row.status = "ok";
      return exit_ok;
    });
    if (code != exit_ok) {
      row.status = code == exit_genericity      ? "genericity-failure"
                   : code == exit_inconsistency ? "internal-inconsistency"
                                                : "invalid-variety";
      if (worst == exit_ok) worst = code;
    }
    rows.push_back(std::move(row));
  }
  write_text(o.out, sweep_csv(rows));
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gapvec — exact gap vectors and cone face dimensions of parametrized "
               "real projective varieties"};
  app.require_subcommand(1);
  Opts o;
  std::string range;

  auto add_common = [&](CLI::App* cmd, bool with_variety) {
    if (with_variety)
      cmd->add_option("--variety", o.variety,
                      "family spec: veronese:n=2,d=3 | segre:a=2,b=2 | delpezzo:k=6 | "
                      "toric:file=PATH | file:PATH")
          ->required();
    cmd->add_option("--mode", o.mode, "arithmetic: fp (prime field) or qq (rationals)")
        ->check(CLI::IsMember({"fp", "qq"}));
    cmd->add_option("--seed", o.seed, "sampler seed")->envname("GAPVEC_SEED");
    cmd->add_option("--trials", o.trials, "stability budget (>= 2)");
    cmd->add_option("--margin", o.margin, "extra sample points beyond each rank cap");
    cmd->add_option("--jobs", o.jobs, "worker threads (never changes output bytes)");
    cmd->add_option("--out", o.out, "write the report here instead of stdout");
  };

  CLI::App* compute = app.add_subcommand("compute", "compute the gap vector report");
  add_common(compute, true);
  compute->add_flag("--nested", o.nested, "reuse one point chain: Γ_j = its first j points");
  compute->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* verify = app.add_subcommand("verify", "run the property battery and print a table");
  add_common(verify, true);
  verify->add_flag("--nested", o.nested, "reuse one point chain: Γ_j = its first j points");
  verify->add_option("--format", o.format, "format for --out")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* sweep =
      app.add_subcommand("sweep", "CSV over a degree range with conjecture comparison");
  sweep->add_option("range", range, "veronese:n=N,d=A..B")->required();
  add_common(sweep, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? gapvec::exit_ok : gapvec::exit_usage;
  }

  if (compute->parsed()) return run_guarded([&] { return cmd_compute(o); });
  if (verify->parsed()) return run_guarded([&] { return cmd_verify(o); });
  return run_guarded([&] { return cmd_sweep(range, o); });
}
