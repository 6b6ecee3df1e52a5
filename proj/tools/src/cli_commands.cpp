// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include "majorana_rp_cli/cli_commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "majorana_rp/config.hpp"
#include "majorana_rp/gibbs_rp.hpp"
#include "majorana_rp/matrix_rep.hpp"
#include "majorana_rp/random_model.hpp"
#include "majorana_rp/report_io.hpp"
#include "majorana_rp/trotter.hpp"

namespace majorana_rp::cli {

namespace {

namespace fs = std::filesystem;

constexpr double kCounterexampleTol = 1e-12;
constexpr double kBoundSlackTol = 1e-10;
constexpr double kExactSplitTol = 1e-13;
constexpr double kRatioLow = 1.7;
constexpr double kRatioHigh = 2.3;

struct Resolved {
  ModelConfig cfg;
  std::vector<double> betas;
  double tol = kPsdTolerance;
  std::string format = "json";
  std::optional<fs::path> out;
};

std::optional<Resolved> resolve(const Options& opts, std::ostream& err) {
  if (!opts.config) {
    err << "error: --config is required\n";
    return std::nullopt;
  }
  try {
    Resolved r{load_config(*opts.config, opts.seed), {}, kPsdTolerance, "json", std::nullopt};
    const auto& run = r.cfg.run;
    r.betas = !opts.betas.empty()  ? opts.betas
              : !run.betas.empty() ? run.betas
                                   : std::vector<double>{r.cfg.spec.beta};
    for (double b : r.betas) {
      if (!(b > 0.0) || !std::isfinite(b)) {
        err << "error: beta must be positive and finite, got " << format_double(b) << "\n";
        return std::nullopt;
      }
    }
    r.tol = opts.tol.value_or(run.tol.value_or(kPsdTolerance));
    r.format = opts.format.value_or(run.format.value_or("json"));
    if (opts.out) {
      r.out = fs::path(*opts.out);
    } else if (run.out) {
      r.out = fs::path(*run.out);
    }
    return r;
  } catch (const ConfigError& e) {
    for (const auto& v : e.violations()) {
      err << "error: " << v << "\n";
    }
    return std::nullopt;
  }
}

std::optional<double> single_beta(const Resolved& r, const char* command, std::ostream& err) {
  if (r.betas.size() != 1) {
    err << "error: " << command << " takes exactly one beta value\n";
    return std::nullopt;
  }
  return r.betas.front();
}

// Writes to <out>/<name> when an output directory is set, else to `out`.
bool emit(const Resolved& r, const std::string& name, const std::string& text, std::ostream& out,
          std::ostream& err) {
  if (!r.out) {
    out << text;
    return true;
  }
  std::error_code ec;
  fs::create_directories(*r.out, ec);
  const fs::path path = *r.out / name;
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    err << "error: cannot write " << path.string() << "\n";
    return false;
  }
  return true;
}

std::string format_complex(Complex z) {
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return format_double(re) + (std::signbit(im) ? " - " : " + ") + format_double(std::abs(im)) +
         "i";
}

}  // namespace

int cmd_certify(const Options& opts, std::ostream& out, std::ostream& err) {
  auto r = resolve(opts, err);
  if (!r) {
    return kExitError;
  }
  if (opts.dump_matrices && !r->out) {
    err << "error: --dump-matrices needs --out\n";
    return kExitError;
  }
  std::vector<RPReport> reports;
  for (double beta : r->betas) {
    auto spec = r->cfg.spec;
    spec.beta = beta;
    try {
      reports.push_back(certify_rp(spec, r->tol));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitError;
    }
  }
  bool indefinite = false;
  for (const auto& rep : reports) {
    indefinite = indefinite || rep.verdict == Verdict::indefinite;
  }
  if (r->out) {
    if (!emit(*r, "rp_report.json", rp_reports_to_json(reports), out, err)) {
      return kExitError;
    }
    if (r->format == "csv" &&
        !emit(*r, "gram_spectrum.csv", gram_spectrum_csv(reports), out, err)) {
      return kExitError;
    }
    if (opts.dump_matrices) {
      for (double beta : r->betas) {
        auto spec = r->cfg.spec;
        spec.beta = beta;
        const auto h = assemble(spec);
        std::ostringstream hs;
        std::ostringstream ws;
        write_csv(hs, to_matrix(h));
        write_csv(ws, gibbs_weight(h));
        const std::string tag = "_beta" + format_double(beta) + ".csv";
        if (!emit(*r, "hamiltonian" + tag, hs.str(), out, err) ||
            !emit(*r, "gibbs_weight" + tag, ws.str(), out, err)) {
          return kExitError;
        }
      }
    }
    for (const auto& rep : reports) {
      out << "beta=" << format_double(rep.beta) << " gram_dim=" << rep.gram_dim
          << " min_eigenvalue=" << format_double(rep.min_eigenvalue)
          << " verdict=" << to_string(rep.verdict)
          << " classification=" << (rep.couplings_certified ? "certified" : "violated") << "\n";
    }
  } else {
    out << (r->format == "csv" ? gram_spectrum_csv(reports) : rp_reports_to_json(reports));
  }
  return indefinite ? kExitIndefinite : kExitOk;
}

int cmd_counterexample(const Options& opts, std::ostream& out, std::ostream& err) {
  const std::vector<double> betas = opts.betas.empty() ? std::vector<double>{1.0} : opts.betas;
  const auto g = ReflectionGeometry::chain(1, 1);
  const auto c1 = CliffordElement::generator(g.generators(), 1);
  // H = -i c1 theta(c1), the single sigma = 1 cross term with J = -1.
  const auto h = mul(c1, reflect(c1, g)) * Complex{0.0, -1.0};
  bool ok = true;
  for (double beta : betas) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
      err << "error: beta must be positive and finite, got " << format_double(beta) << "\n";
      return kExitError;
    }
    const Complex value = rp_functional(c1, c1, h * beta, g);
    const Complex target{0.0, -2.0 * std::sinh(beta)};
    const double deviation = std::abs(value - target);
    ok = ok && deviation <= kCounterexampleTol;
    out << "beta " << format_double(beta) << "\n"
        << "value " << format_complex(value) << "\n"
        << "target " << format_complex(target) << "\n"
        << "deviation " << format_double(deviation) << "\n";
  }
  return ok ? kExitOk : kExitIndefinite;
}

int cmd_trotter(const Options& opts, std::ostream& out, std::ostream& err) {
  auto r = resolve(opts, err);
  if (!r) {
    return kExitError;
  }
  const auto beta = single_beta(*r, "trotter", err);
  if (!beta) {
    return kExitError;
  }
  std::vector<int> schedule = !opts.k_schedule.empty() ? opts.k_schedule : r->cfg.run.k_schedule;
  if (schedule.empty()) {
    for (int k = 2; k <= 1024; k *= 2) {
      schedule.push_back(k);
    }
  }
  for (int k : schedule) {
    if (k < 1) {
      err << "error: k values must be >= 1\n";
      return kExitError;
    }
  }
  auto spec = r->cfg.spec;
  spec.beta = *beta;
  std::vector<ConvergenceRow> rows;
  try {
    rows = convergence_table(spec, schedule);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  std::string text;
  if (r->format == "csv") {
    text = trotter_csv(rows);
  } else {
    text = trotter_to_json(*beta, rows);
  }
  if (!emit(*r, r->format == "csv" ? "trotter.csv" : "trotter.json", text, out, err)) {
    return kExitError;
  }
  bool exact = true;
  for (const auto& row : rows) {
    exact = exact && row.error <= kExactSplitTol;
  }
  if (exact) {
    err << "note: splitting is exact to " << format_double(kExactSplitTol)
        << " (H_0 = 0); ratio check skipped\n";
    return kExitOk;
  }
  const double ratio = rows.back().ratio;
  return ratio >= kRatioLow && ratio <= kRatioHigh ? kExitOk : kExitIndefinite;
}

int cmd_bounds(const Options& opts, std::ostream& out, std::ostream& err) {
  auto r = resolve(opts, err);
  if (!r) {
    return kExitError;
  }
  const auto beta = single_beta(*r, "bounds", err);
  if (!beta) {
    return kExitError;
  }
  auto spec = r->cfg.spec;
  spec.beta = *beta;
  const auto& g = spec.geometry;
  std::vector<std::pair<CliffordElement, CliffordElement>> pairs;
  pairs.emplace_back(CliffordElement::identity(g.generators()),
                     CliffordElement::identity(g.generators()));
  if (r->cfg.run.samples > 0) {
    Rng rng(*r->cfg.run.seed);
    for (int i = 0; i < r->cfg.run.samples; ++i) {
      auto a = random_even_element(g, Side::minus, 3, 1.0, rng);
      auto b = random_even_element(g, Side::minus, 3, 1.0, rng);
      pairs.emplace_back(std::move(a), std::move(b));
      auto c = random_even_element(g, Side::plus, 3, 1.0, rng);
      auto d = random_even_element(g, Side::plus, 3, 1.0, rng);
      pairs.emplace_back(std::move(c), std::move(d));
    }
  }
  BoundsReport report;
  try {
    report = check_bounds(spec, pairs);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  const bool csv = r->format == "csv";
  if (!emit(*r, csv ? "bounds.csv" : "bounds.json",
            csv ? bounds_csv(report) : bounds_report_to_json(report), out, err)) {
    return kExitError;
  }
  return report.min_slack >= -kBoundSlackTol ? kExitOk : kExitIndefinite;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reflection positivity checks for Majorana lattice models", "majorana_rp"};
  app.require_subcommand(1);
  Options opts;

  auto add_common = [&opts](CLI::App* sub, bool with_config) {
    if (with_config) {
      sub->add_option("--config", opts.config, "Model config (JSON)");
    }
    sub->add_option("--beta", opts.betas, "Inverse temperatures, comma separated")
        ->delimiter(',');
    sub->add_option("--tol", opts.tol, "PSD tolerance (relative)");
    sub->add_option("--seed", opts.seed, "Random seed (overrides run.seed)");
    sub->add_option("--out", opts.out, "Output directory");
    sub->add_option("--format", opts.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto* certify = app.add_subcommand("certify", "Gram-matrix RP certification");
  add_common(certify, true);
  certify->add_flag("--dump-matrices", opts.dump_matrices,
                    "Also write beta*H and exp(-beta*H) as CSV matrices (needs --out)");
  auto* counter = app.add_subcommand("counterexample", "Odd-element counterexample value");
  add_common(counter, false);
  auto* trotter = app.add_subcommand("trotter", "Lie-product convergence table");
  add_common(trotter, true);
  trotter->add_option("--k", opts.k_schedule, "k schedule, comma separated")->delimiter(',');
  auto* bounds = app.add_subcommand("bounds", "Reflection bounds for asymmetric halves");
  add_common(bounds, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }
  if (certify->parsed()) {
    return cmd_certify(opts, out, err);
  }
  if (counter->parsed()) {
    return cmd_counterexample(opts, out, err);
  }
  if (trotter->parsed()) {
    return cmd_trotter(opts, out, err);
  }
  return cmd_bounds(opts, out, err);
}

}  // namespace majorana_rp::cli
