#include "sketchlab/cli.hpp"

#include "sketchlab/report.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace sketchlab::cli {

std::uint64_t default_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("SKETCHLAB_SEED")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return value;
  }
  return fallback;
}

int cmd_verify(const std::string& suite, const verify::VerifyOptions& options, std::ostream& out) {
  auto results = verify::run_suite(suite, options);
  bool all_pass = true;
  for (const auto& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail << " ("
        << std::fixed << std::setprecision(1) << r.seconds << " s)\n"
        << std::defaultfloat;
    all_pass = all_pass && r.pass;
  }
  out << (all_pass ? "all checks passed" : "some checks FAILED") << " (" << results.size()
      << " checks)\n";
  return all_pass ? 0 : 1;
}

int cmd_figure(const FigureOptions& options, std::ostream& log) {
  require(options.id == 1 || options.id == 2, ErrorCode::UsageError, "figure id must be 1 or 2");
  FigureConfig config;
  config.fig = options.id == 1 ? FigureId::Fig1 : FigureId::Fig2;
  config.scale = options.scale;
  config.seed = options.seed;
  config.threads = options.threads;
  config.trials_override = options.trials;
  auto rows = universality_report(config);

  const std::string label = std::to_string(options.id);
  std::ostringstream body;
  if (options.format == "csv") {
    write_csv(body, rows, label);
  } else if (options.format == "json") {
    write_json(body, rows, label);
  } else if (options.format == "svg") {
    const std::string title = "figure " + label + " (" + scale_name(options.scale) +
                              " scale, seed " + std::to_string(options.seed) + ")";
    write_svg(body, rows, title);
  } else {
    fail(ErrorCode::UsageError, "unknown format '" + options.format + "'");
  }

  if (options.out_path.empty()) {
    log << body.str();
  } else {
    std::ofstream file(options.out_path, std::ios::binary);
    if (!file) fail(ErrorCode::IoError, "cannot open '" + options.out_path + "' for writing");
    file << body.str();
    if (!file) fail(ErrorCode::IoError, "write failed for '" + options.out_path + "'");
    log << "wrote " << rows.size() << " rows to " << options.out_path << "\n";
  }

  if (options.id == 1) {
    for (const auto& c : classify_universality(rows)) {
      log << "# " << c.instance << "/" << c.embedding << ": closer to " << c.closer
          << " prediction (dev " << format_double(std::min(c.mard_gaussian, c.mard_haar))
          << ")" << (c.matches_expected ? "" : " [unexpected]") << "\n";
    }
  }
  return 0;
}

int cmd_plan(const PlanOptions& options, std::ostream& out) {
  bool did_anything = false;
  if (options.r > 0) {
    require(options.epsilon > 0.0, ErrorCode::UsageError,
            "--r needs --epsilon for the sufficient dimension");
    const auto dims = ss_dimensions(options.r, options.field, options.epsilon);
    out << "sketched least squares, rank " << options.r << " (" << field_name(options.field)
        << "):\n";
    out << "  minimal sketch dimension:    " << dims.ell_min << "\n";
    out << "  sufficient for (1+" << format_double(options.epsilon)
        << ") accuracy: " << dims.ell_sufficient << "\n";
    did_anything = true;
  }
  if (options.q > 0 && options.budget > 0) {
    const auto plan = plan_split(options.q, options.budget, options.objective_field);
    out << "two-sided split for target rank " << options.q << ", budget " << options.budget
        << ":\n";
    out << "  k=" << plan.k << " ell=" << plan.ell << " objective="
        << format_double(plan.objective) << " (continuous k/ell="
        << format_double(plan.continuous_k / plan.continuous_ell) << ")\n";
    did_anything = true;
  }
  if (options.q > 0 && options.epsilon > 0.0) {
    const bool want_gn = options.method.empty() || options.method == "gn";
    const bool want_rsvd = options.method.empty() || options.method == "rsvd";
    require(want_gn || want_rsvd, ErrorCode::UsageError, "method must be 'gn' or 'rsvd'");
    out << "matvec budgets for rank " << options.q << " at epsilon "
        << format_double(options.epsilon) << ":\n";
    if (want_gn) {
      out << "  two-sided sketch: "
          << budget_for_epsilon(options.q, options.epsilon, BudgetMethod::GeneralizedNystrom)
          << "\n";
    }
    if (want_rsvd) {
      out << "  one-sided (randomized SVD): "
          << budget_for_epsilon(options.q, options.epsilon, BudgetMethod::Rsvd) << "\n";
    }
    did_anything = true;
  }
  require(did_anything, ErrorCode::UsageError,
          "nothing to plan; pass --r with --epsilon, or --q with --budget/--epsilon");
  return 0;
}

SpectrumTail read_spectrum_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) fail(ErrorCode::IoError, "cannot read spectrum file '" + path + "'");
  std::vector<double> values;
  double v = 0.0;
  while (file >> v) values.push_back(v);
  require(!values.empty(), ErrorCode::IoError, "spectrum file '" + path + "' is empty");
  return SpectrumTail(std::move(values));
}

int cmd_bounds(const BoundsOptions& options, std::ostream& out) {
  out << "field=" << field_name(options.field);
  if (options.n > 0) out << " n=" << options.n;
  if (options.d > 0) out << " d=" << options.d;
  if (options.r > 0) out << " r=" << options.r;
  if (options.ell > 0) out << " ell=" << options.ell;
  if (options.k > 0) out << " k=" << options.k;
  if (options.q >= 0) out << " q=" << options.q;
  out << "\n";

  auto report = [&](const char* name, const std::function<double()>& fn) {
    out << "  " << name << ": ";
    try {
      out << format_double(fn()) << "\n";
    } catch (const Error& e) {
      out << "n/a (" << e.what() << ")\n";
    }
  };

  if (options.r > 0 && options.ell > 0) {
    report("least-squares ratio, gaussian",
           [&] { return ss_ratio_gaussian(options.field, options.r, options.ell); });
    if (options.n > 0) {
      report("least-squares ratio, orthonormal (= minimax)",
             [&] { return ss_ratio_haar(options.field, options.n, options.r, options.ell); });
    }
    if (options.q >= 0) {
      report("low-rank minimax factor", [&] {
        return rsvd_lower_factor(options.field, options.r, options.ell, options.q);
      });
    }
    if (options.k > 0 && options.d > 0 && options.q >= 0) {
      report("two-sided minimax factor", [&] {
        BoundQuery query;
        query.field = options.field;
        query.d = options.d;
        query.n = options.n;
        query.r = options.r;
        query.ell = options.ell;
        query.k = options.k;
        query.q = options.q;
        return gn_lower_factor(query);
      });
    }
  }

  if (!options.spectrum_path.empty() && options.ell > 0) {
    const SpectrumTail tail = read_spectrum_file(options.spectrum_path);
    const long rank = options.r > 0 ? options.r : tail.rank();
    report("low-rank bound, classical",
           [&] { return rsvd_bound_hmt(tail, options.field, options.ell); });
    report("low-rank bound, sharp",
           [&] { return rsvd_bound_sharp(tail, options.field, rank, options.ell); });
    if (options.k > 0 && options.d > 0) {
      report("two-sided bound (gaussian left sketch)", [&] {
        BoundQuery query;
        query.field = options.field;
        query.d = options.d;
        query.n = options.n;
        query.r = rank;
        query.ell = options.ell;
        query.k = options.k;
        query.gamma_kind = GammaKind::Gaussian;
        return gn_bound(query, tail);
      });
    }
  }
  return 0;
}

}  // namespace sketchlab::cli
