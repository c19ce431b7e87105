#include "sketchlab/verify.hpp"

#include "sketchlab/algorithms.hpp"
#include "sketchlab/experiments.hpp"
#include "sketchlab/report.hpp"
#include "sketchlab/theory.hpp"

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

namespace sketchlab::verify {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
  CheckResult result;
  result.name = name;
  const auto start = Clock::now();
  try {
    auto [pass, detail] = fn();
    result.pass = pass;
    result.detail = std::move(detail);
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

long trials_or(const VerifyOptions& opt, long stock) {
  return opt.trials_override > 0 ? opt.trials_override : stock;
}

std::string fmt(double v) { return format_double(v); }

/// Single-cell sketched least-squares sweep; returns the summary row.
TrialSummary ss_cell(const LeastSquaresInstance<double>& inst, EmbeddingKind kind, Field field,
                     Index ell, long trials, const VerifyOptions& opt, const char* tag) {
  ExperimentGrid grid;
  grid.task = Task::SketchSolve;
  grid.ell_grid = {ell};
  grid.embeddings = {kind};
  grid.field = field;
  grid.trials = trials;
  grid.master_seed = opt.seed ^ fnv1a(tag);
  grid.threads = opt.threads;
  auto rows = run_grid(grid, inst);
  require(!rows.empty() && !rows.front().failed, ErrorCode::InvalidSpec,
          rows.empty() ? "empty grid" : rows.front().error);
  return rows.front();
}

std::pair<bool, std::string> ratio_gate(const TrialSummary& row, double target,
                                        double rel_window) {
  const double mean_ratio = row.mean + 1.0;
  const double tol = std::max(3.0 * row.std_err, rel_window * target);
  const bool pass = std::abs(mean_ratio - target) <= tol;
  std::ostringstream os;
  os << "mean=" << fmt(mean_ratio) << " target=" << fmt(target) << " tol=" << fmt(tol)
     << " se=" << fmt(row.std_err);
  return {pass, os.str()};
}

LeastSquaresInstance<double> random_lsq(Index n, Index d, Index p, RngStream rng) {
  RandomStream rs(rng);
  LeastSquaresInstance<double> inst;
  inst.a = rs.gaussian<double>(n, d);
  inst.b = rs.gaussian<double>(n, p);
  inst.r = numerical_rank<double>(inst.a);
  MatR xstar = pseudoinverse<double>(inst.a) * inst.b;
  inst.optimal_residual_sq = frob_sq<double>((inst.b - inst.a * xstar).eval());
  inst.name = "random";
  return inst;
}

double min_eigenvalue(const MatR& h) {
  Eigen::SelfAdjointEigenSolver<MatR> eig(((h + h.transpose()) / 2.0).eval(),
                                          Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

double condition_number(const MatR& m) {
  Eigen::JacobiSVD<MatR> svd(m);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  return smallest > 0.0 ? sv(0) / smallest : std::numeric_limits<double>::infinity();
}

// The fixed absolute slack gates (1e-9) are only float-decidable when the
// random draws stay reasonably conditioned; resampling is deterministic
// under the stream.
MatR conditioned_gaussian(RandomStream& rs, Index rows, Index cols, double cap) {
  while (true) {
    MatR g = rs.gaussian<double>(rows, cols);
    if (condition_number(g) <= cap) return g;
  }
}

// Exactly rank-r in floating point: r Gaussian base columns plus
// power-of-two scaled copies (scaling by 2^e commutes with rounding, so the
// duplicates survive sketching exactly and rank truncation is decisive).
MatR exact_rank_matrix(RandomStream& rs, Index n, Index d, Index r) {
  MatR base = rs.gaussian<double>(n, r);
  MatR a(n, d);
  a.leftCols(r) = base;
  for (Index j = r; j < d; ++j) {
    const Index src = static_cast<Index>(rs.index(static_cast<std::uint64_t>(r)));
    const double scale = std::ldexp(rs.rademacher(), static_cast<int>(rs.index(3)) - 1);
    a.col(j) = base.col(src) * scale;
  }
  return a;
}

}  // namespace

CheckResult check_ss_gaussian_real(const VerifyOptions& opt) {
  return timed("sketch-solve gaussian real", [&]() {
    auto inst = make_lsq(LsqKind::Coherent, 200, 5, 1);
    auto row = ss_cell(inst, EmbeddingKind::Gaussian, Field::Real, 20,
                       trials_or(opt, 5000), opt, "ss-g-r");
    return ratio_gate(row, ss_ratio_gaussian(Field::Real, 5, 20), 0.02);
  });
}

CheckResult check_ss_haar_real(const VerifyOptions& opt) {
  return timed("sketch-solve haar real", [&]() {
    auto inst = make_lsq(LsqKind::Coherent, 200, 5, 1);
    auto row = ss_cell(inst, EmbeddingKind::HaarOrthonormal, Field::Real, 20,
                       trials_or(opt, 5000), opt, "ss-h-r");
    return ratio_gate(row, ss_ratio_haar(Field::Real, 200, 5, 20), 0.02);
  });
}

CheckResult check_ss_complex(const VerifyOptions& opt) {
  return timed("sketch-solve complex", [&]() {
    auto inst = make_lsq(LsqKind::Coherent, 200, 5, 1);
    auto g_row = ss_cell(inst, EmbeddingKind::Gaussian, Field::Complex, 20,
                         trials_or(opt, 5000), opt, "ss-g-c");
    auto h_row = ss_cell(inst, EmbeddingKind::HaarOrthonormal, Field::Complex, 20,
                         trials_or(opt, 5000), opt, "ss-h-c");
    auto [gp, gd] = ratio_gate(g_row, ss_ratio_gaussian(Field::Complex, 5, 20), 0.02);
    auto [hp, hd] = ratio_gate(h_row, ss_ratio_haar(Field::Complex, 200, 5, 20), 0.02);
    return std::make_pair(gp && hp, "gaussian{" + gd + "} haar{" + hd + "}");
  });
}

CheckResult check_unbiasedness(const VerifyOptions& opt) {
  return timed("sketched solution unbiasedness", [&]() {
    auto inst = random_lsq(50, 3, 2, RngStream{opt.seed ^ fnv1a("unbias-inst"), 0});
    const long trials = trials_or(opt, 5000);
    double worst = 0.0;
    for (EmbeddingKind kind : {EmbeddingKind::Gaussian, EmbeddingKind::HaarOrthonormal}) {
      EmbeddingSpec spec{kind, 50, 10, Field::Real, 0, -1};
      auto report = estimate_unbiasedness(inst, spec, trials,
                                          opt.seed ^ fnv1a(embedding_name(kind)));
      worst = std::max(worst, report.max_abs_z);
    }
    std::ostringstream os;
    os << "max|z|=" << fmt(worst) << " over both embeddings, " << trials << " trials";
    return std::make_pair(worst < 4.0, os.str());
  });
}

CheckResult check_wishart_inverse(const VerifyOptions& opt) {
  return timed("inverse wishart mean", [&]() {
    const long trials = trials_or(opt, 10000);
    auto real = wishart_inverse_check(Field::Real, 3, 12, trials, opt.seed ^ fnv1a("wis-r"));
    auto cplx = wishart_inverse_check(Field::Complex, 3, 12, trials, opt.seed ^ fnv1a("wis-c"));
    std::ostringstream os;
    os << "real target=" << fmt(real.target) << " max|z|=" << fmt(real.max_abs_z)
       << "; complex target=" << fmt(cplx.target) << " max|z|=" << fmt(cplx.max_abs_z);
    return std::make_pair(real.max_abs_z <= 3.0 && cplx.max_abs_z <= 3.0, os.str());
  });
}

CheckResult check_beta_inverse(const VerifyOptions& opt) {
  return timed("inverse beta mean", [&]() {
    const long trials = trials_or(opt, 10000);
    auto direct = beta_inverse_check(Field::Real, 3, 10, 50, trials, opt.seed ^ fnv1a("beta"));
    auto block =
        haar_block_inverse_check(Field::Real, 3, 10, 50, trials, opt.seed ^ fnv1a("haar-block"));
    std::ostringstream os;
    os << "target=" << fmt(direct.target) << " beta max|z|=" << fmt(direct.max_abs_z)
       << " haar-block max|z|=" << fmt(block.max_abs_z);
    return std::make_pair(direct.max_abs_z <= 3.0 && block.max_abs_z <= 3.0, os.str());
  });
}

CheckResult check_two_eig_limit(const VerifyOptions& opt) {
  return timed("two-eigenvalue hard instance", [&]() {
    ExperimentGrid grid;
    grid.task = Task::Nystrom;
    grid.ell_grid = {20};
    grid.embeddings = {EmbeddingKind::Gaussian};
    grid.trials = trials_or(opt, 5000);
    grid.master_seed = opt.seed ^ fnv1a("two-eig");
    grid.threads = opt.threads;
    auto rows = run_grid(grid, make_two_eig(1e6, 1.0, 5, 50, 60));
    const auto& row = rows.front();
    require(!row.failed, ErrorCode::InvalidSpec, row.error);
    const double target = 1.0 * (50.0 - 20.0) * (1.0 + 5.0 / (20.0 - 5.0 - 1.0));
    const double tol = std::max(3.0 * row.std_err, 0.02 * target);
    std::ostringstream os;
    os << "mean=" << fmt(row.mean) << " target=" << fmt(target) << " tol=" << fmt(tol);
    return std::make_pair(std::abs(row.mean - target) <= tol, os.str());
  });
}

CheckResult check_residual_identity(const VerifyOptions& opt) {
  return timed("residual decomposition identity", [&]() {
    const std::uint64_t seed = opt.seed ^ fnv1a("resid-id");
    long failures = 0;
    double worst = 0.0;
    for (long i = 0; i < 500; ++i) {
      RandomStream rs(RngStream{seed, static_cast<std::uint64_t>(i)});
      const Index n = 8 + static_cast<Index>(rs.index(33));
      const Index d = 1 + static_cast<Index>(rs.index(8));
      const Index p = 1 + static_cast<Index>(rs.index(3));
      const Index r =
          1 + static_cast<Index>(rs.index(static_cast<std::uint64_t>(std::min(d, n - 2))));
      const Index ell =
          r + 2 + static_cast<Index>(rs.index(static_cast<std::uint64_t>(n - r - 1)));
      MatR a = exact_rank_matrix(rs, n, d, r);
      MatR b = rs.gaussian<double>(n, p);
      MatR omega = rs.gaussian<double>(n, ell);
      const auto split = residual_decomposition<double>(a, b, omega);
      const auto solved = sketch_and_solve<double>(a, b, omega);
      const double sum = split.cross_term_sq + split.optimal_sq;
      const double rel = std::abs(sum - solved.residual_sq) / std::max(solved.residual_sq, 1e-300);
      worst = std::max(worst, rel);
      if (rel > 1e-8) ++failures;
    }
    std::ostringstream os;
    os << failures << " failures over 500 instances, worst rel err " << fmt(worst);
    return std::make_pair(failures == 0, os.str());
  });
}

CheckResult check_weighting_hurts(const VerifyOptions& opt) {
  return timed("weighting hurts inequality", [&]() {
    const std::uint64_t seed = opt.seed ^ fnv1a("weighting");
    long failures = 0;
    double worst_slack = 0.0;
    for (long i = 0; i < 1000; ++i) {
      RandomStream rs(RngStream{seed, static_cast<std::uint64_t>(i)});
      const Index ell = 2 + static_cast<Index>(rs.index(11));
      const Index r = 1 + static_cast<Index>(rs.index(static_cast<std::uint64_t>(ell)));
      MatR m = conditioned_gaussian(rs, ell, r, 20.0);
      MatR w = conditioned_gaussian(rs, ell, ell, 20.0);
      const double lhs = frob_sq<double>(pseudoinverse<double>(m));
      MatR weighted = pseudoinverse<double>((w.transpose() * m).eval()) * w.transpose();
      const double rhs = frob_sq<double>(weighted);
      const double slack = rhs - lhs;
      worst_slack = std::min(worst_slack, slack);
      if (slack < -1e-9) ++failures;
    }
    std::ostringstream os;
    os << failures << " failures over 1000 draws, worst slack " << fmt(worst_slack);
    return std::make_pair(failures == 0, os.str());
  });
}

CheckResult check_gram_correspondence(const VerifyOptions& opt) {
  return timed("gram correspondence", [&]() {
    const std::uint64_t seed = opt.seed ^ fnv1a("gram");
    long failures = 0;
    double worst_entry = 0.0, worst_trace = 0.0;
    for (long i = 0; i < 200; ++i) {
      RandomStream rs(RngStream{seed, static_cast<std::uint64_t>(i)});
      const Index d = 3 + static_cast<Index>(rs.index(8));
      const Index n = 3 + static_cast<Index>(rs.index(10));
      const Index ell = 1 + static_cast<Index>(rs.index(static_cast<std::uint64_t>(n)));
      MatR a = rs.gaussian<double>(d, n);
      MatR omega = rs.gaussian<double>(n, ell);
      while (condition_number((a * omega).eval()) > 1e3) omega = rs.gaussian<double>(n, ell);
      MatR h = a.transpose() * a;
      h = ((h + h.transpose()) / 2.0).eval();
      auto rsvd = randomized_svd<double>(a, omega);
      auto ny = nystrom<double>(h, omega);
      MatR a_hat = rsvd.left * rsvd.right;
      MatR h_hat = nystrom_matrix(ny);
      const double entry_err = (h_hat - a_hat.transpose() * a_hat).cwiseAbs().maxCoeff();
      // Both traces live at the tr(H) scale, so that is the scale the
      // float identity can be resolved at.
      const double trace_tol = 1e-8 * h.trace();
      const double trace_gap = std::abs(ny.err_sq - rsvd.err_sq);
      worst_entry = std::max(worst_entry, entry_err);
      worst_trace = std::max(worst_trace, trace_gap / std::max(trace_tol, 1e-300));
      if (entry_err > 1e-8 || trace_gap > trace_tol) ++failures;
    }
    std::ostringstream os;
    os << failures << " failures over 200 draws; worst entry " << fmt(worst_entry)
       << ", worst trace gap/tol " << fmt(worst_trace);
    return std::make_pair(failures == 0, os.str());
  });
}

CheckResult check_schur_properties(const VerifyOptions& opt) {
  return timed("schur complement properties", [&]() {
    const std::uint64_t seed = opt.seed ^ fnv1a("schur");
    long failures = 0;
    double worst = 0.0;
    for (long i = 0; i < 200; ++i) {
      RandomStream rs(RngStream{seed, static_cast<std::uint64_t>(i)});
      const Index n = 4 + static_cast<Index>(rs.index(11));
      const Index ell = 1 + static_cast<Index>(rs.index(static_cast<std::uint64_t>(n)));
      MatR g1 = rs.gaussian<double>(n, n + 2);
      MatR g2 = rs.gaussian<double>(n, n + 2);
      MatR h1 = (g1 * g1.transpose() / static_cast<double>(n)).eval();
      MatR h2 = (g2 * g2.transpose() / static_cast<double>(n)).eval();
      h1 = ((h1 + h1.transpose()) / 2.0).eval();
      h2 = ((h2 + h2.transpose()) / 2.0).eval();
      MatR omega = conditioned_gaussian(rs, n, ell, 100.0);
      MatR mixer = conditioned_gaussian(rs, ell, ell, 50.0);

      MatR s1 = schur_complement<double>(h1, omega);
      bool ok = min_eigenvalue(s1) >= -1e-9;

      MatR s1m = schur_complement<double>(h1, (omega * mixer).eval());
      ok = ok && (s1m - s1).cwiseAbs().maxCoeff() <= 1e-8;

      MatR s2 = schur_complement<double>(h2, omega);
      for (double theta : {0.25, 0.5, 0.9}) {
        MatR blend = (theta * h1 + (1.0 - theta) * h2).eval();
        MatR sb = schur_complement<double>(blend, omega);
        const double gap = min_eigenvalue((sb - theta * s1 - (1.0 - theta) * s2).eval());
        worst = std::min(worst, gap);
        ok = ok && gap >= -1e-9;
      }

      MatR hsum = (h1 + h2).eval();  // h1 <= hsum in the psd order
      MatR ssum = schur_complement<double>(hsum, omega);
      const double mono_gap = min_eigenvalue((ssum - s1).eval());
      worst = std::min(worst, mono_gap);
      ok = ok && mono_gap >= -1e-9;

      if (!ok) ++failures;
    }
    std::ostringstream os;
    os << failures << " failures over 200 triples, worst eigenvalue gap " << fmt(worst);
    return std::make_pair(failures == 0, os.str());
  });
}

CheckResult check_rsvd_bounds(const VerifyOptions& opt) {
  return timed("low-rank error bounds (step spectrum)", [&]() {
    ExperimentGrid grid;
    grid.task = Task::Rsvd;
    grid.ell_grid = {15, 20, 30, 50};
    grid.embeddings = {EmbeddingKind::Gaussian};
    grid.trials = trials_or(opt, 1000);
    grid.master_seed = opt.seed ^ fnv1a("rsvd-bounds");
    grid.threads = opt.threads;
    auto inst = make_psd(PsdBasis::Identity, PsdSpectrumKind::Step, 100);
    auto rows = run_grid(grid, inst);
    const auto tail = inst.squared_spectrum();
    bool pass = true;
    std::ostringstream os;
    for (const auto& row : rows) {
      require(!row.failed && row.theory.has_value(), ErrorCode::InvalidSpec, "bound missing");
      const double sharp = *row.theory;
      const double hmt = rsvd_bound_hmt(tail, Field::Real, row.ell);
      const bool below_sharp = row.mean <= sharp + 3.0 * row.std_err;
      const bool ordered = sharp <= hmt * (1.0 + 1e-12);
      pass = pass && below_sharp && ordered;
      os << "ell=" << row.ell << " mean=" << fmt(row.mean) << " sharp=" << fmt(sharp)
         << " hmt=" << fmt(hmt) << (below_sharp && ordered ? " ok; " : " VIOLATION; ");
    }
    return std::make_pair(pass, os.str());
  });
}

CheckResult check_gn_bounds(const VerifyOptions& opt) {
  return timed("two-sided sketch bounds", [&]() {
    const long trials = trials_or(opt, 2000);
    ExperimentGrid grid;
    grid.task = Task::GenNystrom;
    grid.ell_grid = {10};
    grid.embeddings = {EmbeddingKind::Gaussian};
    grid.k = 25;
    grid.trials = trials;
    grid.master_seed = opt.seed ^ fnv1a("gn-upper");
    grid.threads = opt.threads;
    auto random_inst = make_random_rect(60, 80, RngStream{opt.seed ^ fnv1a("gn-inst"), 0});
    auto upper_rows = run_grid(grid, random_inst);
    const auto& up = upper_rows.front();
    require(!up.failed && up.theory.has_value(), ErrorCode::InvalidSpec, "upper bound missing");
    const bool upper_ok = up.mean <= *up.theory + 3.0 * up.std_err;

    grid.psi_kind = EmbeddingKind::HaarOrthonormal;
    grid.master_seed = opt.seed ^ fnv1a("gn-lower");
    auto hard = make_rect_hard(1e6, 5, 60, 60, 80);
    auto lower_rows = run_grid(grid, hard);
    const auto& low = lower_rows.front();
    require(!low.failed, ErrorCode::InvalidSpec, low.error);
    BoundQuery query;
    query.field = Field::Real;
    query.d = 60;
    query.n = 80;
    query.r = 60;
    query.ell = 10;
    query.k = 25;
    query.q = 5;
    const double prediction = gn_lower_factor(query) * hard.squared_spectrum().tail(5);
    const bool lower_ok = low.mean >= prediction - 3.0 * low.std_err - 0.03 * prediction;

    std::ostringstream os;
    os << "upper mean=" << fmt(up.mean) << " bound=" << fmt(*up.theory) << " se="
       << fmt(up.std_err) << "; lower mean=" << fmt(low.mean) << " prediction="
       << fmt(prediction) << " se=" << fmt(low.std_err);
    return std::make_pair(upper_ok && lower_ok, os.str());
  });
}

CheckResult check_planner(const VerifyOptions&) {
  return timed("budget planner", [&]() {
    const auto plan = plan_split(16, 80);
    const double alt =
        (1.0 + 26.0 / (54.0 - 26.0)) * (1.0 + 16.0 / (26.0 - 16.0));  // the other rounding
    const double expected = (1.0 + 27.0 / (53.0 - 27.0)) * (1.0 + 16.0 / (27.0 - 16.0));
    bool pass = plan.k == 53 && plan.ell == 27;
    pass = pass && std::abs(plan.objective - expected) <= 1e-12 && plan.objective < alt;
    pass = pass && budget_for_epsilon(10, 0.5, BudgetMethod::Rsvd) == 60;
    std::ostringstream os;
    os << "split=(" << plan.k << "," << plan.ell << ") objective=" << fmt(plan.objective)
       << " alternative=" << fmt(alt)
       << " rsvd budget(q=10,eps=0.5)=" << budget_for_epsilon(10, 0.5, BudgetMethod::Rsvd);
    return std::make_pair(pass, os.str());
  });
}

CheckResult check_universality(const VerifyOptions& opt) {
  return timed("accuracy-sweep universality (desk)", [&]() {
    FigureConfig config;
    config.fig = FigureId::Fig1;
    config.scale = ScalePreset::Desk;
    config.seed = opt.seed ^ fnv1a("fig1");
    config.threads = opt.threads;
    if (opt.trials_override > 0) config.trials_override = opt.trials_override;
    auto rows = universality_report(config);

    std::vector<Index> ells;
    for (const auto& row : rows) {
      if (std::find(ells.begin(), ells.end(), row.ell) == ells.end()) ells.push_back(row.ell);
    }
    std::sort(ells.begin(), ells.end());
    const auto [lo, hi] = middle_third(ells.size());

    long cells = 0, failures = 0;
    double worst_margin = 0.0;
    std::string worst_desc;
    for (const auto& row : rows) {
      const auto pos = std::find(ells.begin(), ells.end(), row.ell) - ells.begin();
      if (pos < static_cast<long>(lo) || pos >= static_cast<long>(hi)) continue;
      require(!row.failed && row.theory.has_value(), ErrorCode::InvalidSpec,
              "prediction missing for " + row.embedding);
      const double pred = *row.theory;  // class prediction attached by the engine
      const double tol = 0.05 * pred + 3.0 * row.std_err;
      const double margin = std::abs(row.mean - pred) - tol;
      ++cells;
      if (margin > 0.0) ++failures;
      if (margin > worst_margin) {
        worst_margin = margin;
        worst_desc = row.instance + "/" + row.embedding + " ell=" + std::to_string(row.ell);
      }
    }
    std::ostringstream os;
    os << failures << " of " << cells << " middle-third cells out of tolerance";
    if (!worst_desc.empty()) os << " (worst: " << worst_desc << ")";
    return std::make_pair(failures == 0, os.str());
  });
}

CheckResult check_determinism(const VerifyOptions& opt) {
  return timed("seeded reruns are byte-identical", [&]() {
    auto run_once = [&](int threads) {
      ExperimentGrid grid;
      grid.task = Task::SketchSolve;
      grid.ell_grid = {8, 16, 32};
      grid.embeddings = {EmbeddingKind::Gaussian,    EmbeddingKind::Sign,
                         EmbeddingKind::Uniform,     EmbeddingKind::SparseIID,
                         EmbeddingKind::SparseStack, EmbeddingKind::HaarOrthonormal,
                         EmbeddingKind::Srtt,        EmbeddingKind::Givens};
      grid.trials = 50;
      grid.master_seed = opt.seed ^ fnv1a("determinism");
      grid.threads = threads;
      auto rows = run_grid(grid, make_lsq(LsqKind::Coherent, 60, 5, 1));
      return csv_string(rows);
    };
    const std::string first = run_once(1);
    const std::string second = run_once(1);
    const std::string threaded = run_once(2);
    const bool pass = first == second && first == threaded;
    std::ostringstream os;
    os << "csv bytes: rerun " << (first == second ? "identical" : "DIFFER") << ", threaded "
       << (first == threaded ? "identical" : "DIFFER") << " (" << first.size() << " bytes)";
    return std::make_pair(pass, os.str());
  });
}

std::vector<std::string> suite_names() {
  return {"sketch-solve", "unbiasedness", "wishart",  "beta",         "algebraic",
          "schur",        "weighting",    "two-eig",  "bounds",       "planner",
          "universality", "determinism",  "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  std::vector<CheckResult> results;
  auto want = [&](const char* name) { return suite == "all" || suite == name; };
  if (want("sketch-solve")) {
    results.push_back(check_ss_gaussian_real(opt));
    results.push_back(check_ss_haar_real(opt));
    results.push_back(check_ss_complex(opt));
  }
  if (want("unbiasedness")) results.push_back(check_unbiasedness(opt));
  if (want("wishart")) results.push_back(check_wishart_inverse(opt));
  if (want("beta")) results.push_back(check_beta_inverse(opt));
  if (want("algebraic")) {
    results.push_back(check_residual_identity(opt));
    results.push_back(check_gram_correspondence(opt));
  }
  if (want("schur")) results.push_back(check_schur_properties(opt));
  if (want("weighting")) results.push_back(check_weighting_hurts(opt));
  if (want("two-eig")) results.push_back(check_two_eig_limit(opt));
  if (want("bounds")) {
    results.push_back(check_rsvd_bounds(opt));
    results.push_back(check_gn_bounds(opt));
  }
  if (want("planner")) results.push_back(check_planner(opt));
  if (want("universality")) results.push_back(check_universality(opt));
  if (want("determinism")) results.push_back(check_determinism(opt));
  if (results.empty()) {
    fail(ErrorCode::UsageError, "unknown suite '" + suite + "'");
  }
  return results;
}

}  // namespace sketchlab::verify
