#include "sketchlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace sketchlab {

namespace {

struct Aggregate {
  double mean = 0.0;
  double std_err = 0.0;
  double median = 0.0;
};

// Trial-index-order aggregation keeps results independent of the thread
// schedule (floating-point addition is not associative).
Aggregate aggregate(const std::vector<double>& xs) {
  Aggregate out;
  const auto t = static_cast<double>(xs.size());
  double sum = 0.0;
  for (double x : xs) sum += x;
  out.mean = sum / t;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.std_err = std::sqrt(ss / (t - 1.0)) / std::sqrt(t);
  }
  std::vector<double> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  out.median = (sorted.size() % 2 == 1) ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return out;
}

int resolve_threads(int threads, long trials) {
  int t = threads;
  if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  if (static_cast<long>(t) > trials) t = static_cast<int>(trials);
  return std::min(t, 16);
}

// Each trial writes its own slot, so the result is schedule-independent.
void run_trials(long trials, int threads, const std::function<double(long)>& fn,
                std::vector<double>& out) {
  out.assign(static_cast<std::size_t>(trials), 0.0);
  const int nthreads = resolve_threads(threads, trials);
  if (nthreads == 1) {
    for (long t = 0; t < trials; ++t) out[static_cast<std::size_t>(t)] = fn(t);
    return;
  }
  std::atomic<long> next{0};
  std::mutex error_mutex;
  std::string error;
  const long chunk = std::max<long>(1, trials / (8 * nthreads));
  auto worker = [&] {
    while (true) {
      const long lo = next.fetch_add(chunk);
      if (lo >= trials) break;
      const long hi = std::min(trials, lo + chunk);
      try {
        for (long t = lo; t < hi; ++t) out[static_cast<std::size_t>(t)] = fn(t);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (error.empty()) error = e.what();
        break;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (!error.empty()) throw std::runtime_error(error);
}

std::uint64_t derive_cell_seed(std::uint64_t master, const TrialSummary& cell) {
  std::ostringstream desc;
  desc << cell.task << '|' << cell.instance << '|' << cell.embedding << '|' << cell.n << '|'
       << cell.d_or_basis << '|' << cell.ell << '|' << cell.k;
  return fnv1a(desc.str()) ^ master;
}

std::optional<double> epsilon_prediction(Field field, Index n, Index r, Index ell,
                                         EmbeddingKind kind) {
  if (ell - r - alpha(field) <= 0) return std::nullopt;
  if (in_gaussian_class(kind)) return ss_ratio_gaussian(field, r, ell) - 1.0;
  return ss_ratio_haar(field, n, r, ell) - 1.0;
}

void attach_statistics(TrialSummary& cell, const std::vector<double>& xs) {
  const Aggregate agg = aggregate(xs);
  cell.mean = agg.mean;
  cell.std_err = agg.std_err;
  cell.median = agg.median;
  if (cell.theory) {
    const double diff = cell.mean - *cell.theory;
    if (cell.std_err > 0.0) {
      cell.z = diff / cell.std_err;
    } else {
      cell.z = std::abs(diff) < 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
    }
  }
}

template <class Scalar>
void run_sketch_solve_cell(const LeastSquaresInstance<Scalar>& inst, const EmbeddingSpec& spec,
                           long trials, int threads, TrialSummary& cell) {
  std::vector<double> xs;
  run_trials(trials, threads,
             [&](long t) {
               auto sk = sample_sketcher<Scalar>(
                   spec, RngStream{cell.seed, static_cast<std::uint64_t>(t)});
               Mat<Scalar> sa = sk.adjoint_times(inst.a);
               Mat<Scalar> sb = sk.adjoint_times(inst.b);
               auto solved = solve_sketched<Scalar>(inst.a, inst.b, sa, sb);
               return solved.second / inst.optimal_residual_sq - 1.0;
             },
             xs);
  attach_statistics(cell, xs);
}

void run_rsvd_cell(const MatR& target, const EmbeddingSpec& spec, long trials, int threads,
                   TrialSummary& cell) {
  std::vector<double> xs;
  run_trials(trials, threads,
             [&](long t) {
               auto sk = sample_sketcher<double>(
                   spec, RngStream{cell.seed, static_cast<std::uint64_t>(t)});
               return randomized_svd<double>(target, sk).err_sq;
             },
             xs);
  attach_statistics(cell, xs);
}

void run_nystrom_cell(const MatR& h, const EmbeddingSpec& spec, long trials, int threads,
                      TrialSummary& cell) {
  detail::check_psd<double>(h);  // once per cell, not per trial
  std::vector<double> xs;
  run_trials(trials, threads,
             [&](long t) {
               auto sk = sample_sketcher<double>(
                   spec, RngStream{cell.seed, static_cast<std::uint64_t>(t)});
               return nystrom<double>(h, sk, false).err_sq;
             },
             xs);
  attach_statistics(cell, xs);
}

void run_gn_cell(const MatR& target, const EmbeddingSpec& omega_spec,
                 const EmbeddingSpec& psi_spec, long trials, int threads, TrialSummary& cell) {
  std::vector<double> xs;
  run_trials(trials, threads,
             [&](long t) {
               auto omega = sample_sketcher<double>(
                   omega_spec, RngStream{cell.seed, static_cast<std::uint64_t>(t)});
               auto psi = sample_sketcher<double>(
                   psi_spec,
                   RngStream{cell.seed, static_cast<std::uint64_t>(t) + (1ULL << 32)});
               return generalized_nystrom<double>(target, omega, psi).err_sq;
             },
             xs);
  attach_statistics(cell, xs);
}

template <class Scalar>
void run_wishart_cell(Index r, Index ell, long trials, int threads, TrialSummary& cell) {
  std::vector<double> xs;
  run_trials(trials, threads,
             [&](long t) {
               Mat<Scalar> w = sample_wishart<Scalar>(
                   r, ell, RngStream{cell.seed, static_cast<std::uint64_t>(t)});
               return std::real(w.inverse().trace()) / static_cast<double>(r);
             },
             xs);
  attach_statistics(cell, xs);
}

template <class Scalar>
void run_beta_cell(Index r, Index ell, Index n, long trials, int threads, TrialSummary& cell) {
  std::vector<double> xs;
  run_trials(trials, threads,
             [&](long t) {
               Mat<Scalar> x = sample_beta<Scalar>(
                   r, ell, n, RngStream{cell.seed, static_cast<std::uint64_t>(t)});
               return std::real(x.inverse().trace()) / static_cast<double>(r);
             },
             xs);
  attach_statistics(cell, xs);
}

template <class Scalar>
UnbiasednessReport unbiasedness_impl(const LeastSquaresInstance<Scalar>& inst,
                                     const EmbeddingSpec& spec, long trials, std::uint64_t seed) {
  spec.validate();
  require(spec.kind == EmbeddingKind::Gaussian || spec.kind == EmbeddingKind::HaarOrthonormal,
          ErrorCode::InvalidSpec, "unbiasedness holds for Gaussian and Haar embeddings");
  require(spec.ell - inst.r - alpha(field_of<Scalar>()) > 0, ErrorCode::DimensionTooSmall,
          "mean does not exist unless ell > r + alpha");
  Mat<Scalar> target = pseudoinverse<Scalar>(inst.a) * inst.b;
  Mat<Scalar> sum = Mat<Scalar>::Zero(target.rows(), target.cols());
  MatR sum_sq = MatR::Zero(target.rows(), target.cols());
  for (long t = 0; t < trials; ++t) {
    auto sk = sample_sketcher<Scalar>(spec, RngStream{seed, static_cast<std::uint64_t>(t)});
    Mat<Scalar> sa = sk.adjoint_times(inst.a);
    Mat<Scalar> sb = sk.adjoint_times(inst.b);
    Mat<Scalar> xhat = pseudoinverse<Scalar>(sa) * sb;
    sum += xhat;
    sum_sq += xhat.cwiseAbs2();
  }
  const double t = static_cast<double>(trials);
  Mat<Scalar> mean = sum / Scalar(t);
  UnbiasednessReport report;
  report.trials = trials;
  report.abs_z = MatR::Zero(target.rows(), target.cols());
  for (Index j = 0; j < target.cols(); ++j) {
    for (Index i = 0; i < target.rows(); ++i) {
      const double var =
          std::max(0.0, (sum_sq(i, j) - t * std::norm(mean(i, j))) / (t - 1.0));
      const double se = std::sqrt(var / t);
      const double diff = std::abs(mean(i, j) - target(i, j));
      report.abs_z(i, j) = se > 0.0 ? diff / se
                                    : (diff < 1e-12 ? 0.0 : std::numeric_limits<double>::infinity());
    }
  }
  report.max_abs_z = report.abs_z.maxCoeff();
  return report;
}

template <class Scalar>
MomentCheck inverse_moment_impl(Index r, double target, long trials, std::uint64_t seed,
                                const std::function<Mat<Scalar>(RngStream)>& draw) {
  Mat<Scalar> sum = Mat<Scalar>::Zero(r, r);
  MatR sum_sq = MatR::Zero(r, r);
  for (long t = 0; t < trials; ++t) {
    Mat<Scalar> inv = draw(RngStream{seed, static_cast<std::uint64_t>(t)}).inverse();
    sum += inv;
    sum_sq += inv.cwiseAbs2();
  }
  const double t = static_cast<double>(trials);
  Mat<Scalar> mean = sum / Scalar(t);
  MomentCheck check;
  check.trials = trials;
  check.target = target;
  for (Index j = 0; j < r; ++j) {
    for (Index i = 0; i < r; ++i) {
      const double var =
          std::max(0.0, (sum_sq(i, j) - t * std::norm(mean(i, j))) / (t - 1.0));
      const double se = std::sqrt(var / t);
      const double expectation = i == j ? target : 0.0;
      const double diff = std::abs(mean(i, j) - Scalar(expectation));
      const double z = se > 0.0
                           ? diff / se
                           : (diff < 1e-12 ? 0.0 : std::numeric_limits<double>::infinity());
      check.max_abs_z = std::max(check.max_abs_z, z);
    }
  }
  return check;
}

}  // namespace

void ExperimentGrid::validate(Index ambient_n) const {
  require(!ell_grid.empty(), ErrorCode::InvalidSpec, "ell grid is empty");
  for (std::size_t i = 0; i < ell_grid.size(); ++i) {
    require(ell_grid[i] >= 1, ErrorCode::InvalidSpec, "ell must be positive");
    if (i > 0) {
      require(ell_grid[i] > ell_grid[i - 1], ErrorCode::InvalidSpec,
              "ell grid must be strictly increasing");
    }
    if (ambient_n > 0) {
      require(ell_grid[i] <= ambient_n, ErrorCode::InvalidSpec, "ell exceeds ambient dimension");
    }
  }
  require(trials >= 1, ErrorCode::InvalidSpec, "need at least one trial");
}

std::vector<TrialSummary> run_grid(const ExperimentGrid& grid, const GridInstance& instance) {
  const auto* lsq = std::get_if<LeastSquaresInstance<double>>(&instance);
  const auto* psd = std::get_if<PsdInstance<double>>(&instance);
  const auto* rect = std::get_if<RectInstance<double>>(&instance);

  Index ambient = 0;
  if (grid.task == Task::SketchSolve || grid.task == Task::Unbiasedness) {
    require(lsq != nullptr, ErrorCode::InvalidSpec, "task needs a least-squares instance");
    ambient = lsq->a.rows();
  } else if (grid.task == Task::Nystrom) {
    require(psd != nullptr, ErrorCode::InvalidSpec, "task needs a psd instance");
    ambient = psd->n();
  } else if (grid.task == Task::Rsvd) {
    require(psd != nullptr || rect != nullptr, ErrorCode::InvalidSpec,
            "task needs a psd or rectangular instance");
    ambient = psd ? psd->n() : rect->a.cols();
  } else if (grid.task == Task::GenNystrom) {
    require(rect != nullptr, ErrorCode::InvalidSpec, "task needs a rectangular instance");
    ambient = rect->a.cols();
  } else {
    require(grid.moment_r >= 1, ErrorCode::InvalidSpec, "moment tasks need moment_r");
  }
  grid.validate(ambient);

  std::vector<EmbeddingKind> kinds = grid.embeddings;
  const bool moment_task = grid.task == Task::WishartInv || grid.task == Task::BetaInv;
  if (moment_task) kinds = {EmbeddingKind::Gaussian};  // placeholder; no embedding is sampled

  // Spectra reused by every cell of the bound-comparison tasks.
  std::optional<SpectrumTail> frob_tail;
  std::optional<SpectrumTail> trace_tail;
  Index target_rank = 0;
  if (psd) {
    frob_tail = psd->squared_spectrum();
    trace_tail = psd->trace_spectrum();
    target_rank = psd->r;
  } else if (rect) {
    frob_tail = rect->squared_spectrum();
    target_rank = rect->r;
  }

  std::vector<TrialSummary> rows;
  for (EmbeddingKind kind : kinds) {
    for (Index ell : grid.ell_grid) {
      TrialSummary cell;
      cell.task = task_name(grid.task);
      cell.embedding = moment_task ? "" : embedding_name(kind);
      cell.n = ambient;
      cell.ell = ell;
      cell.trials = grid.trials;
      if (lsq) {
        cell.instance = lsq->name;
        cell.d_or_basis = std::to_string(lsq->a.cols());
        cell.r = lsq->r;
      } else if (psd) {
        cell.instance = psd->name;
        cell.d_or_basis = psd_basis_name(psd->basis);
        cell.r = psd->r;
      } else if (rect) {
        cell.instance = rect->name;
        cell.d_or_basis = std::to_string(rect->a.rows());
        cell.r = rect->r;
      } else {
        cell.instance = grid.task == Task::WishartInv ? "wishart" : "beta";
        cell.d_or_basis = std::to_string(grid.moment_r);
        cell.r = grid.moment_r;
        cell.n = grid.task == Task::BetaInv ? grid.moment_n : ell;
      }
      if (grid.task == Task::GenNystrom) cell.k = grid.k;
      cell.seed = derive_cell_seed(grid.master_seed, cell);

      EmbeddingSpec spec{kind, ambient, ell, grid.field,
                         kind == EmbeddingKind::SparseIID ? grid.zeta_iid : grid.zeta_stack, -1};
      const long a = alpha(grid.field);

      try {
        switch (grid.task) {
          case Task::SketchSolve: {
            cell.theory = epsilon_prediction(grid.field, ambient, lsq->r, ell, kind);
            cell.high_variance = ell - lsq->r - a <= 2;
            if (grid.field == Field::Complex) {
              auto cinst = lsq->cast<std::complex<double>>();
              EmbeddingSpec cspec = spec;
              cspec.field = Field::Complex;
              run_sketch_solve_cell<std::complex<double>>(cinst, cspec, grid.trials, grid.threads,
                                                          cell);
            } else {
              run_sketch_solve_cell<double>(*lsq, spec, grid.trials, grid.threads, cell);
            }
            break;
          }
          case Task::Rsvd: {
            const MatR& target = psd ? psd->h : rect->a;
            try {
              cell.theory = target_rank >= ell
                                ? rsvd_bound_sharp(*frob_tail, grid.field, target_rank, ell)
                                : rsvd_bound_hmt(*frob_tail, grid.field, ell);
            } catch (const Error&) {
            }
            cell.opt_tail = frob_tail->tail(ell);
            run_rsvd_cell(target, spec, grid.trials, grid.threads, cell);
            break;
          }
          case Task::Nystrom: {
            try {
              cell.theory = target_rank >= ell
                                ? rsvd_bound_sharp(*trace_tail, grid.field, target_rank, ell)
                                : rsvd_bound_hmt(*trace_tail, grid.field, ell);
            } catch (const Error&) {
            }
            cell.opt_tail = trace_tail->tail(ell);
            run_nystrom_cell(psd->h, spec, grid.trials, grid.threads, cell);
            break;
          }
          case Task::GenNystrom: {
            BoundQuery query;
            query.field = grid.field;
            query.d = rect->a.rows();
            query.n = rect->a.cols();
            query.r = target_rank;
            query.ell = ell;
            query.k = grid.k;
            query.gamma_kind = grid.psi_kind == EmbeddingKind::HaarOrthonormal
                                   ? GammaKind::HaarOrthonormal
                                   : GammaKind::Gaussian;
            try {
              cell.theory = gn_bound(query, *frob_tail);
            } catch (const Error&) {
            }
            cell.opt_tail = frob_tail->tail(ell);
            EmbeddingSpec psi_spec{grid.psi_kind, rect->a.rows(), grid.k, grid.field, 0, -1};
            run_gn_cell(rect->a, spec, psi_spec, grid.trials, grid.threads, cell);
            break;
          }
          case Task::WishartInv: {
            if (ell - grid.moment_r - a > 0) {
              cell.theory = 1.0 / static_cast<double>(ell - grid.moment_r - a);
            }
            cell.high_variance = ell - grid.moment_r - a <= 2;
            if (grid.field == Field::Complex) {
              run_wishart_cell<std::complex<double>>(grid.moment_r, ell, grid.trials, grid.threads,
                                                     cell);
            } else {
              run_wishart_cell<double>(grid.moment_r, ell, grid.trials, grid.threads, cell);
            }
            break;
          }
          case Task::BetaInv: {
            if (ell - grid.moment_r - a > 0) {
              cell.theory = 1.0 + static_cast<double>(grid.moment_n - ell) /
                                      static_cast<double>(ell - grid.moment_r - a);
            }
            cell.high_variance = ell - grid.moment_r - a <= 2;
            if (grid.field == Field::Complex) {
              run_beta_cell<std::complex<double>>(grid.moment_r, ell, grid.moment_n, grid.trials,
                                                  grid.threads, cell);
            } else {
              run_beta_cell<double>(grid.moment_r, ell, grid.moment_n, grid.trials, grid.threads,
                                    cell);
            }
            break;
          }
          case Task::Unbiasedness: {
            UnbiasednessReport report;
            if (grid.field == Field::Complex) {
              report = estimate_unbiasedness_complex(*lsq, spec, grid.trials, cell.seed);
            } else {
              report = estimate_unbiasedness(*lsq, spec, grid.trials, cell.seed);
            }
            cell.mean = report.max_abs_z;
            cell.median = report.max_abs_z;
            cell.theory = 0.0;
            break;
          }
        }
      } catch (const std::exception& e) {
        cell.failed = true;
        cell.error = e.what();
      }
      rows.push_back(std::move(cell));
    }
    if (moment_task) break;  // a single pass; cells do not depend on the embedding list
  }
  return rows;
}

UnbiasednessReport estimate_unbiasedness(const LeastSquaresInstance<double>& instance,
                                         const EmbeddingSpec& spec, long trials,
                                         std::uint64_t seed) {
  return unbiasedness_impl<double>(instance, spec, trials, seed);
}

UnbiasednessReport estimate_unbiasedness_complex(const LeastSquaresInstance<double>& instance,
                                                 const EmbeddingSpec& spec, long trials,
                                                 std::uint64_t seed) {
  return unbiasedness_impl<std::complex<double>>(instance.cast<std::complex<double>>(), spec,
                                                 trials, seed);
}

MomentCheck wishart_inverse_check(Field field, Index r, Index ell, long trials,
                                  std::uint64_t seed) {
  const long a = alpha(field);
  require(r + a < ell, ErrorCode::DimensionTooSmall, "inverse mean needs r + alpha < ell");
  const double target = 1.0 / static_cast<double>(ell - r - a);
  if (field == Field::Complex) {
    return inverse_moment_impl<std::complex<double>>(
        r, target, trials, seed,
        [&](RngStream rng) { return sample_wishart<std::complex<double>>(r, ell, rng); });
  }
  return inverse_moment_impl<double>(
      r, target, trials, seed, [&](RngStream rng) { return sample_wishart<double>(r, ell, rng); });
}

MomentCheck beta_inverse_check(Field field, Index r, Index ell, Index n, long trials,
                               std::uint64_t seed) {
  const long a = alpha(field);
  require(r + a < ell, ErrorCode::DimensionTooSmall, "inverse mean needs r + alpha < ell");
  const double target = 1.0 + static_cast<double>(n - ell) / static_cast<double>(ell - r - a);
  if (field == Field::Complex) {
    return inverse_moment_impl<std::complex<double>>(
        r, target, trials, seed,
        [&](RngStream rng) { return sample_beta<std::complex<double>>(r, ell, n, rng); });
  }
  return inverse_moment_impl<double>(
      r, target, trials, seed,
      [&](RngStream rng) { return sample_beta<double>(r, ell, n, rng); });
}

MomentCheck haar_block_inverse_check(Field field, Index r, Index ell, Index n, long trials,
                                     std::uint64_t seed) {
  const long a = alpha(field);
  require(r + a < ell, ErrorCode::DimensionTooSmall, "inverse mean needs r + alpha < ell");
  const double target = 1.0 + static_cast<double>(n - ell) / static_cast<double>(ell - r - a);
  EmbeddingSpec spec{EmbeddingKind::HaarOrthonormal, n, ell, field, 0, -1};
  if (field == Field::Complex) {
    return inverse_moment_impl<std::complex<double>>(
        r, target, trials, seed, [&](RngStream rng) {
          MatC block = haar_top_block<std::complex<double>>(spec, r, rng);
          return (block * block.adjoint()).eval();
        });
  }
  return inverse_moment_impl<double>(r, target, trials, seed, [&](RngStream rng) {
    MatR block = haar_top_block<double>(spec, r, rng);
    return (block * block.adjoint()).eval();
  });
}

std::vector<Index> geometric_grid(Index lo, Index hi, int points) {
  require(lo >= 1 && hi >= lo && points >= 1, ErrorCode::InvalidSpec, "bad grid request");
  std::vector<Index> grid;
  for (int i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    const double value = static_cast<double>(lo) *
                         std::pow(static_cast<double>(hi) / static_cast<double>(lo), f);
    Index v = static_cast<Index>(std::llround(value));
    v = std::clamp<Index>(v, lo, hi);
    if (grid.empty() || v > grid.back()) grid.push_back(v);
  }
  return grid;
}

std::vector<Index> figure_ell_grid(FigureId fig, ScalePreset scale, Index n, Index d) {
  const int points = scale == ScalePreset::Paper ? 12 : 9;
  if (fig == FigureId::Fig1) return geometric_grid(d + 2, n - 1, points);
  const Index hi = scale == ScalePreset::Paper ? n / 2 : n / 3;
  return geometric_grid(4, hi, points);
}

std::pair<std::size_t, std::size_t> middle_third(std::size_t grid_size) {
  return {grid_size / 3, grid_size - grid_size / 3};
}

std::vector<TrialSummary> universality_report(const FigureConfig& config) {
  const Index n = config.scale == ScalePreset::Paper ? 1000 : 300;
  const long trials =
      config.trials_override > 0 ? config.trials_override
                                 : (config.scale == ScalePreset::Paper ? 1000 : 300);
  std::vector<TrialSummary> rows;
  if (config.fig == FigureId::Fig1) {
    const Index d = 10;
    ExperimentGrid grid;
    grid.task = Task::SketchSolve;
    grid.ell_grid = figure_ell_grid(FigureId::Fig1, config.scale, n, d);
    grid.embeddings = {EmbeddingKind::Gaussian,   EmbeddingKind::Sign,
                       EmbeddingKind::Uniform,    EmbeddingKind::SparseIID,
                       EmbeddingKind::SparseStack, EmbeddingKind::HaarOrthonormal,
                       EmbeddingKind::Srtt,       EmbeddingKind::Givens};
    grid.trials = trials;
    grid.master_seed = config.seed;
    grid.threads = config.threads;
    for (LsqKind kind : {LsqKind::Coherent, LsqKind::Incoherent}) {
      auto block = run_grid(grid, make_lsq(kind, n, d, 1));
      rows.insert(rows.end(), block.begin(), block.end());
    }
    return rows;
  }
  ExperimentGrid grid;
  grid.task = Task::Rsvd;
  grid.ell_grid = figure_ell_grid(FigureId::Fig2, config.scale, n, 0);
  grid.embeddings = {EmbeddingKind::Gaussian,  EmbeddingKind::Sign,
                     EmbeddingKind::Uniform,   EmbeddingKind::SparseIID,
                     EmbeddingKind::SparseStack, EmbeddingKind::Srtt};
  grid.trials = trials;
  grid.master_seed = config.seed;
  grid.threads = config.threads;
  for (PsdSpectrumKind spectrum : {PsdSpectrumKind::Step, PsdSpectrumKind::Poly}) {
    for (PsdBasis basis : {PsdBasis::Identity, PsdBasis::Dct}) {
      auto block = run_grid(grid, make_psd(basis, spectrum, n));
      rows.insert(rows.end(), block.begin(), block.end());
    }
  }
  return rows;
}

std::vector<UniversalityClassification> classify_universality(
    const std::vector<TrialSummary>& rows) {
  // Collect the ell grid of the accuracy sweep.
  std::vector<Index> ells;
  for (const auto& row : rows) {
    if (row.task != task_name(Task::SketchSolve) || row.failed) continue;
    if (std::find(ells.begin(), ells.end(), row.ell) == ells.end()) ells.push_back(row.ell);
  }
  std::sort(ells.begin(), ells.end());
  if (ells.empty()) return {};
  const auto [lo, hi] = middle_third(ells.size());
  std::vector<Index> window(ells.begin() + static_cast<long>(lo),
                            ells.begin() + static_cast<long>(hi));

  std::vector<UniversalityClassification> out;
  for (const auto& row : rows) {
    if (row.task != task_name(Task::SketchSolve) || row.failed) continue;
    if (std::find(window.begin(), window.end(), row.ell) == window.end()) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& c) {
      return c.instance == row.instance && c.embedding == row.embedding;
    });
    if (it == out.end()) {
      out.push_back({row.instance, row.embedding, 0.0, 0.0, "", false});
      it = std::prev(out.end());
    }
    const double g = ss_ratio_gaussian(Field::Real, row.r, row.ell) - 1.0;
    const double h = ss_ratio_haar(Field::Real, row.n, row.r, row.ell) - 1.0;
    it->mard_gaussian += std::abs(row.mean / g - 1.0) / static_cast<double>(window.size());
    it->mard_haar += std::abs(row.mean / h - 1.0) / static_cast<double>(window.size());
  }
  for (auto& c : out) {
    c.closer = c.mard_gaussian <= c.mard_haar ? "gaussian" : "haar";
    auto kind = embedding_from_name(c.embedding);
    const std::string expected = kind && in_gaussian_class(*kind) ? "gaussian" : "haar";
    c.matches_expected = c.closer == expected;
  }
  return out;
}

}  // namespace sketchlab
