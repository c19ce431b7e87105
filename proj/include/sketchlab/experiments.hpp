#pragma once

#include "sketchlab/algorithms.hpp"
#include "sketchlab/instances.hpp"
#include "sketchlab/theory.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sketchlab {

enum class Task { SketchSolve, Rsvd, Nystrom, GenNystrom, WishartInv, BetaInv, Unbiasedness };

inline const char* task_name(Task t) {
  switch (t) {
    case Task::SketchSolve: return "sketch_solve";
    case Task::Rsvd: return "rsvd";
    case Task::Nystrom: return "nystrom";
    case Task::GenNystrom: return "gen_nystrom";
    case Task::WishartInv: return "wishart_inv";
    case Task::BetaInv: return "beta_inv";
    case Task::Unbiasedness: return "unbiasedness";
  }
  return "unknown";
}

/// Per-cell Monte Carlo statistics. mean/stderr/median aggregate the task's
/// per-trial scalar in trial-index order.
struct TrialSummary {
  std::string task;
  std::string instance;
  std::string embedding;
  Index n = 0;
  std::string d_or_basis;
  Index ell = 0;
  Index k = 0;
  Index r = 0;  // instance rank (not a CSV column)
  long trials = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double std_err = 0.0;
  double median = 0.0;
  std::optional<double> theory;
  std::optional<double> z;
  std::optional<double> opt_tail;
  bool high_variance = false;
  bool failed = false;
  std::string error;
};

using GridInstance = std::variant<std::monostate, LeastSquaresInstance<double>, PsdInstance<double>,
                                  RectInstance<double>>;

/// One full Monte Carlo sweep: a task, an ell grid, embeddings, and a seed.
/// Trials inside a cell use stream indices 0..trials-1 under a cell seed
/// derived from the master seed and the cell descriptor.
struct ExperimentGrid {
  Task task = Task::SketchSolve;
  std::vector<Index> ell_grid;
  std::vector<EmbeddingKind> embeddings;
  Field field = Field::Real;
  long trials = 1000;
  std::uint64_t master_seed = 0;
  Index k = 0;                                     // GenNystrom left dimension
  EmbeddingKind psi_kind = EmbeddingKind::Gaussian;  // GenNystrom left embedding
  int zeta_iid = 16;
  int zeta_stack = 8;
  Index moment_r = 0;  // WishartInv / BetaInv row count
  Index moment_n = 0;  // BetaInv ambient dimension
  int threads = 0;     // 0 = hardware concurrency

  void validate(Index ambient_n) const;
};

/// Runs every (embedding, ell) cell of the grid. A failing cell is marked
/// failed without aborting the others.
std::vector<TrialSummary> run_grid(const ExperimentGrid& grid, const GridInstance& instance);

struct UnbiasednessReport {
  double max_abs_z = 0.0;
  MatR abs_z;  // d x p entrywise |z|
  long trials = 0;
};

/// Entrywise z-scores of mean(Xhat) against the exact solution A^+ B.
UnbiasednessReport estimate_unbiasedness(const LeastSquaresInstance<double>& instance,
                                         const EmbeddingSpec& spec, long trials,
                                         std::uint64_t seed);
UnbiasednessReport estimate_unbiasedness_complex(const LeastSquaresInstance<double>& instance,
                                                 const EmbeddingSpec& spec, long trials,
                                                 std::uint64_t seed);

struct MomentCheck {
  double max_abs_z = 0.0;
  double target = 0.0;  // diagonal value of the expected matrix
  long trials = 0;
};

/// mean(W^-1) against I / (ell - r - alpha).
MomentCheck wishart_inverse_check(Field field, Index r, Index ell, long trials, std::uint64_t seed);
/// mean(X^-1) against (1 + (n - ell)/(ell - r - alpha)) I.
MomentCheck beta_inverse_check(Field field, Index r, Index ell, Index n, long trials,
                               std::uint64_t seed);
/// Same gate applied to the Gram matrix of the top r x ell block of a Haar
/// embedding, which has the Beta distribution.
MomentCheck haar_block_inverse_check(Field field, Index r, Index ell, Index n, long trials,
                                     std::uint64_t seed);

enum class FigureId { Fig1 = 1, Fig2 = 2 };
enum class ScalePreset { Paper, Desk };

inline const char* scale_name(ScalePreset s) { return s == ScalePreset::Paper ? "paper" : "desk"; }

struct FigureConfig {
  FigureId fig = FigureId::Fig1;
  ScalePreset scale = ScalePreset::Desk;
  std::uint64_t seed = 0;
  int threads = 0;
  long trials_override = 0;  // 0 = preset (paper 1000, desk 300)
};

/// Log-spaced integer grid used by the figure sweeps.
std::vector<Index> geometric_grid(Index lo, Index hi, int points);
std::vector<Index> figure_ell_grid(FigureId fig, ScalePreset scale, Index n, Index d);

/// Index range [lo, hi) holding the middle third of a grid.
std::pair<std::size_t, std::size_t> middle_third(std::size_t grid_size);

/// Runs the full figure grid: the sketched least-squares accuracy sweep over
/// eight embeddings and two instances, or the low-rank error sweep over six
/// embeddings and four psd instances.
std::vector<TrialSummary> universality_report(const FigureConfig& config);

struct UniversalityClassification {
  std::string instance;
  std::string embedding;
  double mard_gaussian = 0.0;  // mean |mean/prediction - 1| over the middle third
  double mard_haar = 0.0;
  std::string closer;
  bool matches_expected = false;
};

/// Classifies each accuracy-sweep curve against the Gaussian and orthonormal
/// predictions by mean absolute relative deviation over the middle third of
/// the grid.
std::vector<UniversalityClassification> classify_universality(
    const std::vector<TrialSummary>& rows);

}  // namespace sketchlab
