#pragma once

#include "sketchlab/experiments.hpp"
#include "sketchlab/theory.hpp"
#include "sketchlab/verify.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace sketchlab::cli {

/// Seed from SKETCHLAB_SEED when set, else the fallback.
std::uint64_t default_seed(std::uint64_t fallback = 42);

/// Runs a verification suite, printing one PASS/FAIL line per check.
/// Returns 0 when everything passes, 1 otherwise.
int cmd_verify(const std::string& suite, const verify::VerifyOptions& options, std::ostream& out);

struct FigureOptions {
  int id = 1;
  ScalePreset scale = ScalePreset::Desk;
  std::uint64_t seed = 42;
  int threads = 0;
  long trials = 0;  // 0 = preset
  std::string out_path;  // empty = stdout
  std::string format = "csv";
};

int cmd_figure(const FigureOptions& options, std::ostream& log);

struct PlanOptions {
  long q = 0;
  long budget = 0;
  long r = 0;
  double epsilon = 0.0;
  std::string method;  // "", "gn", "rsvd"
  Field field = Field::Real;
  Field objective_field = Field::Complex;  // worst-case split objective
};

int cmd_plan(const PlanOptions& options, std::ostream& out);

struct BoundsOptions {
  Field field = Field::Real;
  long n = 0, d = 0, r = 0, ell = 0, k = 0, q = -1;
  std::string spectrum_path;
};

int cmd_bounds(const BoundsOptions& options, std::ostream& out);

/// Plain-text spectrum file: one squared singular value per line, descending.
SpectrumTail read_spectrum_file(const std::string& path);

}  // namespace sketchlab::cli
