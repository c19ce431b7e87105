#include "sketchlab/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

sketchlab::Field parse_field(const std::string& name) {
  if (name == "real") return sketchlab::Field::Real;
  if (name == "complex") return sketchlab::Field::Complex;
  throw CLI::ValidationError("field must be 'real' or 'complex'");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace sketchlab;

  CLI::App app{"sketchlab: randomized sketching algorithms, their sharp error laws, and the "
               "Monte Carlo experiments that verify them"};
  app.require_subcommand(1);

  const std::uint64_t seed_default = cli::default_seed();

  // verify
  std::string suite = "all";
  verify::VerifyOptions verify_opt;
  verify_opt.seed = seed_default;
  auto* verify_cmd = app.add_subcommand("verify", "run statistical and algebraic check suites");
  verify_cmd->add_option("--suite", suite, "one of: " + [] {
                           std::string names;
                           for (const auto& n : sketchlab::verify::suite_names()) {
                             names += names.empty() ? n : ", " + n;
                           }
                           return names;
                         }());
  verify_cmd->add_option("--seed", verify_opt.seed, "master seed (env SKETCHLAB_SEED overrides)");
  verify_cmd->add_option("--trials", verify_opt.trials_override, "override stock trial counts");
  verify_cmd->add_option("--threads", verify_opt.threads, "worker threads (0 = hardware)");

  // figure
  cli::FigureOptions fig_opt;
  fig_opt.seed = seed_default;
  std::string scale = "desk";
  auto* figure_cmd = app.add_subcommand("figure", "reproduce an accuracy or error sweep");
  figure_cmd->add_option("--id", fig_opt.id, "figure id: 1 (least squares) or 2 (low rank)")
      ->required();
  figure_cmd->add_option("--scale", scale, "'paper' (n=1000) or 'desk' (n=300)");
  figure_cmd->add_option("--seed", fig_opt.seed, "master seed");
  figure_cmd->add_option("--trials", fig_opt.trials, "override preset trial count");
  figure_cmd->add_option("--threads", fig_opt.threads, "worker threads (0 = hardware)");
  figure_cmd->add_option("--out", fig_opt.out_path, "output path (default: stdout)");
  figure_cmd->add_option("--format", fig_opt.format, "csv (default), json, or svg");

  // plan
  cli::PlanOptions plan_opt;
  std::string plan_field = "real";
  std::string objective = "complex";
  auto* plan_cmd = app.add_subcommand("plan", "sketch dimensioning and budget planning");
  plan_cmd->add_option("--q", plan_opt.q, "target comparison rank");
  plan_cmd->add_option("--budget", plan_opt.budget, "matvec budget t = k + ell to split");
  plan_cmd->add_option("--r", plan_opt.r, "rank for least-squares dimensioning");
  plan_cmd->add_option("--epsilon", plan_opt.epsilon, "accuracy target");
  plan_cmd->add_option("--method", plan_opt.method, "budget method: gn or rsvd (default both)");
  plan_cmd->add_option("--field", plan_field, "real (default) or complex");
  plan_cmd->add_option("--objective", objective,
                       "split objective: complex (default) or real");

  // bounds
  cli::BoundsOptions bounds_opt;
  std::string bounds_field = "real";
  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the closed-form error bounds");
  bounds_cmd->add_option("--field", bounds_field, "real (default) or complex");
  bounds_cmd->add_option("--n", bounds_opt.n, "ambient row dimension");
  bounds_cmd->add_option("--d", bounds_opt.d, "ambient column dimension");
  bounds_cmd->add_option("--r", bounds_opt.r, "target rank");
  bounds_cmd->add_option("--ell", bounds_opt.ell, "right sketch dimension");
  bounds_cmd->add_option("--k", bounds_opt.k, "left sketch dimension");
  bounds_cmd->add_option("--q", bounds_opt.q, "comparison rank");
  bounds_cmd->add_option("--spectrum", bounds_opt.spectrum_path,
                         "file of squared singular values, one per line, descending");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify_cmd) {
      return cli::cmd_verify(suite, verify_opt, std::cout);
    }
    if (*figure_cmd) {
      fig_opt.scale = scale == "paper" ? ScalePreset::Paper : ScalePreset::Desk;
      if (scale != "paper" && scale != "desk") {
        std::cerr << "scale must be 'paper' or 'desk'\n";
        return 2;
      }
      return cli::cmd_figure(fig_opt, std::cout);
    }
    if (*plan_cmd) {
      plan_opt.field = parse_field(plan_field);
      plan_opt.objective_field = parse_field(objective);
      return cli::cmd_plan(plan_opt, std::cout);
    }
    if (*bounds_cmd) {
      bounds_opt.field = parse_field(bounds_field);
      return cli::cmd_bounds(bounds_opt, std::cout);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::UsageError || e.code() == ErrorCode::InvalidSpec ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
