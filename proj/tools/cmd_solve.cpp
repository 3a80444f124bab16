#include <cstdio>
#include <memory>
#include <string>

#include "common.hpp"

#include "disthyp/game.hpp"
#include "disthyp/io.hpp"
#include "disthyp/report.hpp"

namespace disthyp::cli {

namespace {

struct SolveArgs {
  std::string instance_path;
  std::string instance2_path;  // pareto second instance
  std::string incidence_path;  // reserved: non-uniform P (not yet wired)
  std::string problem = "gei";
  std::string solver = "qaoa";
  double alpha = 0.5;
  int p = 3;
  int max_iters = 300;
  std::uint64_t seed = 0;
  int sdp_iters = 2000;
  double sdp_tol = 1e-6;
  double exact_eps = 1e-4;
  std::string out_dir = ".";
  std::string csv_path;  // default <out>/results.csv
  std::string warm_start_path;
  std::string checkpoint_out;
  std::string config_path;
};

}  // namespace

void register_solve(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "solve", "Run one solver on one instance; write JSON report + CSV row");
  auto a = std::make_shared<SolveArgs>();
  auto* inst =
      cmd->add_option("--instance", a->instance_path, "Instance file")
          ->required();
  auto* inst2 = cmd->add_option("--instance2", a->instance2_path,
                                "Second instance (pareto objective)");
  auto* prob = cmd->add_option(
      "--problem", a->problem, "gei | lev | total_variance | pareto");
  auto* solv =
      cmd->add_option("--solver", a->solver, "qaoa | sdp | exact | brute");
  auto* alpha = cmd->add_option("--alpha", a->alpha,
                                "Pareto mixing weight in [0, 1]");
  auto* p = cmd->add_option("--p", a->p, "Ansatz layers (qaoa)")
                ->check(CLI::PositiveNumber);
  auto* iters = cmd->add_option("--iters", a->max_iters,
                                "Training iteration budget (qaoa)");
  auto* seed = cmd->add_option("--seed", a->seed, "RNG seed");
  auto* sdp_iters =
      cmd->add_option("--sdp-iters", a->sdp_iters, "SDP iteration budget");
  auto* sdp_tol = cmd->add_option("--sdp-tol", a->sdp_tol, "SDP tolerance");
  auto* eps = cmd->add_option("--eps", a->exact_eps,
                              "Duality-gap target for the exact solver");
  auto* out = cmd->add_option("--out", a->out_dir, "Output directory")
                  ->capture_default_str();
  auto* csv = cmd->add_option("--csv", a->csv_path,
                              "Results CSV path (default <out>/results.csv)");
  auto* warm = cmd->add_option("--warm-start", a->warm_start_path,
                               "Checkpoint JSON to initialize qaoa angles");
  auto* ckpt = cmd->add_option("--checkpoint-out", a->checkpoint_out,
                               "Write trained angles as checkpoint JSON");
  cmd->add_option("--config", a->config_path,
                  "JSON config file (flags override it)");

  cmd->callback([=] {
    const ConfigFile cfg = load_config(a->config_path);
    fill_from_config(cfg, inst, "instance", a->instance_path);
    fill_from_config(cfg, inst2, "instance2", a->instance2_path);
    fill_from_config(cfg, prob, "problem", a->problem);
    fill_from_config(cfg, solv, "solver", a->solver);
    fill_from_config(cfg, alpha, "alpha", a->alpha);
    fill_from_config(cfg, p, "p", a->p);
    fill_from_config(cfg, iters, "iters", a->max_iters);
    fill_from_config(cfg, seed, "seed", a->seed);
    fill_from_config(cfg, sdp_iters, "sdp-iters", a->sdp_iters);
    fill_from_config(cfg, sdp_tol, "sdp-tol", a->sdp_tol);
    fill_from_config(cfg, eps, "eps", a->exact_eps);
    fill_from_config(cfg, out, "out", a->out_dir);
    fill_from_config(cfg, csv, "csv", a->csv_path);
    fill_from_config(cfg, warm, "warm-start", a->warm_start_path);
    fill_from_config(cfg, ckpt, "checkpoint-out", a->checkpoint_out);

    const Hypergraph h = load_instance(a->instance_path);
    std::optional<Hypergraph> h2;
    if (!a->instance2_path.empty())
      h2.emplace(load_instance(a->instance2_path));

    SolveRequest req;
    req.instance = path_stem(a->instance_path);
    req.problem = a->problem;
    req.solver = a->solver;
    req.alpha = a->problem == "pareto"
                    ? a->alpha
                    : std::numeric_limits<double>::quiet_NaN();
    req.p = a->p;
    req.max_iters = a->max_iters;
    req.seed = a->seed;
    req.sdp_iters = a->sdp_iters;
    req.sdp_tol = a->sdp_tol;
    req.exact_eps = a->exact_eps;

    if (!a->warm_start_path.empty() && a->solver != "qaoa")
      throw std::invalid_argument("--warm-start applies to --solver qaoa");
    if (!a->checkpoint_out.empty() && a->solver != "qaoa")
      throw std::invalid_argument("--checkpoint-out applies to --solver qaoa");

    Checkpoint warm_ckpt;
    if (!a->warm_start_path.empty()) {
      warm_ckpt = read_checkpoint(a->warm_start_path);
      if (warm_ckpt.params.p < req.p)
        warm_ckpt.params = warm_ckpt.params.zero_padded(req.p);
      else if (warm_ckpt.params.p > req.p)
        throw std::invalid_argument(
            "--warm-start checkpoint is deeper than --p");
      req.warm_start = &warm_ckpt.params;
    }
    AnsatzParams trained;
    if (!a->checkpoint_out.empty()) req.trained_params = &trained;
    std::optional<GameCertificate> certificate;
    req.certificate = &certificate;

    const SolveReport rep =
        run_solver(h, req, h2.has_value() ? &*h2 : nullptr);

    ensure_directory(a->out_dir);
    const std::string base = a->out_dir + "/" + rep.instance + "_" +
                             rep.problem + "_" + rep.solver;
    write_report(base + ".json", rep);
    if (certificate.has_value())
      write_certificate(base + ".certificate.json", *certificate);
    const std::string csv_path =
        a->csv_path.empty() ? a->out_dir + "/results.csv" : a->csv_path;
    append_csv(csv_path, csv_row(rep));

    if (!a->checkpoint_out.empty()) {
      Checkpoint out_ckpt;
      out_ckpt.params = trained;
      out_ckpt.seed = rep.seed;
      out_ckpt.iter = rep.iterations;
      out_ckpt.objective = rep.objective;
      write_checkpoint(a->checkpoint_out, out_ckpt);
    }

    std::printf("%s %s %s objective=%s\n", rep.instance.c_str(),
                rep.problem.c_str(), rep.solver.c_str(),
                format_g(rep.objective).c_str());
  });
}

}  // namespace disthyp::cli
