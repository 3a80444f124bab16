#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "common.hpp"

#include "disthyp/errors.hpp"
#include "disthyp/svg.hpp"

namespace disthyp::cli {

namespace {

struct SweepArgs {
  std::string instance_path;
  std::string problem = "gei";
  int max_p = 3;
  int max_iters = 300;
  std::uint64_t seed = 0;
  double alpha = 0.5;
  bool warm = false;  // zero-pad p-1 angles as the p initializer
  bool no_refs = false;
  std::string out_dir = ".";
  std::string config_path;
};

}  // namespace

void register_sweep(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "sweep-layers",
      "Train the ansatz at every depth 1..P with SDP/exact reference lines");
  auto a = std::make_shared<SweepArgs>();
  auto* inst = cmd->add_option("--instance", a->instance_path,
                               "Instance file")->required();
  auto* prob = cmd->add_option(
      "--problem", a->problem, "gei | lev | total_variance | pareto");
  auto* maxp = cmd->add_option("--max-p", a->max_p, "Deepest ansatz (>= 1)")
                   ->check(CLI::PositiveNumber);
  auto* iters = cmd->add_option("--iters", a->max_iters,
                                "Training iteration budget per depth");
  auto* seed = cmd->add_option("--seed", a->seed, "RNG seed");
  auto* alpha = cmd->add_option("--alpha", a->alpha,
                                "Pareto mixing weight (pareto only)");
  auto* warm = cmd->add_flag(
      "--warm", a->warm,
      "Initialize depth p by zero-padding the trained depth p-1 angles");
  auto* norefs = cmd->add_flag("--no-refs", a->no_refs,
                               "Skip the SDP/exact reference solves");
  auto* out = cmd->add_option("--out", a->out_dir, "Output directory")
                  ->capture_default_str();
  cmd->add_option("--config", a->config_path,
                  "JSON config file (flags override it)");

  cmd->callback([=] {
    const ConfigFile cfg = load_config(a->config_path);
    fill_from_config(cfg, inst, "instance", a->instance_path);
    fill_from_config(cfg, prob, "problem", a->problem);
    fill_from_config(cfg, maxp, "max-p", a->max_p);
    fill_from_config(cfg, iters, "iters", a->max_iters);
    fill_from_config(cfg, seed, "seed", a->seed);
    fill_from_config(cfg, alpha, "alpha", a->alpha);
    fill_from_config(cfg, warm, "warm", a->warm);
    fill_from_config(cfg, norefs, "no-refs", a->no_refs);
    fill_from_config(cfg, out, "out", a->out_dir);

    if (a->max_p < 1) throw std::invalid_argument("--max-p must be >= 1");

    const Hypergraph h = load_instance(a->instance_path);
    const std::string stem = path_stem(a->instance_path);
    const double alpha_value = a->problem == "pareto"
                                   ? a->alpha
                                   : std::numeric_limits<double>::quiet_NaN();

    ensure_directory(a->out_dir);
    const std::string csv_path = a->out_dir + "/sweep.csv";
    std::ofstream csv_out(csv_path, std::ios::binary);
    if (!csv_out) throw IoError("cannot open for writing: " + csv_path);
    csv_out << csv_header() << '\n';

    SvgSeries qaoa_series;
    qaoa_series.label = "qaoa";
    qaoa_series.connect = true;

    AnsatzParams carried;
    bool have_carried = false;
    for (int depth = 1; depth <= a->max_p; ++depth) {
      SolveRequest req;
      req.instance = stem;
      req.problem = a->problem;
      req.solver = "qaoa";
      req.alpha = alpha_value;
      req.p = depth;
      req.max_iters = a->max_iters;
      req.seed = a->seed;
      AnsatzParams trained;
      req.trained_params = &trained;
      AnsatzParams padded;
      if (a->warm && have_carried) {
        padded = carried.zero_padded(depth);
        req.warm_start = &padded;
      }
      const SolveReport rep = run_solver(h, req);
      carried = trained;
      have_carried = true;
      csv_out << csv_row(rep) << '\n';
      qaoa_series.points.emplace_back(depth, rep.objective);
      std::printf("p=%d objective=%s\n", depth,
                  format_g(rep.objective).c_str());
    }

    SvgChart chart;
    chart.title = "Ansatz depth sweep: " + stem + " (" + a->problem + ")";
    chart.x_label = "layers p";
    chart.y_label = "objective";
    chart.series.push_back(std::move(qaoa_series));

    if (!a->no_refs) {
      for (const std::string ref : {std::string("sdp"), std::string("exact")}) {
        SolveRequest req;
        req.instance = stem;
        req.problem = a->problem;
        req.solver = ref;
        req.alpha = alpha_value;
        req.seed = a->seed;
        try {
          const SolveReport rep = run_solver(h, req);
          csv_out << csv_row(rep) << '\n';
          SvgSeries line;
          line.label = ref;
          line.connect = true;
          line.dashed = true;
          line.points.emplace_back(1.0, rep.objective);
          line.points.emplace_back(static_cast<double>(a->max_p),
                                   rep.objective);
          chart.series.push_back(std::move(line));
          std::printf("%s objective=%s\n", ref.c_str(),
                      format_g(rep.objective).c_str());
        } catch (const ResourceError& e) {
          std::fprintf(stderr, "note: skipping %s reference: %s\n",
                       ref.c_str(), e.what());
        }
      }
    }
    if (!csv_out) throw IoError("write failed: " + csv_path);
    csv_out.close();

    write_svg(a->out_dir + "/sweep.svg", chart);
    std::printf("%s\n%s\n", csv_path.c_str(),
                (a->out_dir + "/sweep.svg").c_str());
  });
}

}  // namespace disthyp::cli
