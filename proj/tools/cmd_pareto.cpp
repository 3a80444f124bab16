#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "common.hpp"

#include "disthyp/errors.hpp"
#include "disthyp/quadratics.hpp"
#include "disthyp/svg.hpp"

namespace disthyp::cli {

namespace {

struct ParetoArgs {
  std::string instance_path;
  std::string instance2_path;  // empty: reuse the first instance
  std::string solvers = "qaoa,sdp";
  double alpha_start = 0.0;
  double alpha_stop = 1.0;
  int alpha_count = 11;
  double window_start = 0.0;  // alphas plotted in the SVG
  double window_stop = 1.0;
  int p = 3;
  int max_iters = 300;
  std::uint64_t seed = 0;
  int sdp_iters = 2000;
  bool warm_across = false;  // chain qaoa angles along the alpha grid
  std::string out_dir = ".";
  std::string config_path;
};

std::vector<std::string> split_csv_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

void register_pareto(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "pareto",
      "Sweep the two-instance combined objective over an alpha grid");
  auto a = std::make_shared<ParetoArgs>();
  auto* inst = cmd->add_option("--instance", a->instance_path,
                               "Instance for the imbalance component")
                   ->required();
  auto* inst2 = cmd->add_option("--instance2", a->instance2_path,
                                "Instance for the variance component "
                                "(default: same as --instance)");
  auto* solvers = cmd->add_option("--solvers", a->solvers,
                                  "Comma list of qaoa,sdp,exact,brute")
                      ->capture_default_str();
  auto* astart = cmd->add_option("--alpha-start", a->alpha_start,
                                 "First alpha")->capture_default_str();
  auto* astop = cmd->add_option("--alpha-stop", a->alpha_stop, "Last alpha")
                    ->capture_default_str();
  auto* acount = cmd->add_option("--alpha-count", a->alpha_count,
                                 "Grid size")->check(CLI::PositiveNumber);
  auto* wstart = cmd->add_option("--window-start", a->window_start,
                                 "Smallest alpha plotted in the SVG");
  auto* wstop = cmd->add_option("--window-stop", a->window_stop,
                                "Largest alpha plotted in the SVG");
  auto* p = cmd->add_option("--p", a->p, "Ansatz layers (qaoa)");
  auto* iters = cmd->add_option("--iters", a->max_iters,
                                "Training iteration budget (qaoa)");
  auto* seed = cmd->add_option("--seed", a->seed, "RNG seed");
  auto* sdp_iters =
      cmd->add_option("--sdp-iters", a->sdp_iters, "SDP iteration budget");
  auto* warm = cmd->add_flag("--warm-across", a->warm_across,
                             "Warm-start each alpha from the previous one");
  auto* out = cmd->add_option("--out", a->out_dir, "Output directory")
                  ->capture_default_str();
  cmd->add_option("--config", a->config_path,
                  "JSON config file (flags override it)");

  cmd->callback([=] {
    const ConfigFile cfg = load_config(a->config_path);
    fill_from_config(cfg, inst, "instance", a->instance_path);
    fill_from_config(cfg, inst2, "instance2", a->instance2_path);
    fill_from_config(cfg, solvers, "solvers", a->solvers);
    fill_from_config(cfg, astart, "alpha-start", a->alpha_start);
    fill_from_config(cfg, astop, "alpha-stop", a->alpha_stop);
    fill_from_config(cfg, acount, "alpha-count", a->alpha_count);
    fill_from_config(cfg, wstart, "window-start", a->window_start);
    fill_from_config(cfg, wstop, "window-stop", a->window_stop);
    fill_from_config(cfg, p, "p", a->p);
    fill_from_config(cfg, iters, "iters", a->max_iters);
    fill_from_config(cfg, seed, "seed", a->seed);
    fill_from_config(cfg, sdp_iters, "sdp-iters", a->sdp_iters);
    fill_from_config(cfg, warm, "warm-across", a->warm_across);
    fill_from_config(cfg, out, "out", a->out_dir);

    if (a->alpha_count < 1)
      throw std::invalid_argument("--alpha-count must be >= 1");
    const std::vector<std::string> solver_list = split_csv_list(a->solvers);
    if (solver_list.empty())
      throw std::invalid_argument("--solvers must name at least one solver");

    const Hypergraph h1 = load_instance(a->instance_path);
    const bool two = !a->instance2_path.empty();
    const Hypergraph h2 = two ? load_instance(a->instance2_path) : h1;
    const std::string stem1 = path_stem(a->instance_path);
    const std::string stem2 =
        two ? path_stem(a->instance2_path) : stem1;

    const StochasticIncidence inc1 = StochasticIncidence::uniform(h1);
    const StochasticIncidence inc2 = StochasticIncidence::uniform(h2);
    const ParetoSpec spec = make_pareto_spec(inc1, inc2);

    std::vector<double> alphas;
    for (int i = 0; i < a->alpha_count; ++i) {
      const double t = a->alpha_count == 1
                           ? 0.0
                           : static_cast<double>(i) / (a->alpha_count - 1);
      alphas.push_back(a->alpha_start +
                       t * (a->alpha_stop - a->alpha_start));
    }

    ensure_directory(a->out_dir);
    const std::string csv_path = a->out_dir + "/pareto.csv";
    std::ofstream csv_out(csv_path, std::ios::binary);
    if (!csv_out) throw IoError("cannot open for writing: " + csv_path);
    csv_out << "instance,instance2,alpha,solver,imbalance1,variance2,"
               "objective,seed\n";

    SvgChart chart;
    chart.title = "Pareto front: " + stem1 + " / " + stem2;
    chart.x_label = "expected imbalance on " + stem1;
    chart.y_label = "expected variance on " + stem2;

    for (const auto& solver : solver_list) {
      SvgSeries series;
      series.label = solver;
      AnsatzParams carried;  // previous alpha's angles for --warm-across
      bool have_carried = false;
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        const double alpha = alphas[i];
        const QuadraticFamily fam = pareto_family(spec, alpha);
        SolveRequest req;
        req.instance = stem1;
        req.problem = "pareto";
        req.solver = solver;
        req.alpha = alpha;
        req.p = a->p;
        req.max_iters = a->max_iters;
        req.seed = a->seed + i;
        req.sdp_iters = a->sdp_iters;
        AnsatzParams trained;
        if (solver == "qaoa") {
          req.trained_params = &trained;
          if (a->warm_across && have_carried) req.warm_start = &carried;
        }
        const SolveReport rep = run_family(fam, req);
        if (solver == "qaoa") {
          carried = trained;
          have_carried = true;
        }
        const double m1 = frobenius(spec.imbalance1, rep.q);
        const double v2 = frobenius(spec.variance2, rep.q);
        csv_out << stem1 << ',' << stem2 << ',' << format_g(alpha, 6) << ','
                << solver << ',' << format_g(m1) << ',' << format_g(v2)
                << ',' << format_g(rep.objective) << ',' << rep.seed << '\n';
        if (alpha >= a->window_start - 1e-12 &&
            alpha <= a->window_stop + 1e-12)
          series.points.emplace_back(m1, v2);
      }
      chart.series.push_back(std::move(series));
    }
    if (!csv_out) throw IoError("write failed: " + csv_path);
    csv_out.close();

    write_svg(a->out_dir + "/pareto.svg", chart);
    std::printf("%s\n%s\n", csv_path.c_str(),
                (a->out_dir + "/pareto.svg").c_str());
  });
}

}  // namespace disthyp::cli
