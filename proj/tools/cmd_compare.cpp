#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "common.hpp"

#include "disthyp/errors.hpp"
#include "disthyp/io.hpp"
#include "disthyp/svg.hpp"

namespace disthyp::cli {

namespace {

struct CompareArgs {
  std::string dir;
  std::string problem = "lev";
  std::string solvers = "qaoa,sdp,exact";
  int p = 3;
  int max_iters = 300;
  std::uint64_t seed = 0;
  double alpha = 0.5;
  std::string out_dir = ".";
  std::string config_path;
};

struct CompareRow {
  std::string name;
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  double qaoa = std::numeric_limits<double>::quiet_NaN();
  double sdp = std::numeric_limits<double>::quiet_NaN();
  double exact = std::numeric_limits<double>::quiet_NaN();
  std::string error;  // whole-row failure
};

bool wants(const std::string& csv_list, const std::string& solver) {
  std::size_t pos = 0;
  while (pos <= csv_list.size()) {
    const std::size_t comma = csv_list.find(',', pos);
    const std::string item =
        csv_list.substr(pos, comma == std::string::npos ? std::string::npos
                                                        : comma - pos);
    if (item == solver) return true;
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return false;
}

std::string opt_cell(double v) { return std::isfinite(v) ? format_g(v) : ""; }

}  // namespace

void register_compare(CLI::App& app) {
  auto* cmd = app.add_subcommand(
      "compare",
      "Batch-solve every instance in a directory and tabulate qaoa/sdp/exact");
  auto a = std::make_shared<CompareArgs>();
  auto* dir = cmd->add_option("--dir", a->dir, "Instance directory")
                  ->required();
  auto* prob = cmd->add_option(
      "--problem", a->problem, "gei | lev | total_variance | pareto");
  auto* solvers = cmd->add_option("--solvers", a->solvers,
                                  "Comma list out of qaoa,sdp,exact")
                      ->capture_default_str();
  auto* p = cmd->add_option("--p", a->p, "Ansatz layers (qaoa)");
  auto* iters = cmd->add_option("--iters", a->max_iters,
                                "Training iteration budget (qaoa)");
  auto* seed = cmd->add_option("--seed", a->seed, "Base RNG seed");
  auto* alpha = cmd->add_option("--alpha", a->alpha,
                                "Pareto mixing weight (pareto only)");
  auto* out = cmd->add_option("--out", a->out_dir, "Output directory")
                  ->capture_default_str();
  cmd->add_option("--config", a->config_path,
                  "JSON config file (flags override it)");

  cmd->callback([=] {
    const ConfigFile cfg = load_config(a->config_path);
    fill_from_config(cfg, dir, "dir", a->dir);
    fill_from_config(cfg, prob, "problem", a->problem);
    fill_from_config(cfg, solvers, "solvers", a->solvers);
    fill_from_config(cfg, p, "p", a->p);
    fill_from_config(cfg, iters, "iters", a->max_iters);
    fill_from_config(cfg, seed, "seed", a->seed);
    fill_from_config(cfg, alpha, "alpha", a->alpha);
    fill_from_config(cfg, out, "out", a->out_dir);

    namespace fs = std::filesystem;
    if (!fs::is_directory(a->dir))
      throw IoError("not a directory: " + a->dir);
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(a->dir)) {
      if (!entry.is_regular_file()) continue;
      const std::string name = entry.path().filename().string();
      const std::string ext = entry.path().extension().string();
      if (name.size() > 16 &&
          name.rfind(".provenance.json") == name.size() - 16)
        continue;  // generator sidecar, not an instance
      if (ext == ".hmetis" || ext == ".json" || ext == ".hgr")
        paths.push_back(entry.path().string());
    }
    std::sort(paths.begin(), paths.end());
    if (paths.empty())
      throw std::invalid_argument("no instances found in " + a->dir);

    const int n_jobs = static_cast<int>(paths.size());
    std::vector<CompareRow> rows(paths.size());
    const bool minimize = a->problem == "gei";
    // Seeds are assigned by sorted position, so results do not depend on
    // the worker count or completion order.
    parallel_for_jobs(n_jobs, [&](int i) {
      CompareRow& row = rows[static_cast<std::size_t>(i)];
      row.name = path_stem(paths[static_cast<std::size_t>(i)]);
      row.seed = a->seed + static_cast<std::uint64_t>(i);
      std::optional<Hypergraph> loaded;
      try {
        loaded.emplace(load_instance(paths[static_cast<std::size_t>(i)]));
      } catch (const std::exception& e) {
        row.error = e.what();
        return;
      }
      const Hypergraph& h = *loaded;
      row.n = h.n_vertices();
      row.m = h.n_edges();
      for (const char* solver : {"qaoa", "sdp", "exact"}) {
        if (!wants(a->solvers, solver)) continue;
        SolveRequest req;
        req.instance = row.name;
        req.problem = a->problem;
        req.solver = solver;
        req.alpha = a->problem == "pareto"
                        ? a->alpha
                        : std::numeric_limits<double>::quiet_NaN();
        req.p = a->p;
        req.max_iters = a->max_iters;
        req.seed = row.seed;
        try {
          const SolveReport rep = run_solver(h, req);
          if (std::string(solver) == "qaoa")
            row.qaoa = rep.objective;
          else if (std::string(solver) == "sdp")
            row.sdp = rep.objective;
          else
            row.exact = rep.objective;
        } catch (const std::exception& e) {
          std::fprintf(stderr, "warning: %s %s failed: %s\n",
                       row.name.c_str(), solver, e.what());
        }
      }
    });

    int readable = 0;
    for (const auto& row : rows) {
      if (row.error.empty()) {
        ++readable;
      } else {
        std::fprintf(stderr, "warning: skipping %s: %s\n", row.name.c_str(),
                     row.error.c_str());
      }
    }
    if (readable == 0) throw IoError("all instances failed to load");

    ensure_directory(a->out_dir);
    const std::string csv_path = a->out_dir + "/compare.csv";
    std::ofstream csv_out(csv_path, std::ios::binary);
    if (!csv_out) throw IoError("cannot open for writing: " + csv_path);
    // Ratios follow the reporting convention: achieved/exact for
    // maximization objectives; blank for minimization (gei), whose optimum
    // can be 0, so raw values are the comparison there.
    csv_out << "instance,n,m,problem,p,qaoa,sdp,exact,ratio_qaoa,ratio_sdp,"
               "seed\n";
    SvgChart chart;
    chart.title = "qaoa vs sdp rounding (" + a->problem + ")";
    chart.x_label = "sdp rounded objective";
    chart.y_label = "qaoa objective";
    chart.diagonal = true;
    SvgSeries pts;
    pts.label = "instances";
    int qaoa_wins = 0;
    int decided = 0;
    for (const auto& row : rows) {
      if (!row.error.empty()) continue;
      std::string ratio_qaoa;
      std::string ratio_sdp;
      if (!minimize && std::isfinite(row.exact) && row.exact != 0.0) {
        if (std::isfinite(row.qaoa)) ratio_qaoa = format_g(row.qaoa / row.exact);
        if (std::isfinite(row.sdp)) ratio_sdp = format_g(row.sdp / row.exact);
      }
      csv_out << row.name << ',' << row.n << ',' << row.m << ',' << a->problem
              << ',' << a->p << ',' << opt_cell(row.qaoa) << ','
              << opt_cell(row.sdp) << ',' << opt_cell(row.exact) << ','
              << ratio_qaoa << ',' << ratio_sdp << ',' << row.seed << '\n';
      if (std::isfinite(row.qaoa) && std::isfinite(row.sdp)) {
        pts.points.emplace_back(row.sdp, row.qaoa);
        ++decided;
        const bool win = minimize ? row.qaoa < row.sdp : row.qaoa > row.sdp;
        if (win) ++qaoa_wins;
      }
    }
    if (!csv_out) throw IoError("write failed: " + csv_path);
    csv_out.close();

    chart.series.push_back(std::move(pts));
    write_svg(a->out_dir + "/compare.svg", chart);

    std::printf("instances=%d qaoa_beats_sdp=%d/%d\n", readable, qaoa_wins,
                decided);
    std::printf("%s\n%s\n", csv_path.c_str(),
                (a->out_dir + "/compare.svg").c_str());
  });
}

}  // namespace disthyp::cli
