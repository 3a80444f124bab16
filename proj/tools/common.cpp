#include "common.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

#include "disthyp/brute.hpp"
#include "disthyp/distribution.hpp"
#include "disthyp/errors.hpp"
#include "disthyp/game.hpp"
#include "disthyp/io.hpp"
#include "disthyp/sdp.hpp"
#include "disthyp/train.hpp"

namespace disthyp::cli {

namespace {

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  const auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double>(d).count();
}

SolveReport run_qaoa(const QuadraticFamily& fam, const SolveRequest& req) {
  const int n = fam.dimension();
  const PairList pairs = family_pairs(fam);
  TrainConfig cfg;
  cfg.p = req.p;
  cfg.max_iters = req.max_iters;
  cfg.seed = req.seed;
  const TrainResult res =
      req.warm_start != nullptr
          ? train(fam, pairs, n, cfg, *req.warm_start)
          : train(fam, pairs, n, cfg);
  SolveReport rep;
  rep.p = req.p;
  rep.q = res.q;
  rep.iterations = res.iterations;
  const Statevector psi = run_ansatz(res.params, n, pairs);
  rep.support = measurement_support(psi, req.support_limit);
  if (req.trained_params != nullptr) *req.trained_params = res.params;
  return rep;
}

SolveReport run_sdp(const QuadraticFamily& fam, const SolveRequest& req) {
  SdpOptions opts;
  opts.tol = req.sdp_tol;
  opts.max_iters = req.sdp_iters;
  const SdpResult res = solve_sdp(fam, opts);
  SolveReport rep;
  rep.q = rounding_autocorrelation(res.a);
  rep.bound = res.relax_bound;
  rep.iterations = res.iterations;
  return rep;
}

SolveReport run_exhaustive(const QuadraticFamily& fam,
                           const SolveRequest& req) {
  // Sum-aggregated objectives are linear in Q, so the optimum over
  // distributions is attained at a point mass found by exhaustive search
  // over sign classes.
  Eigen::MatrixXd total =
      Eigen::MatrixXd::Zero(fam.dimension(), fam.dimension());
  for (const auto& m : fam.members()) total += m;
  const BruteResult best = fam.direction() == Direction::Maximize
                               ? brute_force_max_quadratic(total)
                               : brute_force_min_quadratic(total);
  SolveReport rep;
  const SpinDistribution point =
      SpinDistribution::point_mass(fam.dimension(), best.arg);
  rep.q = autocorrelation_of(point);
  rep.support = point.support();
  rep.bound = best.value;
  rep.gap = 0.0;
  return rep;
}

SolveReport run_game(const QuadraticFamily& fam, const SolveRequest& req) {
  const GameCertificate cert = exact_minimax(fam, req.exact_eps);
  if (req.certificate != nullptr) *req.certificate = cert;
  SolveReport rep;
  rep.q = autocorrelation_of(cert.primal);
  rep.bound = cert.dual_value;
  rep.gap = cert.gap;
  rep.iterations = cert.rounds;
  const auto& sup = cert.primal.support();
  rep.support.assign(
      sup.begin(),
      sup.size() > static_cast<std::size_t>(req.support_limit)
          ? sup.begin() + req.support_limit
          : sup.end());
  return rep;
}

}  // namespace

ConfigFile load_config(const std::string& path) {
  ConfigFile cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config: " + path);
  try {
    in >> cfg.doc;
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(path, 0, err.what());
  }
  if (!cfg.doc.is_object())
    throw ParseError(path, 0, "config must be a JSON object");
  cfg.loaded = true;
  return cfg;
}

QuadraticFamily build_family(const Hypergraph& h, const std::string& problem,
                             double alpha, const Hypergraph* h2) {
  const StochasticIncidence inc = StochasticIncidence::uniform(h);
  if (problem == "gei") return gei_family(inc);
  if (problem == "lev") return lev_family(inc);
  if (problem == "total_variance") return total_variance_family(inc);
  if (problem == "pareto") {
    const StochasticIncidence inc2 =
        h2 != nullptr ? StochasticIncidence::uniform(*h2) : inc;
    if (!std::isfinite(alpha))
      throw std::invalid_argument("pareto requires --alpha");
    return pareto_family(make_pareto_spec(inc, inc2), alpha);
  }
  throw std::invalid_argument(
      "unknown problem '" + problem +
      "' (expected gei, lev, total_variance, or pareto)");
}

PairList family_pairs(const QuadraticFamily& fam) {
  const int n = fam.dimension();
  Eigen::MatrixXd touched = Eigen::MatrixXd::Zero(n, n);
  for (const auto& m : fam.members()) touched += m.cwiseAbs();
  PairList pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (touched(u, v) != 0.0 || touched(v, u) != 0.0)
        pairs.emplace_back(u, v);
  return pairs;
}

SolveReport run_family(const QuadraticFamily& fam, const SolveRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  SolveReport rep;
  if (req.solver == "qaoa") {
    rep = run_qaoa(fam, req);
  } else if (req.solver == "sdp") {
    rep = run_sdp(fam, req);
  } else if (req.solver == "exact") {
    if (fam.mode() == AggregateMode::Minimax ||
        fam.mode() == AggregateMode::Maximin)
      rep = run_game(fam, req);
    else
      rep = run_exhaustive(fam, req);
  } else if (req.solver == "brute") {
    if (fam.mode() != AggregateMode::Sum && fam.mode() != AggregateMode::Pareto)
      throw std::invalid_argument(
          "brute supports sum-aggregated problems only "
          "(total_variance, pareto); use exact for " +
          req.problem);
    rep = run_exhaustive(fam, req);
  } else {
    throw std::invalid_argument("unknown solver '" + req.solver +
                                "' (expected qaoa, sdp, exact, or brute)");
  }
  // One evaluation defines objective and scores, so every report satisfies
  // evaluate(family, stored Q) == stored objective exactly.
  const Evaluation ev = evaluate(fam, rep.q);
  rep.objective = ev.value;
  rep.scores = ev.scores;
  rep.instance = req.instance;
  rep.problem = req.problem;
  rep.solver = req.solver;
  rep.n = fam.dimension();
  rep.alpha = req.alpha;
  rep.seed = req.seed;
  rep.seconds = elapsed_seconds(start);
  if (req.solver != "qaoa") rep.p = 0;
  return rep;
}

SolveReport run_solver(const Hypergraph& h, const SolveRequest& req,
                       const Hypergraph* h2) {
  const QuadraticFamily fam = build_family(h, req.problem, req.alpha, h2);
  SolveReport rep = run_family(fam, req);
  rep.digest = instance_digest(h);
  rep.m = h.n_edges();
  return rep;
}

std::string csv_header() {
  return "instance,n,m,problem,solver,p,alpha,objective,score_min,score_max,"
         "iters,seconds,seed";
}

std::string format_g(double v, int precision) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

std::string csv_row(const SolveReport& r) {
  std::string line = r.instance;
  line += ',' + std::to_string(r.n);
  line += ',' + std::to_string(r.m);
  line += ',' + r.problem;
  line += ',' + r.solver;
  line += ',' + std::to_string(r.p);
  line += ',';
  if (std::isfinite(r.alpha)) line += format_g(r.alpha, 6);
  line += ',' + format_g(r.objective);
  line += ',' + format_g(r.scores.size() ? r.scores.minCoeff() : 0.0);
  line += ',' + format_g(r.scores.size() ? r.scores.maxCoeff() : 0.0);
  line += ',' + std::to_string(r.iterations);
  char sec[32];
  std::snprintf(sec, sizeof(sec), "%.3f", timing_enabled() ? r.seconds : 0.0);
  line += ',';
  line += sec;
  line += ',' + std::to_string(r.seed);
  return line;
}

void append_csv(const std::string& path, const std::string& row) {
  bool need_header = true;
  {
    std::ifstream probe(path, std::ios::binary);
    if (probe && probe.peek() != std::ifstream::traits_type::eof())
      need_header = false;
  }
  std::ofstream out(path, std::ios::binary | std::ios::app);
  if (!out) throw IoError("cannot open for writing: " + path);
  if (need_header) out << csv_header() << '\n';
  out << row << '\n';
  if (!out) throw IoError("write failed: " + path);
}

bool timing_enabled() {
  const char* v = std::getenv("DISTHYP_TIMING");
  return v != nullptr && std::string(v) == "1";
}

int worker_threads(int n_jobs) {
  int limit = static_cast<int>(std::thread::hardware_concurrency());
  if (limit <= 0) limit = 1;
  if (const char* v = std::getenv("DISTHYP_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(v, &end, 10);
    if (end != v && parsed > 0) limit = static_cast<int>(parsed);
  }
  return std::max(1, std::min(limit, n_jobs));
}

void parallel_for_jobs(int n_jobs, const std::function<void(int)>& f) {
  const int workers = worker_threads(n_jobs);
  if (workers <= 1) {
    for (int i = 0; i < n_jobs; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    threads.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n_jobs; i = next.fetch_add(1)) f(i);
    });
  for (auto& t : threads) t.join();
}

std::string path_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

Hypergraph load_instance(const std::string& path) {
  return read_hypergraph(path);
}

void ensure_directory(const std::string& path) {
  if (path.empty() || path == ".") return;
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) throw IoError("cannot create directory " + path + ": " + ec.message());
}

}  // namespace disthyp::cli
