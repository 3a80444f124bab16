#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "disthyp/hypergraph.hpp"
#include "disthyp/objective.hpp"
#include "disthyp/report.hpp"
#include "disthyp/statevector.hpp"

namespace disthyp::cli {

// ---- config file (JSON), precedence: CLI flags > config > defaults ----

struct ConfigFile {
  nlohmann::json doc;
  bool loaded = false;
};

ConfigFile load_config(const std::string& path);

// Overwrites `target` from the config document unless the flag was given on
// the command line. Keys are the long option names without the dashes.
template <typename T>
void fill_from_config(const ConfigFile& cfg, const CLI::Option* opt,
                      const std::string& key, T& target) {
  if (!cfg.loaded) return;
  if (opt != nullptr && opt->count() > 0) return;
  if (cfg.doc.contains(key)) target = cfg.doc.at(key).get<T>();
}

// ---- solver dispatch ----

struct SolveRequest {
  std::string instance;  // display name (path stem)
  std::string problem;   // gei | lev | total_variance | pareto
  std::string solver;    // qaoa | sdp | exact | brute
  double alpha = std::numeric_limits<double>::quiet_NaN();
  int p = 3;
  int max_iters = 300;
  std::uint64_t seed = 0;
  int sdp_iters = 2000;
  double sdp_tol = 1e-6;
  double exact_eps = 1e-4;
  const AnsatzParams* warm_start = nullptr;  // qaoa only; must match p
  int support_limit = 64;                    // report truncation
  AnsatzParams* trained_params = nullptr;    // out: best angles (qaoa only)
  std::optional<GameCertificate>* certificate = nullptr;  // out: exact only
};

// Builds the family for a problem name; `h2` supplies the second instance
// for pareto (falls back to `h` when null).
QuadraticFamily build_family(const Hypergraph& h, const std::string& problem,
                             double alpha, const Hypergraph* h2 = nullptr);

// All pairs carrying an off-diagonal nonzero in any member; the cost-layer
// interaction graph of the family.
PairList family_pairs(const QuadraticFamily& fam);

// Runs req.solver on a prebuilt family. The returned report re-evaluates the
// solver's Q against the family, so stored objective/scores/Q are mutually
// consistent. May throw ResourceError / std::invalid_argument.
SolveReport run_family(const QuadraticFamily& fam, const SolveRequest& req);

// Convenience: build_family + run_family, filling instance metadata from h.
SolveReport run_solver(const Hypergraph& h, const SolveRequest& req,
                       const Hypergraph* h2 = nullptr);

// ---- results CSV (fixed schema) ----

// instance,n,m,problem,solver,p,alpha,objective,score_min,score_max,iters,
// seconds,seed
std::string csv_header();
std::string csv_row(const SolveReport& r);
// Appends a data row, writing the header first when the file is new/empty.
void append_csv(const std::string& path, const std::string& row);

std::string format_g(double v, int precision = 12);

// ---- environment / misc ----

bool timing_enabled();           // DISTHYP_TIMING=1 puts real times in CSV
int worker_threads(int n_jobs);  // DISTHYP_THREADS caps batch parallelism
// Runs f(0..n_jobs-1) on worker_threads(n_jobs) threads; f must only touch
// its own slot of any shared output.
void parallel_for_jobs(int n_jobs, const std::function<void(int)>& f);

std::string path_stem(const std::string& path);
Hypergraph load_instance(const std::string& path);
void ensure_directory(const std::string& path);

// ---- subcommand registration ----

void register_gen(CLI::App& app);
void register_solve(CLI::App& app);
void register_pareto(CLI::App& app);
void register_sweep(CLI::App& app);
void register_compare(CLI::App& app);

}  // namespace disthyp::cli
