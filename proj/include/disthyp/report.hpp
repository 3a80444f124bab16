#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "disthyp/game.hpp"
#include "disthyp/hypergraph.hpp"
#include "disthyp/statevector.hpp"

namespace disthyp {

// Everything a solver run reports; serialized as JSON next to the CSV rows.
struct SolveReport {
  std::string instance;  // name or path stem
  std::string digest;    // content hash of the instance
  std::string problem;   // gei | lev | total_variance | pareto
  std::string solver;    // qaoa | sdp | exact | brute
  int n = 0;
  int m = 0;
  int p = 0;  // ansatz layers; 0 for non-variational solvers
  double alpha = std::numeric_limits<double>::quiet_NaN();
  double objective = 0.0;
  Eigen::VectorXd scores;
  Eigen::MatrixXd q;
  std::vector<std::pair<SpinMask, double>> support;  // may be truncated
  double bound = std::numeric_limits<double>::quiet_NaN();  // dual/relaxation
  double gap = std::numeric_limits<double>::quiet_NaN();
  int iterations = 0;
  double seconds = 0.0;
  std::uint64_t seed = 0;
};

// FNV-1a hash of the canonical instance serialization, as 16 hex digits.
std::string instance_digest(const Hypergraph& h);

std::string report_to_json(const SolveReport& r);
void write_report(const std::string& path, const SolveReport& r);

// Spin assignment as a bitstring, vertex 0 first; '0' = +1, '1' = -1.
std::string mask_to_bitstring(SpinMask x, int n);
SpinMask bitstring_to_mask(const std::string& s);

// Ansatz parameter checkpoint: {p, betas, gammas, seed, iter, objective}.
struct Checkpoint {
  AnsatzParams params;
  std::uint64_t seed = 0;
  int iter = 0;
  double objective = 0.0;
};
void write_checkpoint(const std::string& path, const Checkpoint& c);
Checkpoint read_checkpoint(const std::string& path);

// Certificate dump:
// {support: [{x: bitstring, p}], dual: [..], primal_value, dual_value, gap}.
void write_certificate(const std::string& path, const GameCertificate& cert);

}  // namespace disthyp
