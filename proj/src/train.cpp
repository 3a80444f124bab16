#include "disthyp/train.hpp"

#include <cmath>
#include <stdexcept>

#include "disthyp/rng.hpp"

namespace disthyp {

void TrainConfig::validate() const {
  if (p < 1) throw std::invalid_argument("TrainConfig: p must be >= 1");
  if (max_iters < 0)
    throw std::invalid_argument("TrainConfig: max_iters must be >= 0");
  if (patience < 1)
    throw std::invalid_argument("TrainConfig: patience must be >= 1");
  if (improvement_tol < 0 || adam_step <= 0 || adam_eps <= 0 ||
      init_cap < 0 || adam_beta1 < 0 || adam_beta1 >= 1 || adam_beta2 < 0 ||
      adam_beta2 >= 1)
    throw std::invalid_argument("TrainConfig: bad optimizer constants");
}

namespace {

AnsatzParams random_init(int p, int n, int n_pairs, double cap,
                         std::uint64_t seed) {
  Rng rng(seed);
  AnsatzParams params;
  params.p = p;
  params.betas.resize(p, n);
  params.gammas.resize(p, n_pairs);
  // Drawn in flatten order (per layer: cost angles, then mixer angles) so a
  // seed pins the exact start point.
  for (int l = 0; l < p; ++l) {
    for (int e = 0; e < n_pairs; ++e)
      params.gammas(l, e) = rng.uniform(-cap, cap);
    for (int u = 0; u < n; ++u) params.betas(l, u) = rng.uniform(-cap, cap);
  }
  return params;
}

struct Evaluated {
  double value;
  Eigen::VectorXd scores;
};

Evaluated evaluate_at(const AnsatzParams& params, int n,
                      const CompiledFamily& compiled) {
  const Statevector psi = run_ansatz(params, n, compiled.pairs);
  Eigen::VectorXd q_pairs(static_cast<Eigen::Index>(compiled.pairs.size()));
  if (!compiled.pairs.empty()) {
    const Eigen::MatrixXd q = zz_expectations(psi);
    for (std::size_t e = 0; e < compiled.pairs.size(); ++e)
      q_pairs[static_cast<Eigen::Index>(e)] =
          q(compiled.pairs[e].first, compiled.pairs[e].second);
  }
  Evaluated out;
  out.scores = compiled.diag_base + compiled.offdiag * q_pairs;
  out.value = aggregate_scores(compiled.family, out.scores);
  return out;
}

}  // namespace

TrainResult train(const QuadraticFamily& fam, const PairList& pairs, int n,
                  const TrainConfig& cfg) {
  cfg.validate();
  return train(fam, pairs, n, cfg,
               random_init(cfg.p, n, static_cast<int>(pairs.size()),
                           cfg.init_cap, cfg.seed));
}

TrainResult train(const QuadraticFamily& fam, const PairList& pairs, int n,
                  const TrainConfig& cfg, const AnsatzParams& init) {
  cfg.validate();
  if (init.p != cfg.p)
    throw std::invalid_argument("train: init depth does not match cfg.p");
  init.validate(n, static_cast<int>(pairs.size()));
  const CompiledFamily compiled = compile_family(fam, pairs);

  Eigen::VectorXd flat = init.flatten();
  const Eigen::Index dim = flat.size();
  Eigen::VectorXd m = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);

  TrainResult result;
  result.iterations = 0;
  result.converged = false;
  bool have_best = false;
  Eigen::VectorXd best_flat = flat;

  const auto record = [&](double value, const Eigen::VectorXd& at) {
    if (!have_best || fam.better(value, result.objective)) {
      result.objective = value;
      best_flat = at;
      have_best = true;
    }
    result.trace.push_back(result.objective);
  };

  const int n_pairs = static_cast<int>(pairs.size());
  for (int t = 1; t <= cfg.max_iters; ++t) {
    const AnsatzParams current =
        AnsatzParams::unflatten(flat, cfg.p, n, n_pairs);
    const double tau = cfg.smoothing.at(t - 1);
    const ObjectiveGradient og = objective_gradient(current, n, compiled, tau);
    record(og.value, flat);

    const std::size_t filled = result.trace.size();
    if (static_cast<int>(filled) > cfg.patience) {
      const double then = result.trace[filled - 1 - cfg.patience];
      const double now = result.trace[filled - 1];
      const double improvement =
          fam.direction() == Direction::Minimize ? then - now : now - then;
      if (improvement < cfg.improvement_tol) {
        result.converged = true;
        break;
      }
    }

    const Eigen::VectorXd g =
        AnsatzParams{cfg.p, og.grad.d_betas, og.grad.d_gammas}.flatten();
    m = cfg.adam_beta1 * m + (1.0 - cfg.adam_beta1) * g;
    v = cfg.adam_beta2 * v + (1.0 - cfg.adam_beta2) * g.cwiseProduct(g);
    const double mc = 1.0 - std::pow(cfg.adam_beta1, t);
    const double vc = 1.0 - std::pow(cfg.adam_beta2, t);
    flat -= (cfg.adam_step * (m.array() / mc) /
             ((v.array() / vc).sqrt() + cfg.adam_eps))
                .matrix();
    result.iterations = t;
  }

  // Evaluate the final iterate (for a zero budget this is the init point).
  if (!result.converged) {
    const AnsatzParams last = AnsatzParams::unflatten(flat, cfg.p, n, n_pairs);
    record(evaluate_at(last, n, compiled).value, flat);
  }

  result.params = AnsatzParams::unflatten(best_flat, cfg.p, n, n_pairs);
  result.q = zz_expectations(run_ansatz(result.params, n, pairs));
  const Evaluation final_eval = evaluate(fam, result.q);
  result.objective = final_eval.value;
  result.scores = final_eval.scores;
  return result;
}

}  // namespace disthyp
