#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "disthyp/adjoint.hpp"
#include "disthyp/brute.hpp"
#include "disthyp/distribution.hpp"
#include "disthyp/errors.hpp"
#include "disthyp/game.hpp"
#include "disthyp/gen.hpp"
#include "disthyp/hypergraph.hpp"
#include "disthyp/incidence.hpp"
#include "disthyp/io.hpp"
#include "disthyp/objective.hpp"
#include "disthyp/quadratics.hpp"
#include "disthyp/sdp.hpp"
#include "disthyp/spectral.hpp"
#include "disthyp/statevector.hpp"
#include "disthyp/train.hpp"

namespace py = pybind11;
using namespace disthyp;

namespace {

QuadraticFamily family_for(const Hypergraph& h, const std::string& problem,
                           double alpha) {
  const StochasticIncidence inc = StochasticIncidence::uniform(h);
  if (problem == "gei") return gei_family(inc);
  if (problem == "lev") return lev_family(inc);
  if (problem == "total_variance") return total_variance_family(inc);
  if (problem == "pareto")
    return pareto_family(make_pareto_spec(inc, inc), alpha);
  throw std::invalid_argument("unknown problem: " + problem);
}

}  // namespace

PYBIND11_MODULE(_disthyp, m) {
  m.doc() =
      "Distributional hypergraph partitioning: statevector QAOA training, "
      "semidefinite relaxation with hyperplane rounding, and exact "
      "small-instance game solving.";

  py::register_exception<ResourceError>(m, "ResourceError");

  // ---- core structures ----
  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<int, std::vector<std::vector<int>>,
                    std::vector<double>>(),
           py::arg("n_vertices"), py::arg("edges"),
           py::arg("weights") = std::vector<double>{})
      .def_property_readonly("n_vertices", &Hypergraph::n_vertices)
      .def_property_readonly("n_edges", &Hypergraph::n_edges)
      .def("edge", &Hypergraph::edge, py::arg("e"))
      .def_property_readonly("edges", &Hypergraph::edges)
      .def("weight", &Hypergraph::weight, py::arg("e"))
      .def_property_readonly("weights", &Hypergraph::weights)
      .def("total_weight", &Hypergraph::total_weight);

  py::class_<Graph>(m, "Graph")
      .def_readonly("n_vertices", &Graph::n_vertices)
      .def_readonly("edges", &Graph::edges)
      .def_readonly("weights", &Graph::weights)
      .def("adjacency", &Graph::adjacency)
      .def("laplacian", &Graph::laplacian)
      .def("as_hypergraph", &Graph::as_hypergraph);

  py::enum_<HypergraphFormat>(m, "HypergraphFormat")
      .value("Auto", HypergraphFormat::Auto)
      .value("Hmetis", HypergraphFormat::Hmetis)
      .value("Json", HypergraphFormat::Json);

  m.def("clique_expansion", &clique_expansion, py::arg("h"));
  m.def("read_hypergraph", &read_hypergraph, py::arg("path"),
        py::arg("format") = HypergraphFormat::Auto);
  m.def("write_hypergraph", &write_hypergraph, py::arg("path"), py::arg("h"),
        py::arg("format") = HypergraphFormat::Auto);
  m.def("read_benson", &read_benson, py::arg("nverts_path"),
        py::arg("simplices_path"));

  py::class_<StochasticIncidence>(m, "StochasticIncidence")
      .def_static("uniform", &StochasticIncidence::uniform, py::arg("h"))
      .def_static("from_columns", &StochasticIncidence::from_columns,
                  py::arg("h"), py::arg("columns"))
      .def_property_readonly("columns", &StochasticIncidence::columns)
      .def_property_readonly("n_vertices", &StochasticIncidence::n_vertices)
      .def_property_readonly("n_edges", &StochasticIncidence::n_edges);

  py::class_<EdgeQuadratics>(m, "EdgeQuadratics")
      .def_readonly("imbalance", &EdgeQuadratics::imbalance)
      .def_readonly("variance", &EdgeQuadratics::variance);
  m.def("edge_quadratics", &edge_quadratics, py::arg("p"));

  py::class_<AggregateQuadratics>(m, "AggregateQuadratics")
      .def_readonly("imbalance", &AggregateQuadratics::imbalance)
      .def_readonly("variance", &AggregateQuadratics::variance);
  m.def("aggregate_quadratics", &aggregate_quadratics, py::arg("incidence"));

  py::class_<SpinDistribution>(m, "SpinDistribution")
      .def(py::init<int, std::vector<std::pair<SpinMask, double>>>(),
           py::arg("n"), py::arg("support"))
      .def_static("point_mass", &SpinDistribution::point_mass, py::arg("n"),
                  py::arg("x"))
      .def_property_readonly("n_vertices", &SpinDistribution::n_vertices)
      .def_property_readonly("support", &SpinDistribution::support);
  m.def("autocorrelation_of", &autocorrelation_of, py::arg("distribution"));

  // ---- objectives ----
  py::enum_<AggregateMode>(m, "AggregateMode")
      .value("Minimax", AggregateMode::Minimax)
      .value("Maximin", AggregateMode::Maximin)
      .value("Sum", AggregateMode::Sum)
      .value("Pareto", AggregateMode::Pareto);
  py::enum_<Direction>(m, "Direction")
      .value("Minimize", Direction::Minimize)
      .value("Maximize", Direction::Maximize);

  py::class_<QuadraticFamily>(m, "QuadraticFamily")
      .def(py::init<std::vector<Eigen::MatrixXd>, std::vector<double>,
                    AggregateMode, Direction, std::string, double>(),
           py::arg("members"), py::arg("weights"), py::arg("mode"),
           py::arg("direction"), py::arg("problem"),
           py::arg("alpha") = std::numeric_limits<double>::quiet_NaN())
      .def_property_readonly("size", &QuadraticFamily::size)
      .def_property_readonly("dimension", &QuadraticFamily::dimension)
      .def("member", &QuadraticFamily::member, py::arg("i"))
      .def_property_readonly("mode", &QuadraticFamily::mode)
      .def_property_readonly("direction", &QuadraticFamily::direction)
      .def_property_readonly("problem", &QuadraticFamily::problem)
      .def_property_readonly("alpha", &QuadraticFamily::alpha);

  m.def("build_family", &family_for, py::arg("h"), py::arg("problem"),
        py::arg("alpha") = 0.5,
        "gei | lev | total_variance | pareto on the uniform incidence");

  py::class_<Evaluation>(m, "Evaluation")
      .def_readonly("value", &Evaluation::value)
      .def_readonly("scores", &Evaluation::scores);
  m.def("evaluate", &evaluate, py::arg("family"), py::arg("q"));

  m.def("lambda_max", &lambda_max, py::arg("m"), py::arg("tol") = 1e-10);

  // ---- statevector simulation ----
  py::class_<AnsatzParams>(m, "AnsatzParams")
      .def(py::init([](int p, Eigen::MatrixXd betas, Eigen::MatrixXd gammas) {
             AnsatzParams params;
             params.p = p;
             params.betas = std::move(betas);
             params.gammas = std::move(gammas);
             return params;
           }),
           py::arg("p"), py::arg("betas"), py::arg("gammas"))
      .def_readonly("p", &AnsatzParams::p)
      .def_readonly("betas", &AnsatzParams::betas)
      .def_readonly("gammas", &AnsatzParams::gammas)
      .def("zero_padded", &AnsatzParams::zero_padded, py::arg("new_p"));

  m.def(
      "run_ansatz",
      [](const AnsatzParams& params, int n, const PairList& pairs) {
        return run_ansatz(params, n, pairs).amplitudes();
      },
      py::arg("params"), py::arg("n"), py::arg("pairs"),
      "Statevector amplitudes of the ansatz circuit, little-endian");
  m.def(
      "zz_expectations",
      [](const std::vector<std::complex<double>>& amplitudes, int n) {
        Statevector psi = Statevector::plus(n);
        if (amplitudes.size() != psi.size())
          throw std::invalid_argument("amplitude count != 2^n");
        psi.amplitudes() = amplitudes;
        return zz_expectations(psi);
      },
      py::arg("amplitudes"), py::arg("n"));

  // ---- training ----
  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init<>())
      .def_readwrite("p", &TrainConfig::p)
      .def_readwrite("max_iters", &TrainConfig::max_iters)
      .def_readwrite("patience", &TrainConfig::patience)
      .def_readwrite("improvement_tol", &TrainConfig::improvement_tol)
      .def_readwrite("adam_step", &TrainConfig::adam_step)
      .def_readwrite("seed", &TrainConfig::seed);

  py::class_<TrainResult>(m, "TrainResult")
      .def_readonly("params", &TrainResult::params)
      .def_readonly("objective", &TrainResult::objective)
      .def_readonly("scores", &TrainResult::scores)
      .def_readonly("q", &TrainResult::q)
      .def_readonly("iterations", &TrainResult::iterations)
      .def_readonly("converged", &TrainResult::converged)
      .def_readonly("trace", &TrainResult::trace);

  m.def(
      "train",
      [](const QuadraticFamily& fam, const PairList& pairs, int n,
         const TrainConfig& cfg) { return train(fam, pairs, n, cfg); },
      py::arg("family"), py::arg("pairs"), py::arg("n"), py::arg("config"));

  m.def(
      "family_pairs",
      [](const QuadraticFamily& fam) {
        const int n = fam.dimension();
        Eigen::MatrixXd touched = Eigen::MatrixXd::Zero(n, n);
        for (const auto& mm : fam.members()) touched += mm.cwiseAbs();
        PairList pairs;
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (touched(u, v) != 0.0) pairs.emplace_back(u, v);
        return pairs;
      },
      py::arg("family"), "Pairs carrying off-diagonal weight in any member");

  // ---- classical solvers ----
  py::class_<SdpOptions>(m, "SdpOptions")
      .def(py::init<>())
      .def_readwrite("tol", &SdpOptions::tol)
      .def_readwrite("max_iters", &SdpOptions::max_iters);

  py::class_<SdpResult>(m, "SdpResult")
      .def_readonly("a", &SdpResult::a)
      .def_readonly("factor", &SdpResult::factor)
      .def_readonly("objective", &SdpResult::objective)
      .def_readonly("scores", &SdpResult::scores)
      .def_readonly("relax_bound", &SdpResult::relax_bound)
      .def_readonly("iterations", &SdpResult::iterations)
      .def_readonly("converged", &SdpResult::converged);

  m.def(
      "solve_sdp",
      [](const QuadraticFamily& fam, const SdpOptions& opts) {
        return solve_sdp(fam, opts);
      },
      py::arg("family"), py::arg("options") = SdpOptions{});
  m.def("rounding_autocorrelation", &rounding_autocorrelation, py::arg("a"));
  m.def("sample_hyperplane", &sample_hyperplane, py::arg("b"),
        py::arg("n_samples"), py::arg("seed"));
  m.def("factorize_elliptope", &factorize_elliptope, py::arg("a"));

  py::class_<GameCertificate>(m, "GameCertificate")
      .def_readonly("primal", &GameCertificate::primal)
      .def_readonly("dual", &GameCertificate::dual)
      .def_readonly("primal_value", &GameCertificate::primal_value)
      .def_readonly("dual_value", &GameCertificate::dual_value)
      .def_readonly("gap", &GameCertificate::gap)
      .def_readonly("rounds", &GameCertificate::rounds)
      .def_readonly("reached_tol", &GameCertificate::reached_tol);
  m.def("exact_minimax", &exact_minimax, py::arg("family"),
        py::arg("eps") = 1e-4, py::arg("max_rounds") = 500);

  py::class_<BruteResult>(m, "BruteResult")
      .def_readonly("value", &BruteResult::value)
      .def_readonly("arg", &BruteResult::arg);
  m.def("brute_force_max_quadratic", &brute_force_max_quadratic,
        py::arg("m"));
  m.def("brute_force_min_quadratic", &brute_force_min_quadratic,
        py::arg("m"));

  // ---- generators ----
  py::class_<PoissonSpec>(m, "PoissonSpec")
      .def(py::init([](int n, int m_edges, double rate, std::uint64_t seed) {
             PoissonSpec s;
             s.n_vertices = n;
             s.n_edges = m_edges;
             s.rate = rate;
             s.seed = seed;
             return s;
           }),
           py::arg("n_vertices"), py::arg("n_edges"), py::arg("rate"),
           py::arg("seed") = 0);
  m.def("poisson_hypergraph", &poisson_hypergraph, py::arg("spec"));

  py::class_<KarloffSpec>(m, "KarloffSpec")
      .def(py::init([](int mm, int t, int b) {
             KarloffSpec s;
             s.m = mm;
             s.t = t;
             s.b = b;
             return s;
           }),
           py::arg("m"), py::arg("t"), py::arg("b"));
  m.def("karloff_graph", &karloff_graph, py::arg("spec"));
  m.def("maximal_cliques", &maximal_cliques, py::arg("g"));
  m.def("cliques_to_hypergraph", &cliques_to_hypergraph, py::arg("cliques"),
        py::arg("n_vertices"));
  m.def("karloff_clique_hypergraph", &karloff_clique_hypergraph,
        py::arg("spec"));
}
