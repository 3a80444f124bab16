#include "disthyp/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace disthyp {

Hypergraph::Hypergraph(int n_vertices, std::vector<std::vector<int>> edges,
                       std::vector<double> weights)
    : n_vertices_(n_vertices) {
  if (n_vertices <= 0)
    throw std::invalid_argument("Hypergraph: n_vertices must be positive");
  if (weights.empty()) weights.assign(edges.size(), 1.0);
  if (weights.size() != edges.size())
    throw std::invalid_argument("Hypergraph: weights/edges size mismatch");

  // Canonicalize: sort each edge, reject invalid ids and duplicates within an
  // edge, then merge duplicate edges with weights summed.
  std::map<std::vector<int>, double> merged;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto& verts = edges[e];
    if (verts.empty())
      throw std::invalid_argument("Hypergraph: edge " + std::to_string(e) +
                                  " is empty");
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (verts[i] < 0 || verts[i] >= n_vertices)
        throw std::invalid_argument("Hypergraph: vertex id " +
                                    std::to_string(verts[i]) +
                                    " out of range in edge " + std::to_string(e));
      if (i > 0 && verts[i] == verts[i - 1])
        throw std::invalid_argument(
            "Hypergraph: duplicate vertex id " + std::to_string(verts[i]) +
            " in edge " + std::to_string(e));
    }
    const double w = weights[e];
    if (!std::isfinite(w) || w < 0.0)
      throw std::invalid_argument("Hypergraph: weight of edge " +
                                  std::to_string(e) +
                                  " must be finite and >= 0");
    merged[std::move(verts)] += w;
  }
  edges_.reserve(merged.size());
  weights_.reserve(merged.size());
  for (auto& [verts, w] : merged) {
    edges_.push_back(verts);
    weights_.push_back(w);
  }
}

double Hypergraph::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

Eigen::MatrixXd Graph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_vertices, n_vertices);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    a(u, v) += weights[e];
    a(v, u) += weights[e];
  }
  return a;
}

Eigen::MatrixXd Graph::laplacian() const {
  const Eigen::MatrixXd a = adjacency();
  Eigen::MatrixXd l = -a;
  l.diagonal() += a.rowwise().sum();
  return l;
}

Hypergraph Graph::as_hypergraph() const {
  std::vector<std::vector<int>> hedges;
  hedges.reserve(edges.size());
  for (const auto& [u, v] : edges) hedges.push_back({u, v});
  return Hypergraph(n_vertices, std::move(hedges), weights);
}

Graph clique_expansion(const Hypergraph& h) {
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < h.n_edges(); ++e) {
    const auto& verts = h.edge(e);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        pairs.emplace_back(verts[i], verts[j]);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  Graph g;
  g.n_vertices = h.n_vertices();
  g.edges = std::move(pairs);
  g.weights.assign(g.edges.size(), 1.0);
  return g;
}

bool cuts(SpinMask x, const std::vector<int>& edge) {
  const bool first = (x >> edge[0]) & 1ULL;
  for (std::size_t i = 1; i < edge.size(); ++i)
    if ((((x >> edge[i]) & 1ULL) != 0) != first) return true;
  return false;
}

double standard_cut_value(SpinMask x, const Hypergraph& h) {
  double total = 0.0;
  for (int e = 0; e < h.n_edges(); ++e)
    if (cuts(x, h.edge(e))) total += h.weight(e);
  return total;
}

}  // namespace disthyp
