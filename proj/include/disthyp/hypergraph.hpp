#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "disthyp/spin.hpp"

namespace disthyp {

// Weighted hypergraph on dense 0-based vertex ids. Edges are stored sorted;
// duplicate edges are merged at construction with their weights summed.
// Immutable after construction.
class Hypergraph {
 public:
  Hypergraph(int n_vertices, std::vector<std::vector<int>> edges,
             std::vector<double> weights = {});

  int n_vertices() const { return n_vertices_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& edge(int e) const { return edges_[e]; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  double weight(int e) const { return weights_[e]; }
  const std::vector<double>& weights() const { return weights_; }
  double total_weight() const;

 private:
  int n_vertices_;
  std::vector<std::vector<int>> edges_;
  std::vector<double> weights_;
};

// Weighted undirected simple graph with derived adjacency and Laplacian.
struct Graph {
  int n_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, unique
  std::vector<double> weights;

  Eigen::MatrixXd adjacency() const;
  Eigen::MatrixXd laplacian() const;  // diag(A*1) - A
  Hypergraph as_hypergraph() const;
};

// Unweighted simple graph joining every vertex pair that co-occurs in some
// hyperedge.
Graph clique_expansion(const Hypergraph& h);

// True when some pair of vertices in `edge` carries opposite spins.
bool cuts(SpinMask x, const std::vector<int>& edge);

// Sum of w_e over edges cut by x.
double standard_cut_value(SpinMask x, const Hypergraph& h);

}  // namespace disthyp
