#pragma once

#include <cstdint>
#include <vector>

#include "disthyp/hypergraph.hpp"

namespace disthyp {

// Random hypergraph with Poisson-distributed edge sizes: each of n_edges
// draws takes size min(n_vertices, N + 2) with N ~ Poisson(rate - 2) and
// samples that many distinct vertices uniformly; repeated vertex sets merge
// with weight = multiplicity. The mean edge size is approximately `rate`.
struct PoissonSpec {
  int n_vertices = 0;
  int n_edges = 0;
  double rate = 0.0;  // mean edge size target, > 2
  std::uint64_t seed = 0;
};

Hypergraph poisson_hypergraph(const PoissonSpec& spec);

// Graph on the t-subsets of {1..m} (lexicographic order), joining subsets
// whose intersection has exactly b elements.
struct KarloffSpec {
  int m = 0;
  int t = 0;  // subset size, t <= m
  int b = 0;  // intersection size, 0 < b < t
};

Graph karloff_graph(const KarloffSpec& spec);

// All maximal cliques (Bron-Kerbosch with pivoting); each clique sorted,
// list sorted lexicographically.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

// Unit-weight hypergraph with one hyperedge per clique.
Hypergraph cliques_to_hypergraph(const std::vector<std::vector<int>>& cliques,
                                 int n_vertices);

// Full pipeline: Karloff graph -> maximal cliques -> hypergraph.
Hypergraph karloff_clique_hypergraph(const KarloffSpec& spec);

}  // namespace disthyp
