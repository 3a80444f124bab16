#include "disthyp/gen.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "disthyp/errors.hpp"
#include "disthyp/rng.hpp"

namespace disthyp {

Hypergraph poisson_hypergraph(const PoissonSpec& spec) {
  if (spec.n_vertices < 1)
    throw std::invalid_argument("poisson_hypergraph: need vertices");
  if (spec.n_edges < 1)
    throw std::invalid_argument("poisson_hypergraph: need at least one edge");
  if (!(spec.rate > 2.0))
    throw std::invalid_argument("poisson_hypergraph: rate must exceed 2");

  Rng rng(spec.seed);
  std::vector<int> pool(static_cast<std::size_t>(spec.n_vertices));
  std::iota(pool.begin(), pool.end(), 0);

  std::vector<std::vector<int>> edges;
  edges.reserve(static_cast<std::size_t>(spec.n_edges));
  for (int e = 0; e < spec.n_edges; ++e) {
    const int size = std::min<std::int64_t>(
        spec.n_vertices, rng.poisson(spec.rate - 2.0) + 2);
    // Partial Fisher-Yates: the first `size` entries become a uniform
    // sample without replacement.
    for (int i = 0; i < size; ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(
                  rng.below(static_cast<std::uint64_t>(spec.n_vertices - i)));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    std::vector<int> verts(pool.begin(), pool.begin() + size);
    std::sort(verts.begin(), verts.end());
    edges.push_back(std::move(verts));
  }
  // Duplicate draws merge inside the constructor, weight = multiplicity.
  return Hypergraph(spec.n_vertices, std::move(edges), {});
}

namespace {

std::int64_t binomial(int m, int t) {
  std::int64_t c = 1;
  for (int i = 1; i <= t; ++i) {
    c = c * (m - t + i) / i;
    if (c > (std::int64_t{1} << 40)) return c;  // already far past any cap
  }
  return c;
}

}  // namespace

Graph karloff_graph(const KarloffSpec& spec) {
  if (spec.m < 1 || spec.t < 1 || spec.t > spec.m)
    throw std::invalid_argument("karloff_graph: need 1 <= t <= m");
  if (spec.b < 1 || spec.b >= spec.t)
    throw std::invalid_argument("karloff_graph: need 0 < b < t");
  if (spec.m > 62)
    throw ResourceError("karloff_graph: m > 62 overflows the subset masks");
  constexpr std::int64_t kMaxVertices = 10000;
  const std::int64_t count = binomial(spec.m, spec.t);
  if (count > kMaxVertices)
    throw ResourceError("karloff_graph: C(m, t) = " + std::to_string(count) +
                        " vertices exceeds the cap of " +
                        std::to_string(kMaxVertices));

  // All t-subsets of {1..m} as bitmasks, in lexicographic order of their
  // sorted element lists ({1,2,3}, {1,2,4}, ..., via the standard
  // next-combination step).
  std::vector<std::uint64_t> subsets;
  subsets.reserve(static_cast<std::size_t>(count));
  std::vector<int> combo(static_cast<std::size_t>(spec.t));
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int c : combo) mask |= std::uint64_t{1} << c;
    subsets.push_back(mask);
    int i = spec.t - 1;
    while (i >= 0 && combo[std::size_t(i)] == spec.m - spec.t + i) --i;
    if (i < 0) break;
    ++combo[std::size_t(i)];
    for (int j = i + 1; j < spec.t; ++j)
      combo[std::size_t(j)] = combo[std::size_t(j - 1)] + 1;
  }

  Graph g;
  g.n_vertices = static_cast<int>(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (__builtin_popcountll(subsets[i] & subsets[j]) == spec.b)
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  if (g.edges.empty())
    throw std::invalid_argument(
        "karloff_graph: parameters give an empty edge set");
  g.weights.assign(g.edges.size(), 1.0);
  return g;
}

namespace {

void bron_kerbosch(const std::vector<std::vector<char>>& adj,
                   std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  // Pivot: the vertex of P union X with the most neighbours inside P.
  int pivot = -1, pivot_links = -1;
  for (const auto* side : {&p, &x}) {
    for (int u : *side) {
      int links = 0;
      for (int v : p) links += adj[std::size_t(u)][std::size_t(v)];
      if (links > pivot_links) {
        pivot_links = links;
        pivot = u;
      }
    }
  }
  std::vector<int> candidates;
  for (int v : p)
    if (!adj[std::size_t(pivot)][std::size_t(v)]) candidates.push_back(v);

  for (int v : candidates) {
    std::vector<int> p2, x2;
    for (int w : p)
      if (adj[std::size_t(v)][std::size_t(w)]) p2.push_back(w);
    for (int w : x)
      if (adj[std::size_t(v)][std::size_t(w)]) x2.push_back(w);
    r.push_back(v);
    bron_kerbosch(adj, r, std::move(p2), std::move(x2), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  const int n = g.n_vertices;
  std::vector<std::vector<char>> adj(
      static_cast<std::size_t>(n),
      std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const auto& [u, v] : g.edges) {
    if (u == v)
      throw std::invalid_argument("maximal_cliques: graph must be loop-free");
    adj[std::size_t(u)][std::size_t(v)] = 1;
    adj[std::size_t(v)][std::size_t(u)] = 1;
  }
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  bron_kerbosch(adj, r, std::move(p), {}, out);
  for (auto& clique : out) std::sort(clique.begin(), clique.end());
  std::sort(out.begin(), out.end());
  return out;
}

Hypergraph cliques_to_hypergraph(const std::vector<std::vector<int>>& cliques,
                                 int n_vertices) {
  return Hypergraph(n_vertices, cliques, {});
}

Hypergraph karloff_clique_hypergraph(const KarloffSpec& spec) {
  const Graph g = karloff_graph(spec);
  return cliques_to_hypergraph(maximal_cliques(g), g.n_vertices);
}

}  // namespace disthyp
