#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "disthyp/errors.hpp"
#include "disthyp/gen.hpp"
#include "disthyp/hypergraph.hpp"
#include "disthyp/io.hpp"
#include "disthyp/rng.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using namespace disthyp;

namespace {

// Exponential-time reference: every subset that is a clique and cannot be
// extended by any outside vertex.
std::vector<std::vector<int>> cliques_by_exhaustion(const Graph& g) {
  const int n = g.n_vertices;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;

  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) members.push_back(v);
    bool clique = true;
    for (std::size_t i = 0; i < members.size() && clique; ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (!adj[members[i]][members[j]]) {
          clique = false;
          break;
        }
    if (!clique) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (mask & (1u << v)) continue;
      bool joins_all = true;
      for (const int u : members)
        if (!adj[u][v]) {
          joins_all = false;
          break;
        }
      if (joins_all) maximal = false;
    }
    if (maximal) out.push_back(members);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

}  // namespace

TEST_CASE("the (6,3,1) construction yields the documented 20-vertex graph") {
  const Graph g = karloff_graph({6, 3, 1});
  CHECK(g.n_vertices == 20);
  CHECK(g.edges.size() == 90);

  SUBCASE("simple, loop-free, and 9-regular") {
    std::vector<int> degree(20, 0);
    std::set<std::pair<int, int>> seen;
    for (const auto& [u, v] : g.edges) {
      CHECK(u < v);
      CHECK(seen.insert({u, v}).second);
      ++degree[u];
      ++degree[v];
    }
    for (const int d : degree) CHECK(d == 9);
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(karloff_graph({6, 7, 1}), std::invalid_argument);
    CHECK_THROWS_AS(karloff_graph({6, 3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(karloff_graph({6, 3, 3}), std::invalid_argument);
    // A single vertex (t = m) leaves no pairs to join.
    CHECK_THROWS_AS(karloff_graph({3, 3, 1}), std::invalid_argument);
  }
}

TEST_CASE("maximal clique enumeration matches exhaustive search") {
  SUBCASE("hand-checked small graphs") {
    Graph triangle{3, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 1}};
    CHECK(maximal_cliques(triangle) ==
          std::vector<std::vector<int>>{{0, 1, 2}});

    Graph path{3, {{0, 1}, {1, 2}}, {1, 1}};
    CHECK(maximal_cliques(path) ==
          std::vector<std::vector<int>>{{0, 1}, {1, 2}});

    Graph isolated{3, {{0, 1}}, {1}};
    CHECK(maximal_cliques(isolated) ==
          std::vector<std::vector<int>>{{0, 1}, {2}});
  }
  SUBCASE("random graphs up to 12 vertices") {
    Rng rng(37);
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 3 + static_cast<int>(rng.below(10));
      const double prob = rng.uniform(0.15, 0.85);
      Graph g;
      g.n_vertices = n;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (rng.uniform() < prob) {
            g.edges.emplace_back(u, v);
            g.weights.push_back(1.0);
          }
      CHECK(maximal_cliques(g) == cliques_by_exhaustion(g));
    }
  }
  SUBCASE("self-loops are rejected") {
    Graph bad{2, {{0, 0}}, {1}};
    CHECK_THROWS_AS(maximal_cliques(bad), std::invalid_argument);
  }
}

TEST_CASE("the full clique pipeline produces 30 hyperedges of size 4") {
  const Hypergraph h = karloff_clique_hypergraph({6, 3, 1});
  CHECK(h.n_vertices() == 20);
  REQUIRE(h.n_edges() == 30);
  for (int e = 0; e < 30; ++e) {
    CHECK(h.edge(e).size() == 4);
    CHECK(h.weight(e) == 1.0);
  }

  SUBCASE("every hyperedge really is a maximal clique of the source graph") {
    const Graph g = karloff_graph({6, 3, 1});
    std::vector<std::vector<char>> adj(20, std::vector<char>(20, 0));
    for (const auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
    for (int e = 0; e < 30; ++e) {
      const auto& clique = h.edge(e);
      for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
          CHECK(adj[clique[i]][clique[j]] == 1);
    }
  }
}

TEST_CASE("clique lists convert to unit-weight hypergraphs") {
  const Hypergraph h = cliques_to_hypergraph({{0, 1}, {2}}, 4);
  CHECK(h.n_vertices() == 4);
  CHECK(h.n_edges() == 2);
  CHECK(h.weight(0) == 1.0);

  const Hypergraph empty = cliques_to_hypergraph({}, 3);
  CHECK(empty.n_vertices() == 3);
  CHECK(empty.n_edges() == 0);
}

TEST_CASE("poisson draws conserve total weight and deduplicate supports") {
  for (const std::uint64_t seed : {1ULL, 7ULL, 99ULL, 12345ULL}) {
    const Hypergraph h = poisson_hypergraph({12, 16, 4.0, seed});
    CHECK(h.n_vertices() == 12);
    CHECK(h.n_edges() <= 16);
    CHECK(h.total_weight() == doctest::Approx(16.0).epsilon(1e-12));
    std::set<std::vector<int>> supports;
    for (int e = 0; e < h.n_edges(); ++e) {
      CHECK(h.edge(e).size() >= 2);
      CHECK(supports.insert(h.edge(e)).second);  // unique after merging
    }
  }
  SUBCASE("spec validation") {
    CHECK_THROWS_AS(poisson_hypergraph({0, 5, 4.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(poisson_hypergraph({5, 0, 4.0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(poisson_hypergraph({5, 5, 2.0, 1}), std::invalid_argument);
  }
}

TEST_CASE("mean hyperedge size approaches the configured rate") {
  double weighted_size_sum = 0.0;
  double weight_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Hypergraph h = poisson_hypergraph({12, 16, 4.0, seed});
    for (int e = 0; e < h.n_edges(); ++e) {
      weighted_size_sum += h.weight(e) * double(h.edge(e).size());
      weight_sum += h.weight(e);
    }
  }
  const double mean = weighted_size_sum / weight_sum;
  CHECK(std::abs(mean - 4.0) <= 0.2);
}

TEST_CASE("edge sizes pass a goodness-of-fit test against the size law") {
  // One generator call with 10^4 draws; merged duplicates are recovered
  // through their multiplicity weights. Sizes follow min(n, 2 + N) with
  // N ~ Poisson(rate - 2); binning at {2,...,7, >=8} keeps every expected
  // count comfortably above 5.
  const int draws = 10000;
  const double rate = 2.0;  // mu - 2
  const Hypergraph h = poisson_hypergraph({12, draws, 4.0, 2024});

  std::vector<double> observed(7, 0.0);  // sizes 2..7, then >= 8
  for (int e = 0; e < h.n_edges(); ++e) {
    const int size = static_cast<int>(h.edge(e).size());
    const int bin = std::min(size - 2, 6);
    observed[bin] += h.weight(e);
  }

  std::vector<double> expected(7, 0.0);
  double pmf = std::exp(-rate);  // P[N = 0]
  double tail = 1.0;
  for (int k = 0; k < 6; ++k) {
    expected[k] = draws * pmf;
    tail -= pmf;
    pmf *= rate / (k + 1);
  }
  expected[6] = draws * tail;

  double chi2 = 0.0;
  for (int k = 0; k < 7; ++k) {
    CHECK(expected[k] > 5.0);
    const double diff = observed[k] - expected[k];
    chi2 += diff * diff / expected[k];
  }
  // 0.99 quantile of chi-square with 6 degrees of freedom.
  CHECK(chi2 < 16.8119);
}

TEST_CASE("identical seeds serialize to identical bytes") {
  const fs::path dir = "gen_scratch";
  fs::remove_all(dir);
  fs::create_directories(dir);

  SUBCASE("poisson") {
    const std::string a = (dir / "a.hmetis").string();
    const std::string b = (dir / "b.hmetis").string();
    write_hypergraph(a, poisson_hypergraph({12, 16, 3.5, 77}));
    write_hypergraph(b, poisson_hypergraph({12, 16, 3.5, 77}));
    CHECK(slurp(a) == slurp(b));
    const std::string c = (dir / "c.hmetis").string();
    write_hypergraph(c, poisson_hypergraph({12, 16, 3.5, 78}));
    CHECK(slurp(a) != slurp(c));
  }
  SUBCASE("karloff pipeline is deterministic without any seed") {
    const std::string a = (dir / "ka.json").string();
    const std::string b = (dir / "kb.json").string();
    write_hypergraph(a, karloff_clique_hypergraph({6, 3, 1}));
    write_hypergraph(b, karloff_clique_hypergraph({6, 3, 1}));
    CHECK(slurp(a) == slurp(b));
  }
}
