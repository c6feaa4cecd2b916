#ifndef GSEMI_GRAPH_HPP
#define GSEMI_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gsemi {

// Undirected loopless graph on vertices {0, ..., n-1}, n <= 64.
// Adjacency rows are bitmasks, so clique search and homomorphism
// pruning are single-word operations.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 64;

  SimpleGraph() = default;
  explicit SimpleGraph(int n);

  int vertex_count() const { return n_; }

  bool adjacent(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
  }

  // Bitmask of neighbors of v.
  std::uint64_t neighbor_mask(int v) const {
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const;
  std::size_t edge_count() const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  // Mutating insert; public construction goes through build_graph/add_edge.
  void insert_edge(int u, int v);

  bool operator==(const SimpleGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Constructors -------------------------------------------------------------

// Rejects out-of-range vertices and loops; duplicate edges collapse.
SimpleGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

SimpleGraph edgeless_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph path_graph(int n);

// Complete omega-partite graph with equal parts of size L/omega.
// Requires omega >= 1 and omega | L.
SimpleGraph turan_graph(int L, int omega);

// K_omega disjoint union with the edgeless graph on L - omega vertices.
SimpleGraph minimizer_graph(int L, int omega);

SimpleGraph add_edge(const SimpleGraph& g, int u, int v);
SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);

// Analytics ----------------------------------------------------------------

struct CliqueReport {
  int omega = 0;                // clique number
  std::vector<int> per_vertex;  // c*(v): largest clique containing v
  std::vector<int> witness;     // one maximum clique, ascending
};

// Exact maximum-clique data via Bron-Kerbosch with pivoting.
CliqueReport clique_report(const SimpleGraph& g);

int clique_number(const SimpleGraph& g);

// Exact chromatic number by branch-and-bound; n <= 20 enforced.
int chromatic_number(const SimpleGraph& g);

// Largest adjacency eigenvalue by power iteration on A + I
// (deterministic all-ones start), relative accuracy ~1e-10.
double largest_adjacency_eigenvalue(const SimpleGraph& g);

}  // namespace gsemi

#endif
