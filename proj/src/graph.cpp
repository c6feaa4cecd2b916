#include "gsemi/graph.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "gsemi/numeric.hpp"

namespace gsemi {

SimpleGraph::SimpleGraph(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("vertex count out of range [0, 64]: " +
                                std::to_string(n));
  n_ = n;
  adj_.assign(static_cast<std::size_t>(n), 0);
}

int SimpleGraph::degree(int v) const {
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) e.emplace_back(u, v);
  return e;
}

void SimpleGraph::insert_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("edge endpoint out of range: (" +
                                std::to_string(u) + "," + std::to_string(v) +
                                ")");
  if (u == v)
    throw std::invalid_argument("loop edge rejected at vertex " +
                                std::to_string(u));
  adj_[static_cast<std::size_t>(u)] |= 1ull << v;
  adj_[static_cast<std::size_t>(v)] |= 1ull << u;
}

SimpleGraph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.insert_edge(u, v);
  return g;
}

SimpleGraph edgeless_graph(int n) { return SimpleGraph(n); }

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.insert_edge(u, v);
  return g;
}

SimpleGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  SimpleGraph g(n);
  for (int v = 0; v < n; ++v) g.insert_edge(v, (v + 1) % n);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.insert_edge(v, v + 1);
  return g;
}

SimpleGraph turan_graph(int L, int omega) {
  if (omega < 1) throw std::invalid_argument("omega must be >= 1");
  if (L < 1 || omega > L || L % omega != 0)
    throw std::invalid_argument("turan graph requires omega | L, got L=" +
                                std::to_string(L) +
                                " omega=" + std::to_string(omega));
  // part(v) = v / (L/omega); edges between distinct parts
  int part_size = L / omega;
  SimpleGraph g(L);
  for (int u = 0; u < L; ++u)
    for (int v = u + 1; v < L; ++v)
      if (u / part_size != v / part_size) g.insert_edge(u, v);
  return g;
}

SimpleGraph minimizer_graph(int L, int omega) {
  if (omega < 1 || omega > L)
    throw std::invalid_argument("minimizer graph requires 1 <= omega <= L");
  SimpleGraph g(L);
  for (int u = 0; u < omega; ++u)
    for (int v = u + 1; v < omega; ++v) g.insert_edge(u, v);
  return g;
}

SimpleGraph add_edge(const SimpleGraph& g, int u, int v) {
  SimpleGraph out = g;
  out.insert_edge(u, v);
  return out;
}

SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
  int n = g.vertex_count() + h.vertex_count();
  SimpleGraph out(n);
  for (auto [u, v] : g.edges()) out.insert_edge(u, v);
  int off = g.vertex_count();
  for (auto [u, v] : h.edges()) out.insert_edge(u + off, v + off);
  return out;
}

namespace {

// Bron-Kerbosch with pivoting over bitmask vertex sets. Tracks the best
// clique found; cand/excl are the usual P and X sets.
void bron_kerbosch(const SimpleGraph& g, std::uint64_t clique,
                   std::uint64_t cand, std::uint64_t excl,
                   std::uint64_t& best) {
  if (cand == 0 && excl == 0) {
    if (std::popcount(clique) > std::popcount(best)) best = clique;
    return;
  }
  if (std::popcount(clique) + std::popcount(cand) <= std::popcount(best))
    return;  // cannot beat the incumbent
  std::uint64_t both = cand | excl;
  int pivot = std::countr_zero(both);
  int best_deg = -1;
  for (std::uint64_t m = both; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int d = std::popcount(cand & g.neighbor_mask(v));
    if (d > best_deg) {
      best_deg = d;
      pivot = v;
    }
  }
  std::uint64_t ext = cand & ~g.neighbor_mask(pivot);
  for (std::uint64_t m = ext; m; m &= m - 1) {
    int v = std::countr_zero(m);
    std::uint64_t vb = 1ull << v;
    bron_kerbosch(g, clique | vb, cand & g.neighbor_mask(v),
                  excl & g.neighbor_mask(v), best);
    cand &= ~vb;
    excl |= vb;
  }
}

std::uint64_t max_clique_mask(const SimpleGraph& g, std::uint64_t allowed) {
  std::uint64_t best = 0;
  bron_kerbosch(g, 0, allowed, 0, best);
  return best;
}

}  // namespace

CliqueReport clique_report(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("clique_report needs n >= 1");
  std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
  CliqueReport rep;
  std::uint64_t best = max_clique_mask(g, all);
  rep.omega = std::popcount(best);
  for (std::uint64_t m = best; m; m &= m - 1)
    rep.witness.push_back(std::countr_zero(m));
  rep.per_vertex.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    // largest clique containing v = 1 + max clique of G[N(v)]
    std::uint64_t nb = g.neighbor_mask(v) & all;
    rep.per_vertex[static_cast<std::size_t>(v)] =
        1 + std::popcount(max_clique_mask(g, nb));
  }
  return rep;
}

int clique_number(const SimpleGraph& g) { return clique_report(g).omega; }

namespace {

// k-colorability by backtracking; vertices colored in index order and any
// vertex may only open one new color, killing color-permutation symmetry.
bool colorable(const SimpleGraph& g, int v, int k, std::vector<int>& color,
               int used) {
  if (v == g.vertex_count()) return true;
  int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int u = 0; u < v; ++u)
      if (g.adjacent(u, v) && color[static_cast<std::size_t>(u)] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[static_cast<std::size_t>(v)] = c;
    if (colorable(g, v + 1, k, color, std::max(used, c + 1))) return true;
  }
  return false;
}

}  // namespace

int chromatic_number(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("chromatic_number needs n >= 1");
  if (n > 20)
    throw GuardError("chromatic_number limited to n <= 20, got n=" +
                         std::to_string(n),
                     static_cast<unsigned long long>(n));
  int lo = clique_number(g);
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int k = std::max(lo, 1); k <= n; ++k)
    if (colorable(g, 0, k, color, 0)) return k;
  return n;
}

double largest_adjacency_eigenvalue(const SimpleGraph& g) {
  int n = g.vertex_count();
  if (n < 1)
    throw std::invalid_argument("largest_adjacency_eigenvalue needs n >= 1");
  // Power iteration on A + I: for non-negative symmetric A the spectral
  // radius equals the top eigenvalue, and the shift precludes the +-lambda
  // oscillation on bipartite graphs.
  std::vector<double> x(static_cast<std::size_t>(n), 1.0), y(x);
  double lambda = 0.0;
  const double tol = 1e-12;
  const int max_iter = 100000;
  for (int attempt = 0; attempt < 2; ++attempt) {
    double prev = -1.0;
    for (int it = 0; it < max_iter; ++it) {
      for (int u = 0; u < n; ++u) {
        double s = x[static_cast<std::size_t>(u)];
        std::uint64_t m = g.neighbor_mask(u);
        while (m) {
          int v = std::countr_zero(m);
          m &= m - 1;
          s += x[static_cast<std::size_t>(v)];
        }
        y[static_cast<std::size_t>(u)] = s;
      }
      double num = 0, den = 0, norm = 0;
      for (int u = 0; u < n; ++u) {
        num += y[static_cast<std::size_t>(u)] * x[static_cast<std::size_t>(u)];
        den += x[static_cast<std::size_t>(u)] * x[static_cast<std::size_t>(u)];
        norm += y[static_cast<std::size_t>(u)] * y[static_cast<std::size_t>(u)];
      }
      lambda = num / den;
      norm = std::sqrt(norm);
      for (auto& e : y) e /= norm;
      x.swap(y);
      if (std::abs(lambda - prev) <= tol * std::max(1.0, std::abs(lambda)))
        return lambda - 1.0;
      prev = lambda;
    }
    // retry once from a perturbed start in case the start vector was
    // (numerically) orthogonal to the top eigenvector
    for (int u = 0; u < n; ++u)
      x[static_cast<std::size_t>(u)] = 1.0 + 1e-3 * (u + 1);
  }
  throw ConvergenceError("power iteration on adjacency matrix did not converge");
}

}  // namespace gsemi
