#include "gsemi/moments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "gsemi/pair_partition.hpp"

namespace gsemi {

CoefficientVector CoefficientVector::ones(int L) {
  CoefficientVector cv;
  cv.values.assign(static_cast<std::size_t>(L), {1.0, 0.0});
  cv.exact_real = std::vector<BigRat>(static_cast<std::size_t>(L), BigRat(1));
  return cv;
}

CoefficientVector CoefficientVector::unit(int L, int j) {
  CoefficientVector cv;
  cv.values.assign(static_cast<std::size_t>(L), {0.0, 0.0});
  cv.values[static_cast<std::size_t>(j)] = {1.0, 0.0};
  std::vector<BigRat> ex(static_cast<std::size_t>(L), BigRat(0));
  ex[static_cast<std::size_t>(j)] = 1;
  cv.exact_real = std::move(ex);
  return cv;
}

BoundReport make_bound_report(const std::string& which, double lhs,
                              double rhs) {
  BoundReport rep;
  rep.which = which;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.slack = rhs - lhs;
  rep.holds = rep.slack >= -kRelTolerance * std::max(1.0, std::abs(rhs));
  return rep;
}

// ---------------------------------------------------------------------------
// Mixed moments |NC2(G, i)|

namespace {

// Matches the smallest unmatched position with every compatible partner.
// A new block (s, r) crosses a placed block (s2, r2) iff s < r2 < r, in
// which case the labels must be adjacent in G.
void count_nc2(const SimpleGraph& g, const std::vector<int>& labels,
               std::uint32_t used, std::vector<std::pair<int, int>>& blocks,
               BigInt& count) {
  int n = static_cast<int>(labels.size());
  int s = 0;
  while (s < n && (used >> s & 1)) ++s;
  if (s == n) {
    ++count;
    return;
  }
  for (int r = s + 1; r < n; ++r) {
    if (used >> r & 1) continue;
    if (labels[static_cast<std::size_t>(r)] !=
        labels[static_cast<std::size_t>(s)])
      continue;
    bool ok = true;
    for (auto [s2, r2] : blocks)
      if (s < r2 && r2 < r &&
          !g.adjacent(labels[static_cast<std::size_t>(s2)],
                      labels[static_cast<std::size_t>(s)])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    blocks.emplace_back(s, r);
    count_nc2(g, labels, used | (1u << s) | (1u << r), blocks, count);
    blocks.pop_back();
  }
}

}  // namespace

BigInt mixed_moment(const SimpleGraph& g, const std::vector<int>& labels) {
  if (labels.size() % 2 != 0) return 0;  // odd moments of centered variables
  if (labels.size() > 16)
    throw GuardError("mixed_moment limited to 2p <= 16");
  for (int v : labels)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("moment label out of vertex range");
  if (labels.empty()) return 1;
  BigInt count = 0;
  std::vector<std::pair<int, int>> blocks;
  count_nc2(g, labels, 0, blocks, count);
  return count;
}

// ---------------------------------------------------------------------------
// Unweighted moments: sum over pair partitions of hom(F_pi, G)

BigInt moment_unweighted_ref(const SimpleGraph& g, int p) {
  if (p == 0) return 1;
  BigInt sum = 0;
  for_each_pair_partition(p, [&](const PairPartition& pi) {
    sum += hom_count(intersection_graph(pi).underlying, g);
  });
  return sum;
}

BigInt moment_unweighted(const SimpleGraph& g, int p) {
  if (p == 0) return 1;
  if (p < 1 || p > 8) throw GuardError("moment limited to 1 <= p <= 8");
  int branches = 2 * p - 1;
  std::vector<BigInt> partial(static_cast<std::size_t>(branches), BigInt(0));
#pragma omp parallel for schedule(dynamic)
  for (int r = 1; r <= branches; ++r) {
    BigInt local = 0;
    for_each_pair_partition_with_first(p, r, [&](const PairPartition& pi) {
      local += hom_count(intersection_graph(pi).underlying, g);
    });
    partial[static_cast<std::size_t>(r) - 1] = std::move(local);
  }
  BigInt sum = 0;
  for (auto& t : partial) sum += t;
  return sum;
}

BigRat moment_normalized(const SimpleGraph& g, int p) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("normalized moment needs at least one vertex");
  BigRat r(moment_unweighted(g, p),
           int_pow(BigInt(g.vertex_count()), static_cast<unsigned>(p)));
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// Weighted moments

namespace {

template <typename W>
void weighted_hom_rec(const SimpleGraph& f, const SimpleGraph& g, int v,
                      std::vector<int>& image, const W& partial,
                      const std::vector<std::vector<W>>& weights, W& total) {
  if (v == f.vertex_count()) {
    total += partial;
    return;
  }
  std::uint64_t earlier = f.neighbor_mask(v) & ((1ull << v) - 1);
  for (int w = 0; w < g.vertex_count(); ++w) {
    bool ok = true;
    for (std::uint64_t m = earlier; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (!g.adjacent(image[static_cast<std::size_t>(u)], w)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    image[static_cast<std::size_t>(v)] = w;
    weighted_hom_rec(f, g, v + 1, image,
                     W(partial * weights[static_cast<std::size_t>(v)]
                                        [static_cast<std::size_t>(w)]),
                     weights, total);
  }
}

// sum over phi in Hom(F, G) of prod_v weights[v][phi(v)]
template <typename W>
W weighted_hom_sum(const SimpleGraph& f, const SimpleGraph& g,
                   const std::vector<std::vector<W>>& weights) {
  W total(0);
  std::vector<int> image(static_cast<std::size_t>(f.vertex_count()), -1);
  weighted_hom_rec(f, g, 0, image, W(1), weights, total);
  return total;
}

}  // namespace

MomentResult moment_weighted(const SimpleGraph& g, int p,
                             const CoefficientVector& alpha) {
  if (static_cast<int>(alpha.size()) != g.vertex_count())
    throw std::invalid_argument("coefficient count must match vertex count");
  MomentResult res;
  res.p = p;
  if (p == 0) {
    res.exact = true;
    res.exact_value = 1;
    res.value = 1.0;
    return res;
  }
  int L = g.vertex_count();
  if (alpha.exact_real) {
    const auto& ex = *alpha.exact_real;
    if (static_cast<int>(ex.size()) != L)
      throw std::invalid_argument("exact coefficient count mismatch");
    std::vector<BigRat> squares(static_cast<std::size_t>(L));
    for (int i = 0; i < L; ++i) {
      squares[static_cast<std::size_t>(i)] =
          ex[static_cast<std::size_t>(i)] * ex[static_cast<std::size_t>(i)];
      squares[static_cast<std::size_t>(i)].canonicalize();
    }
    BigRat sum(0);
    for_each_pair_partition(p, [&](const PairPartition& pi) {
      std::vector<std::vector<BigRat>> weights(pi.blocks.size(), squares);
      sum += weighted_hom_sum(intersection_graph(pi).underlying, g, weights);
    });
    sum.canonicalize();
    res.exact = true;
    res.exact_value = sum;
    res.value = sum.get_d();
    return res;
  }
  std::complex<double> sum(0, 0);
  for_each_pair_partition(p, [&](const PairPartition& pi) {
    // odd (1-based) positions take alpha, even take the conjugate
    std::vector<std::vector<std::complex<double>>> weights;
    weights.reserve(pi.blocks.size());
    for (auto [s, r] : pi.blocks) {
      std::vector<std::complex<double>> w(static_cast<std::size_t>(L));
      for (int i = 0; i < L; ++i) {
        std::complex<double> a = alpha.values[static_cast<std::size_t>(i)];
        std::complex<double> fs = (s % 2 == 0) ? a : std::conj(a);
        std::complex<double> fr = (r % 2 == 0) ? a : std::conj(a);
        w[static_cast<std::size_t>(i)] = fs * fr;
      }
      weights.push_back(std::move(w));
    }
    sum += weighted_hom_sum(intersection_graph(pi).underlying, g, weights);
  });
  res.exact = false;
  res.value = sum;
  return res;
}

// ---------------------------------------------------------------------------
// Scalar Khintchine

double khintchine_rhs_scalar(const SimpleGraph& g, int p,
                             const CoefficientVector& alpha) {
  if (static_cast<int>(alpha.size()) != g.vertex_count())
    throw std::invalid_argument("coefficient count must match vertex count");
  CliqueReport cr = clique_report(g);
  double sum_sq = 0, sum_sq_clique = 0;
  for (int i = 0; i < g.vertex_count(); ++i) {
    double a2 = std::norm(alpha.values[static_cast<std::size_t>(i)]);
    sum_sq += a2;
    sum_sq_clique += a2 * cr.per_vertex[static_cast<std::size_t>(i)];
  }
  double cp = catalan(static_cast<unsigned>(p)).get_d();
  return std::pow(cp, 1.0 / (2.0 * p)) *
         std::sqrt(std::min(sum_sq_clique, p * sum_sq));
}

BoundReport check_scalar_khintchine(const SimpleGraph& g, int p,
                                    const CoefficientVector& alpha) {
  MomentResult m = moment_weighted(g, p, alpha);
  double moment = m.exact ? m.exact_value.get_d() : m.value.real();
  double lhs = std::pow(moment, 1.0 / (2.0 * p));
  double rhs = khintchine_rhs_scalar(g, p, alpha);
  return make_bound_report("scalar-khintchine", lhs, rhs);
}

double turan_exact_norm(int omega) {
  if (omega < 1) throw std::invalid_argument("omega must be >= 1");
  return 2.0 * std::sqrt(static_cast<double>(omega));
}

std::pair<double, double> minimizer_interval(int L, int omega) {
  if (omega < 1 || omega > L)
    throw std::invalid_argument("minimizer interval requires 1 <= omega <= L");
  double q = std::sqrt((static_cast<double>(omega) * omega + L - omega) /
                       static_cast<double>(L));
  return {q, 2.0 * q};
}

std::map<std::string, double> suboptimal_bounds(const SimpleGraph& g) {
  int omega = clique_number(g);
  int chi = chromatic_number(g);
  double lambda1 = largest_adjacency_eigenvalue(g);
  std::map<std::string, double> out;
  out["sharp_clique"] = 2.0 * std::sqrt(static_cast<double>(omega));
  out["clique_linear"] = 2.0 * omega;
  out["chromatic_linear"] = 2.0 * chi;
  out["chromatic_sqrt"] = 2.0 * std::sqrt(static_cast<double>(chi));
  out["eigenvalue"] = 2.0 * std::sqrt(lambda1 + 1.0);
  return out;
}

MonotonicityReport monotonicity_check(const SimpleGraph& g,
                                      std::pair<int, int> edge, int p) {
  if (g.adjacent(edge.first, edge.second))
    throw std::invalid_argument("edge already present");
  MonotonicityReport rep;
  rep.before = moment_unweighted(g, p);
  rep.after = moment_unweighted(add_edge(g, edge.first, edge.second), p);
  rep.holds = rep.before <= rep.after;
  return rep;
}

// ---------------------------------------------------------------------------
// Extremal sweep

std::uint64_t edge_mask_of(const SimpleGraph& g) {
  std::uint64_t mask = 0;
  int bit = 0;
  int L = g.vertex_count();
  for (int u = 0; u < L; ++u)
    for (int v = u + 1; v < L; ++v, ++bit)
      if (g.adjacent(u, v)) mask |= 1ull << bit;
  return mask;
}

SimpleGraph graph_from_edge_mask(int L, std::uint64_t mask) {
  SimpleGraph g(L);
  int bit = 0;
  for (int u = 0; u < L; ++u)
    for (int v = u + 1; v < L; ++v, ++bit)
      if (mask >> bit & 1) g.insert_edge(u, v);
  return g;
}

SweepTable extremal_sweep(int L, int omega, int p_max) {
  if (L < 1 || L > 7) throw GuardError("extremal sweep limited to L <= 7");
  if (p_max < 1 || p_max > 4)
    throw GuardError("extremal sweep limited to p_max <= 4");
  if (omega < 1 || omega > L)
    throw std::invalid_argument("sweep requires 1 <= omega <= L");
  SweepTable table;
  table.L = L;
  table.omega = omega;
  table.p_max = p_max;
  table.minimizer_mask = edge_mask_of(minimizer_graph(L, omega));
  if (L % omega == 0) table.turan_mask = edge_mask_of(turan_graph(L, omega));

  int nbits = L * (L - 1) / 2;
  std::uint64_t total = 1ull << nbits;
  std::vector<SweepRow> rows;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SimpleGraph g = graph_from_edge_mask(L, mask);
    if (clique_number(g) != omega) continue;
    SweepRow row;
    row.edge_mask = mask;
    row.moments.resize(static_cast<std::size_t>(p_max));
    rows.push_back(std::move(row));
  }
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(rows.size()); ++i) {
    SweepRow& row = rows[static_cast<std::size_t>(i)];
    SimpleGraph g = graph_from_edge_mask(L, row.edge_mask);
    for (int p = 1; p <= p_max; ++p) {
      BigInt m = moment_unweighted_ref(g, p);
      BigRat normalized(m, int_pow(BigInt(L), static_cast<unsigned>(p)));
      normalized.canonicalize();
      row.norm_lower.push_back(
          std::pow(normalized.get_d(), 1.0 / (2.0 * p)));
      row.normalized.push_back(std::move(normalized));
      row.moments[static_cast<std::size_t>(p) - 1] = std::move(m);
    }
  }
  table.rows = std::move(rows);

  table.turan_attains_max.assign(static_cast<std::size_t>(p_max), false);
  table.minimizer_attains_min.assign(static_cast<std::size_t>(p_max), false);
  const SweepRow* turan_row = nullptr;
  const SweepRow* min_row = nullptr;
  for (const auto& row : table.rows) {
    if (L % omega == 0 && row.edge_mask == table.turan_mask) turan_row = &row;
    if (row.edge_mask == table.minimizer_mask) min_row = &row;
  }
  for (int p = 1; p <= p_max; ++p) {
    BigInt max_m = -1, min_m = -1;
    for (const auto& row : table.rows) {
      const BigInt& m = row.moments[static_cast<std::size_t>(p) - 1];
      if (max_m < 0 || m > max_m) max_m = m;
      if (min_m < 0 || m < min_m) min_m = m;
    }
    if (turan_row)
      table.turan_attains_max[static_cast<std::size_t>(p) - 1] =
          turan_row->moments[static_cast<std::size_t>(p) - 1] == max_m;
    if (min_row)
      table.minimizer_attains_min[static_cast<std::size_t>(p) - 1] =
          min_row->moments[static_cast<std::size_t>(p) - 1] == min_m;
  }
  return table;
}

}  // namespace gsemi
