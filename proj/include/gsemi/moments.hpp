#ifndef GSEMI_MOMENTS_HPP
#define GSEMI_MOMENTS_HPP

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsemi/graph.hpp"
#include "gsemi/numeric.hpp"

namespace gsemi {

// Weights alpha_1..alpha_L; exact_real, when present, is an exact rational
// view of the same (real) weights used by the exact evaluation path.
struct CoefficientVector {
  std::vector<std::complex<double>> values;
  std::optional<std::vector<BigRat>> exact_real;

  static CoefficientVector ones(int L);
  static CoefficientVector unit(int L, int j);
  std::size_t size() const { return values.size(); }
};

struct MomentResult {
  int p = 0;
  bool exact = false;
  BigRat exact_value;               // real part; only set when exact
  std::complex<double> value{0, 0};
};

// One checked inequality: slack = rhs - lhs, holds iff slack is above the
// negative relative tolerance.
struct BoundReport {
  std::string which;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  bool holds = false;
};

inline constexpr double kRelTolerance = 1e-9;

BoundReport make_bound_report(const std::string& which, double lhs, double rhs);

// tau(s_{i_1} ... s_{i_2p}) = |NC2(G, i)|; odd length returns 0.
BigInt mixed_moment(const SimpleGraph& g, const std::vector<int>& labels);

// tau[(sum_i s_i)^2p] = sum over pair partitions of hom(F_pi, G).
BigInt moment_unweighted(const SimpleGraph& g, int p);
BigInt moment_unweighted_ref(const SimpleGraph& g, int p);

// Moment of T_G = L^{-1/2} sum s_i: moment_unweighted / L^p, exact.
BigRat moment_normalized(const SimpleGraph& g, int p);

// tau[(S_G S_G*)^p] for S_G = sum alpha_i s_i. Real rational weights use
// exact arithmetic; otherwise complex double with the alternating
// conjugation pattern of the defining sum.
MomentResult moment_weighted(const SimpleGraph& g, int p,
                             const CoefficientVector& alpha);

// C_p^{1/2p} * min(sum |a_i|^2 c*(i), p * sum |a_i|^2)^{1/2}.
double khintchine_rhs_scalar(const SimpleGraph& g, int p,
                             const CoefficientVector& alpha);

// lhs = (weighted moment)^{1/2p} vs the scalar Khintchine right-hand side.
BoundReport check_scalar_khintchine(const SimpleGraph& g, int p,
                                    const CoefficientVector& alpha);

// Exact norm of T for the Turan graph with clique number omega.
double turan_exact_norm(int omega);

// [sqrt((omega^2+L-omega)/L), 2 sqrt((omega^2+L-omega)/L)].
std::pair<double, double> minimizer_interval(int L, int omega);

// Upper bounds on ||T_G||: the sharp clique bound and the suboptimal
// chromatic / clique-linear / eigenvalue bounds.
std::map<std::string, double> suboptimal_bounds(const SimpleGraph& g);

struct MonotonicityReport {
  BigInt before;
  BigInt after;
  bool holds = false;
};

// moment_unweighted never decreases when an absent edge is added.
MonotonicityReport monotonicity_check(const SimpleGraph& g,
                                      std::pair<int, int> edge, int p);

// Labeled-graph sweep at fixed clique number ------------------------------

struct SweepRow {
  std::uint64_t edge_mask = 0;      // bit k = edge k in lexicographic order
  std::vector<BigInt> moments;      // p = 1..p_max
  std::vector<BigRat> normalized;   // moments[p] / L^p
  std::vector<double> norm_lower;   // normalized^(1/2p): norm lower bounds
};

struct SweepTable {
  int L = 0;
  int omega = 0;
  int p_max = 0;
  std::vector<SweepRow> rows;
  std::uint64_t turan_mask = 0;
  std::uint64_t minimizer_mask = 0;
  // per p: does the canonical Turan / minimizer row attain the extremum?
  std::vector<bool> turan_attains_max;
  std::vector<bool> minimizer_attains_min;
};

// All labeled graphs on L vertices with clique number exactly omega,
// with exact moments up to p_max. Requires omega | L for the Turan flag.
SweepTable extremal_sweep(int L, int omega, int p_max);

std::uint64_t edge_mask_of(const SimpleGraph& g);
SimpleGraph graph_from_edge_mask(int L, std::uint64_t mask);

}  // namespace gsemi

#endif
