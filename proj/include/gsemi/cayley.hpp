#ifndef GSEMI_CAYLEY_HPP
#define GSEMI_CAYLEY_HPP

#include <vector>

#include "gsemi/numeric.hpp"
#include "gsemi/pair_partition.hpp"
#include "gsemi/trace_monoid.hpp"

namespace gsemi {

// Closed walk from the empty word on Cay(T(G)): words w_1..w_2p with
// implicit start e, successive lengths differing by exactly 1, w_2p = e.
struct CayleyPath {
  std::vector<TraceWord> words;

  bool operator==(const CayleyPath&) const = default;
};

// Pair partition with one G-vertex per block; the induced block labeling
// must be a homomorphism F_pi -> G (crossing blocks get adjacent labels).
struct LabeledPartition {
  PairPartition partition;
  std::vector<int> labels;  // labels[b] for block b in partition order

  bool operator==(const LabeledPartition&) const = default;
};

// Throws unless labels form a homomorphism F_pi -> G.
void validate_labeled_partition(const LabeledPartition& lp,
                                const SimpleGraph& g);

// Throws unless path is a valid element of P_2p(G).
void validate_closed_path(const CayleyPath& path, const SimpleGraph& g);

// Exact |P_2p(G)| for p = 0..p_max in one ball + DP pass; counts[0] = 1.
struct WalkCountTable {
  std::vector<BigInt> counts;
};

WalkCountTable walk_count_table(const SimpleGraph& g, int p_max,
                                std::size_t guard = kDefaultBallGuard);
WalkCountTable walk_count_table_ref(const SimpleGraph& g, int p_max,
                                    std::size_t guard = kDefaultBallGuard);

struct BallGraph;

// DP over a prebuilt ball; requires ball radius >= p_max.
WalkCountTable walk_count_table_on(const BallGraph& bg, int p_max);
WalkCountTable walk_count_table_on_ref(const BallGraph& bg, int p_max);

BigInt closed_walk_count(const SimpleGraph& g, int p,
                         std::size_t guard = kDefaultBallGuard);

// The recursive bijection Pi_2p(G) -> P_2p(G): peel the first-returning
// block, map the rest, re-insert by prefixing the block letter between
// its endpoints.
CayleyPath phi(const LabeledPartition& lp, const SimpleGraph& g);

// Unique preimage: locate the first down step, recover the removed letter
// and its latest matching up step, contract and recurse.
LabeledPartition phi_inverse(const CayleyPath& path, const SimpleGraph& g);

// Step k is +1 iff the walk lengthens at k.
DyckPath dyck_of_path(const CayleyPath& path);

// All closed paths with Dyck shape eps whose up-step k appends
// up_labels[k]; down steps branch over removable letters.
std::vector<CayleyPath> enumerate_labeled_paths(
    const SimpleGraph& g, const DyckPath& eps,
    const std::vector<int>& up_labels);

struct PathBoundReport {
  BigInt set_size;
  BigInt clique_bound;     // prod over up labels of c*(i_k)
  BigInt factorial_bound;  // p!
  bool holds = false;
};

PathBoundReport verify_path_count_bound(const SimpleGraph& g,
                                        const DyckPath& eps,
                                        const std::vector<int>& up_labels);

// (|P_2p(G)|)^(1/2p) for p = 1..p_max: certified lower bounds on the
// Cayley-graph operator norm, with supremum equal to the limit.
std::vector<double> spectral_lower_bounds(const SimpleGraph& g, int p_max,
                                          std::size_t guard = kDefaultBallGuard);

// Top eigenvalue of the Cayley adjacency compressed to the radius ball
// (power iteration); a lower bound on the full norm, nondecreasing in
// radius.
double spectral_power_estimate(const SimpleGraph& g, int radius, double tol,
                               std::size_t guard = kDefaultBallGuard);

// Exhaustive check of the bijection on Pi_2p(G): image validity,
// injectivity, the +-1 length rule at block endpoints, the inverse
// roundtrip, and |Pi_2p| = |P_2p|.
struct BijectionCheck {
  BigInt pi_count = 0;
  BigInt walk_count = 0;
  bool all_valid = true;
  bool injective = true;
  bool roundtrip_identity = true;
  bool length_rule = true;
  bool counts_match = false;

  bool ok() const {
    return all_valid && injective && roundtrip_identity && length_rule &&
           counts_match;
  }
};

BijectionCheck verify_bijection(const SimpleGraph& g, int p);

// Adjacency CSR of the Cayley graph restricted to a ball; shared by the
// walk DP and the compression estimate.
struct BallGraph {
  WordBall ball;
  std::vector<std::uint32_t> row_ptr;
  std::vector<std::uint32_t> adj;
};

BallGraph build_ball_graph(const SimpleGraph& g, int radius,
                           std::size_t guard = kDefaultBallGuard);

}  // namespace gsemi

#endif
