#ifndef GSEMI_PAIR_PARTITION_HPP
#define GSEMI_PAIR_PARTITION_HPP

#include <functional>
#include <utility>
#include <vector>

#include "gsemi/graph.hpp"
#include "gsemi/numeric.hpp"

namespace gsemi {

// Perfect matching of {0, ..., 2p-1}. Blocks are (s, r) with s < r,
// sorted ascending by s.
struct PairPartition {
  int p = 0;
  std::vector<std::pair<int, int>> blocks;

  bool operator==(const PairPartition&) const = default;
};

// Blocks a and b cross iff their endpoints interleave.
bool blocks_cross(std::pair<int, int> a, std::pair<int, int> b);

// Validates endpoint coverage, ordering and block sort; throws otherwise.
void validate_partition(const PairPartition& pi);

// Visits every element of P2(2p) in lexicographic order of block lists
// (the smallest unmatched element is always paired first). 1 <= p <= 8.
void for_each_pair_partition(
    int p, const std::function<void(const PairPartition&)>& fn);

// Materialized enumeration; total count (2p-1)!!.
std::vector<PairPartition> enumerate_pair_partitions(int p);

// Restriction to partitions whose first block is (0, first_partner);
// lets callers fan the enumeration out over 2p-1 independent branches.
void for_each_pair_partition_with_first(
    int p, int first_partner, const std::function<void(const PairPartition&)>& fn);

// Graph on the p blocks of pi with edges between crossing blocks.
struct IntersectionGraph {
  SimpleGraph underlying;                      // p vertices, one per block
  std::vector<std::pair<int, int>> block_of;   // vertex -> block endpoints
};

IntersectionGraph intersection_graph(const PairPartition& pi);

// True iff labels are constant on every block of pi and every crossing
// pair of blocks carries G-adjacent labels (the NC2(G, i) membership
// test). Non-block-constant labelings return false.
bool is_g_noncrossing(const PairPartition& pi, const std::vector<int>& labels,
                      const SimpleGraph& g);

// +-1 steps with nonnegative prefix sums and zero total.
struct DyckPath {
  std::vector<int> steps;

  bool operator==(const DyckPath&) const = default;
};

void validate_dyck(const DyckPath& eps);

// All Dyck paths of length 2p in lexicographic order (+1 before -1);
// count is the Catalan number C_p. 1 <= p <= 10.
void for_each_dyck_path(int p, const std::function<void(const DyckPath&)>& fn);

std::vector<DyckPath> enumerate_dyck_paths(int p);

// Homomorphism counting -----------------------------------------------------

// Exact |Hom(F, G)| by backtracking with adjacency-consistency pruning.
// F at most 10 vertices, G at most 64.
BigInt hom_count(const SimpleGraph& f, const SimpleGraph& g);

// Visits each homomorphism as the vector image (one G-vertex per F-vertex).
void for_each_hom(const SimpleGraph& f, const SimpleGraph& g,
                  const std::function<void(const std::vector<int>&)>& fn);

}  // namespace gsemi

#endif
