#include "gsemi/pair_partition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace gsemi {

bool blocks_cross(std::pair<int, int> a, std::pair<int, int> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

void validate_partition(const PairPartition& pi) {
  int n = 2 * pi.p;
  if (static_cast<int>(pi.blocks.size()) != pi.p)
    throw std::invalid_argument("partition must have p blocks");
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  int prev = -1;
  for (auto [s, r] : pi.blocks) {
    if (s < 0 || r >= n || s >= r)
      throw std::invalid_argument("block endpoints out of order or range");
    if (s <= prev) throw std::invalid_argument("blocks not sorted by opener");
    prev = s;
    ++seen[static_cast<std::size_t>(s)];
    ++seen[static_cast<std::size_t>(r)];
  }
  for (int k = 0; k < n; ++k)
    if (seen[static_cast<std::size_t>(k)] != 1)
      throw std::invalid_argument("endpoint " + std::to_string(k) +
                                  " not covered exactly once");
}

namespace {

void enumerate_partitions_rec(int n, std::uint32_t used,
                              std::vector<std::pair<int, int>>& blocks,
                              const std::function<void(const PairPartition&)>& fn) {
  int s = 0;
  while (s < n && (used >> s & 1)) ++s;
  if (s == n) {
    PairPartition pi;
    pi.p = n / 2;
    pi.blocks = blocks;
    fn(pi);
    return;
  }
  for (int r = s + 1; r < n; ++r) {
    if (used >> r & 1) continue;
    blocks.emplace_back(s, r);
    enumerate_partitions_rec(n, used | (1u << s) | (1u << r), blocks, fn);
    blocks.pop_back();
  }
}

}  // namespace

void for_each_pair_partition(
    int p, const std::function<void(const PairPartition&)>& fn) {
  if (p < 1 || p > 8)
    throw GuardError("pair partition enumeration limited to 1 <= p <= 8");
  std::vector<std::pair<int, int>> blocks;
  blocks.reserve(static_cast<std::size_t>(p));
  enumerate_partitions_rec(2 * p, 0, blocks, fn);
}

std::vector<PairPartition> enumerate_pair_partitions(int p) {
  std::vector<PairPartition> out;
  for_each_pair_partition(p, [&](const PairPartition& pi) { out.push_back(pi); });
  return out;
}

void for_each_pair_partition_with_first(
    int p, int first_partner,
    const std::function<void(const PairPartition&)>& fn) {
  if (p < 1 || p > 8)
    throw GuardError("pair partition enumeration limited to 1 <= p <= 8");
  if (first_partner < 1 || first_partner >= 2 * p)
    throw std::invalid_argument("first partner out of range");
  std::vector<std::pair<int, int>> blocks{{0, first_partner}};
  enumerate_partitions_rec(2 * p, 1u | (1u << first_partner), blocks, fn);
}

IntersectionGraph intersection_graph(const PairPartition& pi) {
  validate_partition(pi);
  IntersectionGraph ig;
  ig.underlying = SimpleGraph(pi.p);
  ig.block_of = pi.blocks;
  for (int u = 0; u < pi.p; ++u)
    for (int v = u + 1; v < pi.p; ++v)
      if (blocks_cross(pi.blocks[static_cast<std::size_t>(u)],
                       pi.blocks[static_cast<std::size_t>(v)]))
        ig.underlying.insert_edge(u, v);
  return ig;
}

bool is_g_noncrossing(const PairPartition& pi, const std::vector<int>& labels,
                      const SimpleGraph& g) {
  validate_partition(pi);
  if (static_cast<int>(labels.size()) != 2 * pi.p)
    throw std::invalid_argument("label sequence must have length 2p");
  for (int v : labels)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("label out of vertex range");
  for (auto [s, r] : pi.blocks)
    if (labels[static_cast<std::size_t>(s)] !=
        labels[static_cast<std::size_t>(r)])
      return false;  // pi does not refine i
  for (std::size_t a = 0; a < pi.blocks.size(); ++a)
    for (std::size_t b = a + 1; b < pi.blocks.size(); ++b)
      if (blocks_cross(pi.blocks[a], pi.blocks[b]) &&
          !g.adjacent(labels[static_cast<std::size_t>(pi.blocks[a].first)],
                      labels[static_cast<std::size_t>(pi.blocks[b].first)]))
        return false;
  return true;
}

void validate_dyck(const DyckPath& eps) {
  int h = 0;
  for (int s : eps.steps) {
    if (s != 1 && s != -1) throw std::invalid_argument("dyck steps must be +-1");
    h += s;
    if (h < 0) throw std::invalid_argument("dyck prefix sum went negative");
  }
  if (h != 0) throw std::invalid_argument("dyck path must end at height 0");
  if (eps.steps.size() % 2 != 0)
    throw std::invalid_argument("dyck path length must be even");
}

namespace {

void enumerate_dyck_rec(int remaining, int height, std::vector<int>& steps,
                        const std::function<void(const DyckPath&)>& fn) {
  if (remaining == 0) {
    fn(DyckPath{steps});
    return;
  }
  if (height + 1 <= remaining - 1) {
    steps.push_back(1);
    enumerate_dyck_rec(remaining - 1, height + 1, steps, fn);
    steps.pop_back();
  }
  if (height > 0) {
    steps.push_back(-1);
    enumerate_dyck_rec(remaining - 1, height - 1, steps, fn);
    steps.pop_back();
  }
}

}  // namespace

void for_each_dyck_path(int p,
                        const std::function<void(const DyckPath&)>& fn) {
  if (p < 1 || p > 10)
    throw GuardError("dyck path enumeration limited to 1 <= p <= 10");
  std::vector<int> steps;
  steps.reserve(static_cast<std::size_t>(2 * p));
  enumerate_dyck_rec(2 * p, 0, steps, fn);
}

std::vector<DyckPath> enumerate_dyck_paths(int p) {
  std::vector<DyckPath> out;
  for_each_dyck_path(p, [&](const DyckPath& d) { out.push_back(d); });
  return out;
}

namespace {

// Maps F-vertices to G-vertices in index order; every F-edge into already
// assigned vertices must land on a G-edge.
void hom_rec(const SimpleGraph& f, const SimpleGraph& g, int v,
             std::vector<int>& image,
             const std::function<void(const std::vector<int>&)>& fn) {
  if (v == f.vertex_count()) {
    fn(image);
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
    hom_rec(f, g, v + 1, image, fn);
  }
}

void hom_count_rec(const SimpleGraph& f, const SimpleGraph& g, int v,
                   std::vector<int>& image, BigInt& count) {
  if (v == f.vertex_count()) {
    ++count;
    return;
  }
  std::uint64_t earlier = f.neighbor_mask(v) & ((1ull << v) - 1);
  if (earlier == 0 && v + 1 == f.vertex_count()) {
    // last vertex unconstrained
    count += g.vertex_count();
    return;
  }
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
    hom_count_rec(f, g, v + 1, image, count);
  }
}

void check_hom_sizes(const SimpleGraph& f, const SimpleGraph& g) {
  if (f.vertex_count() > 10)
    throw GuardError("hom_count limited to |V(F)| <= 10");
  if (g.vertex_count() > SimpleGraph::kMaxVertices)
    throw GuardError("hom_count limited to |V(G)| <= 64");
}

}  // namespace

BigInt hom_count(const SimpleGraph& f, const SimpleGraph& g) {
  check_hom_sizes(f, g);
  if (f.vertex_count() == 0) return 1;
  BigInt count = 0;
  std::vector<int> image(static_cast<std::size_t>(f.vertex_count()), -1);
  hom_count_rec(f, g, 0, image, count);
  return count;
}

void for_each_hom(const SimpleGraph& f, const SimpleGraph& g,
                  const std::function<void(const std::vector<int>&)>& fn) {
  check_hom_sizes(f, g);
  std::vector<int> image(static_cast<std::size_t>(f.vertex_count()), -1);
  if (f.vertex_count() == 0) {
    fn(image);
    return;
  }
  hom_rec(f, g, 0, image, fn);
}

}  // namespace gsemi
