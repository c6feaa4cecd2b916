#include "gsemi/cayley.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "gsemi/eig.hpp"
#include "gsemi/sparse.hpp"

namespace gsemi {

void validate_labeled_partition(const LabeledPartition& lp,
                                const SimpleGraph& g) {
  validate_partition(lp.partition);
  if (lp.labels.size() != lp.partition.blocks.size())
    throw std::invalid_argument("one label per block required");
  for (int v : lp.labels)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("block label out of vertex range");
  for (std::size_t a = 0; a < lp.partition.blocks.size(); ++a)
    for (std::size_t b = a + 1; b < lp.partition.blocks.size(); ++b)
      if (blocks_cross(lp.partition.blocks[a], lp.partition.blocks[b]) &&
          !g.adjacent(lp.labels[a], lp.labels[b]))
        throw std::invalid_argument(
            "labeling is not a homomorphism: crossing blocks carry "
            "non-adjacent labels");
}

namespace {

// Letter v with longer = v * shorter, if any. Unique by cancellativity.
std::optional<int> connecting_letter(const TraceWord& longer,
                                     const TraceWord& shorter,
                                     const SimpleGraph& g) {
  for (std::uint64_t m = removable_letters(longer); m; m &= m - 1) {
    int v = std::countr_zero(m);
    if (left_divide(v, longer, g) == shorter) return v;
  }
  return std::nullopt;
}

const TraceWord& word_at(const CayleyPath& path, int t) {
  static const TraceWord empty{};
  return t == 0 ? empty : path.words[static_cast<std::size_t>(t) - 1];
}

}  // namespace

void validate_closed_path(const CayleyPath& path, const SimpleGraph& g) {
  int len = static_cast<int>(path.words.size());
  if (len == 0 || len % 2 != 0)
    throw std::invalid_argument("closed path must have positive even length");
  if (!path.words.back().empty())
    throw std::invalid_argument("closed path must end at the empty word");
  for (int t = 1; t <= len; ++t) {
    const TraceWord& prev = word_at(path, t - 1);
    const TraceWord& cur = word_at(path, t);
    int dl = cur.length() - prev.length();
    if (dl == 1) {
      if (!connecting_letter(cur, prev, g))
        throw std::invalid_argument("up step " + std::to_string(t) +
                                    " is not a left multiplication");
    } else if (dl == -1) {
      if (!connecting_letter(prev, cur, g))
        throw std::invalid_argument("down step " + std::to_string(t) +
                                    " is not a left division");
    } else {
      throw std::invalid_argument("step " + std::to_string(t) +
                                  " does not change length by exactly 1");
    }
  }
}

// ---------------------------------------------------------------------------
// Walk counting

BallGraph build_ball_graph(const SimpleGraph& g, int radius,
                           std::size_t guard) {
  BallGraph bg;
  bg.ball = enumerate_ball(g, radius, guard);
  const auto n = bg.ball.size();
  std::vector<std::vector<std::uint32_t>> up(n);
  // every Cayley edge inside the ball is found from its shorter endpoint
  for (std::size_t i = 0; i < n; ++i) {
    const TraceWord& w = bg.ball.words[i];
    if (w.length() == radius) continue;
    for (int v = 0; v < g.vertex_count(); ++v) {
      TraceWord u = left_multiply(v, w, g);
      up[i].push_back(bg.ball.index_of(u));
    }
  }
  bg.row_ptr.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bg.row_ptr[i + 1] += static_cast<std::uint32_t>(up[i].size());
    for (auto j : up[i]) ++bg.row_ptr[j + 1];
  }
  for (std::size_t i = 0; i < n; ++i) bg.row_ptr[i + 1] += bg.row_ptr[i];
  bg.adj.assign(bg.row_ptr.back(), 0);
  std::vector<std::uint32_t> cursor(bg.row_ptr.begin(), bg.row_ptr.end() - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : up[i]) {
      bg.adj[cursor[i]++] = j;
      bg.adj[cursor[j]++] = static_cast<std::uint32_t>(i);
    }
  return bg;
}

namespace {

WalkCountTable walk_counts_impl(const BallGraph& bg, int p_max,
                                bool parallel) {
  if (p_max < 0 || p_max > 10)
    throw GuardError("walk counts limited to 0 <= p <= 10");
  if (bg.ball.radius < p_max)
    throw std::invalid_argument("ball radius too small for requested order");
  WalkCountTable table;
  table.counts.assign(static_cast<std::size_t>(p_max) + 1, BigInt(0));
  table.counts[0] = 1;
  if (p_max == 0) return table;
  const auto n = bg.ball.size();
  std::vector<BigInt> cur(n, BigInt(0)), next(n, BigInt(0));
  cur[0] = 1;
  for (int step = 1; step <= 2 * p_max; ++step) {
    const auto row_ptr = bg.row_ptr.data();
    const auto adj = bg.adj.data();
    // accumulate in place so mpz limb buffers are reused across steps
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 512)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        BigInt& s = next[static_cast<std::size_t>(i)];
        s = 0;
        for (auto k = row_ptr[i]; k < row_ptr[i + 1]; ++k) s += cur[adj[k]];
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        BigInt& s = next[i];
        s = 0;
        for (auto k = row_ptr[i]; k < row_ptr[i + 1]; ++k) s += cur[adj[k]];
      }
    }
    cur.swap(next);
    if (step % 2 == 0) table.counts[static_cast<std::size_t>(step) / 2] = cur[0];
  }
  return table;
}

}  // namespace

WalkCountTable walk_count_table(const SimpleGraph& g, int p_max,
                                std::size_t guard) {
  if (p_max < 0 || p_max > 10)
    throw GuardError("walk counts limited to 0 <= p <= 10");
  if (p_max == 0) return WalkCountTable{{BigInt(1)}};
  return walk_counts_impl(build_ball_graph(g, p_max, guard), p_max, true);
}

WalkCountTable walk_count_table_ref(const SimpleGraph& g, int p_max,
                                    std::size_t guard) {
  if (p_max < 0 || p_max > 10)
    throw GuardError("walk counts limited to 0 <= p <= 10");
  if (p_max == 0) return WalkCountTable{{BigInt(1)}};
  return walk_counts_impl(build_ball_graph(g, p_max, guard), p_max, false);
}

WalkCountTable walk_count_table_on(const BallGraph& bg, int p_max) {
  return walk_counts_impl(bg, p_max, true);
}

WalkCountTable walk_count_table_on_ref(const BallGraph& bg, int p_max) {
  return walk_counts_impl(bg, p_max, false);
}

BigInt closed_walk_count(const SimpleGraph& g, int p, std::size_t guard) {
  return walk_count_table(g, p, guard).counts[static_cast<std::size_t>(p)];
}

// ---------------------------------------------------------------------------
// The bijection Phi

namespace {

struct TimedBlock {
  int s;  // 1-based opening time
  int r;  // 1-based return time
  int label;
};

// Path as W[0..2m] with W[0] = e, built recursively over timed blocks.
std::vector<TraceWord> phi_rec(std::vector<TimedBlock> blocks,
                               const SimpleGraph& g) {
  int m = static_cast<int>(blocks.size());
  std::vector<TraceWord> w(static_cast<std::size_t>(2 * m) + 1);
  if (m == 0) return w;
  std::size_t first = 0;
  for (std::size_t b = 1; b < blocks.size(); ++b)
    if (blocks[b].r < blocks[first].r) first = b;
  const int s = blocks[first].s, r = blocks[first].r, letter = blocks[first].label;
  blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(first));
  // order-preserving contraction of the remaining times onto [1, 2m-2]
  for (auto& b : blocks) {
    b.s -= (b.s > s) + (b.s > r);
    b.r -= (b.r > s) + (b.r > r);
  }
  std::vector<TraceWord> u = phi_rec(std::move(blocks), g);
  for (int t = 1; t <= 2 * m; ++t) {
    if (t < s)
      w[static_cast<std::size_t>(t)] = u[static_cast<std::size_t>(t)];
    else if (t == s)
      w[static_cast<std::size_t>(t)] =
          left_multiply(letter, u[static_cast<std::size_t>(s) - 1], g);
    else if (t < r)
      w[static_cast<std::size_t>(t)] =
          left_multiply(letter, u[static_cast<std::size_t>(t) - 1], g);
    else if (t == r)
      w[static_cast<std::size_t>(t)] = u[static_cast<std::size_t>(r) - 2];
    else
      w[static_cast<std::size_t>(t)] = u[static_cast<std::size_t>(t) - 2];
  }
  return w;
}

}  // namespace

CayleyPath phi(const LabeledPartition& lp, const SimpleGraph& g) {
  validate_labeled_partition(lp, g);
  std::vector<TimedBlock> blocks;
  blocks.reserve(lp.partition.blocks.size());
  for (std::size_t b = 0; b < lp.partition.blocks.size(); ++b)
    blocks.push_back(TimedBlock{lp.partition.blocks[b].first + 1,
                                lp.partition.blocks[b].second + 1,
                                lp.labels[b]});
  std::vector<TraceWord> w = phi_rec(std::move(blocks), g);
  CayleyPath path;
  path.words.assign(w.begin() + 1, w.end());
  return path;
}

namespace {

std::vector<TimedBlock> phi_inverse_rec(const std::vector<TraceWord>& w,
                                        const SimpleGraph& g) {
  // w is the extended path W[0..2m], W[0] = W[2m] = e
  int m = static_cast<int>(w.size() - 1) / 2;
  if (m == 0) return {};
  int r = -1;
  for (int t = 1; t <= 2 * m; ++t)
    if (w[static_cast<std::size_t>(t)].length() <
        w[static_cast<std::size_t>(t) - 1].length()) {
      r = t;
      break;
    }
  auto removed = connecting_letter(w[static_cast<std::size_t>(r) - 1],
                                   w[static_cast<std::size_t>(r)], g);
  if (!removed)
    throw std::invalid_argument("malformed path: first down step is not a "
                                "left division");
  const int letter = *removed;
  int s = -1;
  for (int q = r - 1; q >= 1; --q) {
    auto added = connecting_letter(w[static_cast<std::size_t>(q)],
                                   w[static_cast<std::size_t>(q) - 1], g);
    if (!added)
      throw std::invalid_argument("malformed path: up step is not a left "
                                  "multiplication");
    if (*added == letter) {
      s = q;
      break;
    }
  }
  if (s < 0)
    throw std::invalid_argument("malformed path: removed letter was never "
                                "added");
  std::vector<TraceWord> u(static_cast<std::size_t>(2 * m) - 1);
  for (int t = 0; t <= 2 * m; ++t) {
    if (t == s || t == r) continue;
    int ct = t - (t > s) - (t > r);
    if (t > s && t < r) {
      auto d = left_divide(letter, w[static_cast<std::size_t>(t)], g);
      if (!d)
        throw std::invalid_argument(
            "malformed path: block letter not removable between its "
            "endpoints");
      u[static_cast<std::size_t>(ct)] = std::move(*d);
    } else {
      u[static_cast<std::size_t>(ct)] = w[static_cast<std::size_t>(t)];
    }
  }
  std::vector<TimedBlock> blocks = phi_inverse_rec(u, g);
  for (auto& b : blocks) {
    b.s += (b.s >= s) + (b.s >= r - 1);
    b.r += (b.r >= s) + (b.r >= r - 1);
  }
  blocks.push_back(TimedBlock{s, r, letter});
  return blocks;
}

}  // namespace

LabeledPartition phi_inverse(const CayleyPath& path, const SimpleGraph& g) {
  validate_closed_path(path, g);
  std::vector<TraceWord> w(path.words.size() + 1);
  for (std::size_t t = 0; t < path.words.size(); ++t) w[t + 1] = path.words[t];
  std::vector<TimedBlock> blocks = phi_inverse_rec(w, g);
  std::sort(blocks.begin(), blocks.end(),
            [](const TimedBlock& a, const TimedBlock& b) { return a.s < b.s; });
  LabeledPartition lp;
  lp.partition.p = static_cast<int>(blocks.size());
  for (const auto& b : blocks) {
    lp.partition.blocks.emplace_back(b.s - 1, b.r - 1);
    lp.labels.push_back(b.label);
  }
  validate_labeled_partition(lp, g);
  return lp;
}

DyckPath dyck_of_path(const CayleyPath& path) {
  DyckPath eps;
  eps.steps.reserve(path.words.size());
  for (std::size_t t = 1; t <= path.words.size(); ++t) {
    const TraceWord& prev = t == 1 ? TraceWord{} : path.words[t - 2];
    eps.steps.push_back(path.words[t - 1].length() > prev.length() ? 1 : -1);
  }
  return eps;
}

std::vector<CayleyPath> enumerate_labeled_paths(
    const SimpleGraph& g, const DyckPath& eps,
    const std::vector<int>& up_labels) {
  validate_dyck(eps);
  std::size_t ups = 0;
  for (int s : eps.steps) ups += (s == 1);
  if (up_labels.size() != ups)
    throw std::invalid_argument("one label per up step required");
  for (int v : up_labels)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("up label out of vertex range");

  std::vector<CayleyPath> out;
  std::vector<TraceWord> prefix;
  TraceWord cur;
  // At a down step any first-clique letter may be removed; every branch
  // completes because the Dyck shape keeps the word nonempty at down steps.
  auto rec = [&](auto&& self, std::size_t k, std::size_t up_idx) -> void {
    if (k == eps.steps.size()) {
      out.push_back(CayleyPath{prefix});
      return;
    }
    if (eps.steps[k] == 1) {
      TraceWord saved = cur;
      cur = left_multiply(up_labels[up_idx], cur, g);
      prefix.push_back(cur);
      self(self, k + 1, up_idx + 1);
      prefix.pop_back();
      cur = std::move(saved);
    } else {
      TraceWord saved = cur;
      for (std::uint64_t m = removable_letters(saved); m; m &= m - 1) {
        int v = std::countr_zero(m);
        cur = *left_divide(v, saved, g);
        prefix.push_back(cur);
        self(self, k + 1, up_idx);
        prefix.pop_back();
      }
      cur = std::move(saved);
    }
  };
  rec(rec, 0, 0);
  return out;
}

PathBoundReport verify_path_count_bound(const SimpleGraph& g,
                                        const DyckPath& eps,
                                        const std::vector<int>& up_labels) {
  PathBoundReport rep;
  rep.set_size = static_cast<long>(enumerate_labeled_paths(g, eps, up_labels).size());
  CliqueReport cr = clique_report(g);
  rep.clique_bound = 1;
  for (int v : up_labels)
    rep.clique_bound *= cr.per_vertex[static_cast<std::size_t>(v)];
  rep.factorial_bound = factorial(static_cast<unsigned>(up_labels.size()));
  rep.holds = rep.set_size <= std::min(rep.clique_bound, rep.factorial_bound);
  return rep;
}

namespace {

struct PathKey {
  std::size_t operator()(const CayleyPath& path) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    TraceWordHash wh;
    for (const auto& w : path.words) h = h * 1099511628211ull ^ wh(w);
    return h;
  }
};

}  // namespace

BijectionCheck verify_bijection(const SimpleGraph& g, int p) {
  BijectionCheck check;
  check.walk_count = closed_walk_count(g, p);
  std::unordered_map<CayleyPath, int, PathKey, std::equal_to<CayleyPath>> seen;
  for_each_pair_partition(p, [&](const PairPartition& pi) {
    SimpleGraph f = intersection_graph(pi).underlying;
    for_each_hom(f, g, [&](const std::vector<int>& labels) {
      LabeledPartition lp{pi, labels};
      CayleyPath path = phi(lp, g);
      ++check.pi_count;
      try {
        validate_closed_path(path, g);
      } catch (const std::invalid_argument&) {
        check.all_valid = false;
      }
      if (++seen[path] > 1) check.injective = false;
      auto len_at = [&](int t) {
        return t == 0 ? 0 : path.words[static_cast<std::size_t>(t) - 1].length();
      };
      for (auto [s, r] : pi.blocks)
        if (len_at(s + 1) != len_at(s) + 1 || len_at(r + 1) != len_at(r) - 1)
          check.length_rule = false;
      if (phi_inverse(path, g) != lp) check.roundtrip_identity = false;
    });
  });
  check.counts_match = check.pi_count == check.walk_count;
  return check;
}

std::vector<double> spectral_lower_bounds(const SimpleGraph& g, int p_max,
                                          std::size_t guard) {
  WalkCountTable table = walk_count_table(g, p_max, guard);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(p_max));
  for (int p = 1; p <= p_max; ++p)
    out.push_back(std::pow(table.counts[static_cast<std::size_t>(p)].get_d(),
                           1.0 / (2.0 * p)));
  return out;
}

double spectral_power_estimate(const SimpleGraph& g, int radius, double tol,
                               std::size_t guard) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  BallGraph bg = build_ball_graph(g, radius, guard);
  SparseSymOperator a(static_cast<int>(bg.ball.size()), true);
  for (std::size_t i = 0; i < bg.ball.size(); ++i)
    for (auto k = bg.row_ptr[i]; k < bg.row_ptr[i + 1]; ++k)
      if (bg.adj[k] > i) a.add(static_cast<int>(i), static_cast<int>(bg.adj[k]), 1.0);
  a.compile();
  if (a.stored_entries() == 0) return 0.0;
  return power_iteration_top(a, 1.0, tol);
}

}  // namespace gsemi
