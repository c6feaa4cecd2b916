#include "gsemi/trace_monoid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "gsemi/numeric.hpp"

namespace gsemi {

int TraceWord::length() const {
  int len = 0;
  for (auto m : cliques) len += std::popcount(m);
  return len;
}

std::vector<int> TraceWord::letters() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (auto m : cliques)
    while (m) {
      out.push_back(std::countr_zero(m));
      m &= m - 1;
    }
  return out;
}

bool word_less(const TraceWord& a, const TraceWord& b) {
  int la = a.length(), lb = b.length();
  if (la != lb) return la < lb;
  return a.letters() < b.letters();
}

bool is_clique_mask(const SimpleGraph& g, std::uint64_t mask) {
  for (std::uint64_t m = mask; m; m &= m - 1) {
    int v = std::countr_zero(m);
    if ((mask & ~(1ull << v)) & ~g.neighbor_mask(v)) return false;
  }
  return true;
}

bool is_normal_position(std::uint64_t c, std::uint64_t c_next,
                        const SimpleGraph& g) {
  if (!is_clique_mask(g, c) || !is_clique_mask(g, c_next))
    throw std::invalid_argument("is_normal_position requires clique inputs");
  for (std::uint64_t m = c_next; m; m &= m - 1) {
    int v = std::countr_zero(m);
    // letters that do not commute with v: non-neighbors, including v itself
    if ((c & ~g.neighbor_mask(v)) == 0) return false;
  }
  return true;
}

namespace {

void check_letter(int v, const SimpleGraph& g) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("letter out of range: " + std::to_string(v));
}

// Heap-level construction: each letter lands one level below the deepest
// earlier letter it does not commute with. Processing any word order of a
// trace yields its Cartier-Foata cliques as the levels.
void place_letter(std::vector<std::uint64_t>& levels, int v,
                  const SimpleGraph& g) {
  std::uint64_t noncomm = ~g.neighbor_mask(v);
  int lvl = 0;
  for (int j = static_cast<int>(levels.size()) - 1; j >= 0; --j)
    if (levels[static_cast<std::size_t>(j)] & noncomm) {
      lvl = j + 1;
      break;
    }
  if (lvl == static_cast<int>(levels.size())) levels.push_back(0);
  levels[static_cast<std::size_t>(lvl)] |= 1ull << v;
}

TraceWord from_levels(std::vector<std::uint64_t> levels) {
  while (!levels.empty() && levels.back() == 0) levels.pop_back();
  return TraceWord{std::move(levels)};
}

}  // namespace

TraceWord left_multiply(int v, const TraceWord& w, const SimpleGraph& g) {
  check_letter(v, g);
  std::vector<std::uint64_t> levels;
  levels.reserve(w.cliques.size() + 1);
  levels.push_back(1ull << v);
  for (auto clique : w.cliques)
    for (std::uint64_t m = clique; m; m &= m - 1)
      place_letter(levels, std::countr_zero(m), g);
  return from_levels(std::move(levels));
}

std::optional<TraceWord> left_divide(int v, const TraceWord& w,
                                     const SimpleGraph& g) {
  check_letter(v, g);
  if (!(removable_letters(w) >> v & 1)) return std::nullopt;
  std::vector<std::uint64_t> levels;
  levels.reserve(w.cliques.size());
  bool first = true;
  for (auto clique : w.cliques) {
    std::uint64_t rest = first ? clique & ~(1ull << v) : clique;
    first = false;
    for (std::uint64_t m = rest; m; m &= m - 1)
      place_letter(levels, std::countr_zero(m), g);
  }
  return from_levels(std::move(levels));
}

std::uint64_t removable_letters(const TraceWord& w) {
  return w.first_clique_mask();
}

int first_clique_size(const TraceWord& w) {
  return std::popcount(w.first_clique_mask());
}

TraceWord normalize(const std::vector<int>& letters, const SimpleGraph& g) {
  TraceWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w = left_multiply(*it, w, g);
  return w;
}

std::uint32_t WordBall::index_of(const TraceWord& w) const {
  auto it = index.find(w);
  if (it == index.end())
    throw std::invalid_argument("word not contained in ball");
  return it->second;
}

WordBall enumerate_ball(const SimpleGraph& g, int radius, std::size_t guard) {
  if (radius < 0 || radius > 64)
    throw GuardError("ball radius limited to 0 <= r <= 64");
  WordBall ball;
  ball.graph = g;
  ball.radius = radius;
  ball.words.push_back(TraceWord{});
  ball.index.emplace(TraceWord{}, 0);
  ball.level_offsets.push_back(0);

  std::size_t level_begin = 0;
  for (int len = 1; len <= radius; ++len) {
    std::size_t level_end = ball.words.size();
    ball.level_offsets.push_back(static_cast<std::uint32_t>(level_end));
    std::vector<TraceWord> next;
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (int v = 0; v < g.vertex_count(); ++v) {
        TraceWord u = left_multiply(v, ball.words[i], g);
        if (!ball.index.count(u)) {
          ball.index.emplace(u, 0);  // placeholder until sorted
          next.push_back(std::move(u));
        }
      }
    std::sort(next.begin(), next.end(), word_less);
    for (auto& u : next) {
      if (ball.words.size() >= guard)
        throw GuardError("ball size guard exceeded", ball.words.size());
      ball.index[u] = static_cast<std::uint32_t>(ball.words.size());
      ball.words.push_back(std::move(u));
    }
    level_begin = level_end;
  }
  ball.level_offsets.push_back(static_cast<std::uint32_t>(ball.words.size()));
  return ball;
}

}  // namespace gsemi
