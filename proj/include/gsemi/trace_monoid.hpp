#ifndef GSEMI_TRACE_MONOID_HPP
#define GSEMI_TRACE_MONOID_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gsemi/graph.hpp"

namespace gsemi {

// Element of the trace monoid T(G) in Cartier-Foata normal form: a
// sequence of cliques (bitmasks over V(G)), consecutive cliques in normal
// position. Within a clique letters are kept in ascending order, which
// fixes the representation uniquely. The empty word has no cliques.
struct TraceWord {
  std::vector<std::uint64_t> cliques;

  bool empty() const { return cliques.empty(); }
  int length() const;
  std::uint64_t first_clique_mask() const {
    return cliques.empty() ? 0 : cliques.front();
  }
  // Letters in normal-form order (each clique ascending).
  std::vector<int> letters() const;

  bool operator==(const TraceWord&) const = default;
};

struct TraceWordHash {
  std::size_t operator()(const TraceWord& w) const {
    std::size_t h = 1469598103934665603ull;
    for (auto m : w.cliques) {
      h ^= static_cast<std::size_t>(m);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Deterministic order: by length, then lexicographic on flattened letters.
bool word_less(const TraceWord& a, const TraceWord& b);

// True iff mask is a clique of g (pairwise adjacent letters).
bool is_clique_mask(const SimpleGraph& g, std::uint64_t mask);

// Normal position c -> c_next: no letter of c_next commutes with every
// letter of c. Equal letters never commute (G is loopless). Rejects
// non-clique inputs.
bool is_normal_position(std::uint64_t c, std::uint64_t c_next,
                        const SimpleGraph& g);

// Normal form of v * w; |result| = |w| + 1.
TraceWord left_multiply(int v, const TraceWord& w, const SimpleGraph& g);

// The unique w' with w = v * w', if v is removable; absence is a value.
std::optional<TraceWord> left_divide(int v, const TraceWord& w,
                                     const SimpleGraph& g);

// Letters of the first Foata clique; empty mask for e.
std::uint64_t removable_letters(const TraceWord& w);

// k(w) = size of the first clique; k(e) = 0.
int first_clique_size(const TraceWord& w);

// Unique Cartier-Foata normal form of the letter sequence, built by
// folding letters right-to-left through left_multiply.
TraceWord normalize(const std::vector<int>& letters, const SimpleGraph& g);

// All trace words of length <= radius with a stable index; index 0 is e,
// order within a length level is lexicographic.
struct WordBall {
  SimpleGraph graph;
  int radius = 0;
  std::vector<TraceWord> words;
  std::unordered_map<TraceWord, std::uint32_t, TraceWordHash> index;
  std::vector<std::uint32_t> level_offsets;  // first index of each length

  std::uint32_t index_of(const TraceWord& w) const;
  bool contains(const TraceWord& w) const { return index.count(w) > 0; }
  std::size_t size() const { return words.size(); }
};

inline constexpr std::size_t kDefaultBallGuard = 10'000'000;

WordBall enumerate_ball(const SimpleGraph& g, int radius,
                        std::size_t guard = kDefaultBallGuard);

}  // namespace gsemi

#endif
