#include <doctest.h>

#include <cmath>
#include <map>

#include "gsemi/cayley.hpp"
#include "gsemi/corpus.hpp"
#include "gsemi/moments.hpp"

using namespace gsemi;

namespace {

TraceWord word(const std::vector<int>& letters, const SimpleGraph& g) {
  return normalize(letters, g);
}

}  // namespace

TEST_CASE("closed walk counts") {
  for (int L = 1; L <= 4; ++L)
    CHECK(closed_walk_count(edgeless_graph(L), 1) == L);
  CHECK(closed_walk_count(complete_graph(2), 2) == 10);
  for (int p = 1; p <= 6; ++p)
    CHECK(closed_walk_count(edgeless_graph(1), p) ==
          catalan(static_cast<unsigned>(p)));
}

TEST_CASE("walk table parallel matches serial reference") {
  for (const SimpleGraph& g : {turan_graph(4, 2), minimizer_graph(5, 2),
                               complete_graph(3), path_graph(4)}) {
    WalkCountTable a = walk_count_table(g, 4);
    WalkCountTable b = walk_count_table_ref(g, 4);
    REQUIRE(a.counts.size() == b.counts.size());
    for (std::size_t i = 0; i < a.counts.size(); ++i)
      CHECK(a.counts[i] == b.counts[i]);
  }
}

TEST_CASE("log-superadditivity of walk counts") {
  for (const SimpleGraph& g :
       {turan_graph(4, 2), minimizer_graph(4, 2), complete_graph(3)}) {
    WalkCountTable t = walk_count_table(g, 4);
    for (int p = 1; p <= 3; ++p)
      for (int q = 1; p + q <= 4; ++q)
        CHECK(t.counts[static_cast<std::size_t>(p + q)] >=
              t.counts[static_cast<std::size_t>(p)] *
                  t.counts[static_cast<std::size_t>(q)]);
  }
}

TEST_CASE("phi on the base and landmark cases") {
  SimpleGraph k2 = complete_graph(2);

  // single block: (i, e)
  LabeledPartition base{{1, {{0, 1}}}, {1}};
  CayleyPath path = phi(base, k2);
  REQUIRE(path.words.size() == 2);
  CHECK(path.words[0] == word({1}, k2));
  CHECK(path.words[1].empty());

  // crossing pair on commuting letters: (a, ba, b, e)
  LabeledPartition crossing{{2, {{0, 2}, {1, 3}}}, {0, 1}};
  path = phi(crossing, k2);
  REQUIRE(path.words.size() == 4);
  CHECK(path.words[0] == word({0}, k2));
  CHECK(path.words[1] == word({1, 0}, k2));
  CHECK(path.words[2] == word({1}, k2));
  CHECK(path.words[3].empty());

  // disjoint blocks never interact: (a, e, b, e)
  SimpleGraph n2 = edgeless_graph(2);
  LabeledPartition disjoint{{2, {{0, 1}, {2, 3}}}, {0, 1}};
  path = phi(disjoint, n2);
  REQUIRE(path.words.size() == 4);
  CHECK(path.words[0] == word({0}, n2));
  CHECK(path.words[1].empty());
  CHECK(path.words[2] == word({1}, n2));
  CHECK(path.words[3].empty());

  // crossing blocks with non-adjacent labels are not a homomorphism
  CHECK_THROWS_AS(phi(LabeledPartition{{2, {{0, 2}, {1, 3}}}, {0, 1}}, n2),
                  std::invalid_argument);
}

TEST_CASE("phi_inverse on the landmark cases") {
  SimpleGraph k2 = complete_graph(2);
  CayleyPath base{{word({1}, k2), TraceWord{}}};
  LabeledPartition lp = phi_inverse(base, k2);
  CHECK(lp.partition.blocks == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(lp.labels == std::vector<int>{1});

  CayleyPath crossing{
      {word({0}, k2), word({1, 0}, k2), word({1}, k2), TraceWord{}}};
  lp = phi_inverse(crossing, k2);
  CHECK(lp.partition.blocks ==
        std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  CHECK(lp.labels == std::vector<int>{0, 1});

  SimpleGraph n2 = edgeless_graph(2);
  CayleyPath disjoint{
      {word({0}, n2), TraceWord{}, word({1}, n2), TraceWord{}}};
  lp = phi_inverse(disjoint, n2);
  CHECK(lp.partition.blocks ==
        std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK(lp.labels == std::vector<int>{0, 1});

  // malformed: does not return to e
  CayleyPath bad{{word({0}, n2), word({1, 0}, n2)}};
  CHECK_THROWS_AS(phi_inverse(bad, n2), std::invalid_argument);
}

TEST_CASE("bijection verified exhaustively on small graphs") {
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    SimpleGraph g = graph_from_edge_mask(3, mask);
    for (int p = 1; p <= 3; ++p) {
      BijectionCheck check = verify_bijection(g, p);
      CAPTURE(mask);
      CAPTURE(p);
      CHECK(check.ok());
      CHECK(check.pi_count == moment_unweighted(g, p));
    }
  }
  // deeper roundtrip sample at p = 4
  for (const SimpleGraph& g : {turan_graph(4, 2), path_graph(4)})
    CHECK(verify_bijection(g, 4).ok());
}

TEST_CASE("engines agree at higher orders") {
  for (const SimpleGraph& g : {turan_graph(4, 2), minimizer_graph(4, 2)})
    for (int p = 4; p <= 5; ++p)
      CHECK(moment_unweighted(g, p) == closed_walk_count(g, p));
}

TEST_CASE("walk table on a prebuilt ball checks the radius") {
  BallGraph bg = build_ball_graph(complete_graph(2), 2);
  CHECK(walk_count_table_on(bg, 2).counts ==
        walk_count_table_on_ref(bg, 2).counts);
  CHECK_THROWS_AS(walk_count_table_on(bg, 3), std::invalid_argument);
}

TEST_CASE("dyck_of_path") {
  SimpleGraph k2 = complete_graph(2);
  CayleyPath up_down{{word({0}, k2), TraceWord{}}};
  CHECK(dyck_of_path(up_down).steps == std::vector<int>{1, -1});

  CayleyPath mountain{
      {word({0}, k2), word({1, 0}, k2), word({1}, k2), TraceWord{}}};
  CHECK(dyck_of_path(mountain).steps == std::vector<int>{1, 1, -1, -1});

  SimpleGraph n2 = edgeless_graph(2);
  CayleyPath two_peaks{
      {word({0}, n2), TraceWord{}, word({1}, n2), TraceWord{}}};
  CHECK(dyck_of_path(two_peaks).steps == std::vector<int>{1, -1, 1, -1});
}

TEST_CASE("labeled path enumeration") {
  DyckPath mountain{{1, 1, -1, -1}};
  DyckPath two_peaks{{1, -1, 1, -1}};

  // commuting letters: either may be removed first
  auto paths = enumerate_labeled_paths(complete_graph(2), mountain, {0, 1});
  CHECK(paths.size() == 2);
  // free letters force last-in-first-out removal
  paths = enumerate_labeled_paths(edgeless_graph(2), mountain, {0, 1});
  CHECK(paths.size() == 1);
  // one path per labeling when every down step is forced
  paths = enumerate_labeled_paths(edgeless_graph(2), two_peaks, {0, 1});
  CHECK(paths.size() == 1);
  DyckPath single{{1, -1}};
  paths = enumerate_labeled_paths(complete_graph(3), single, {2});
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].words[0] == word({2}, complete_graph(3)));

  CHECK_THROWS_AS(enumerate_labeled_paths(complete_graph(2), mountain, {0}),
                  std::invalid_argument);
}

TEST_CASE("path count bound reports") {
  DyckPath mountain{{1, 1, -1, -1}};
  PathBoundReport rep =
      verify_path_count_bound(complete_graph(2), mountain, {0, 1});
  CHECK(rep.set_size == 2);
  CHECK(rep.clique_bound == 4);
  CHECK(rep.factorial_bound == 2);
  CHECK(rep.holds);

  rep = verify_path_count_bound(edgeless_graph(2), mountain, {0, 1});
  CHECK(rep.set_size == 1);
  CHECK(rep.clique_bound == 1);
  CHECK(rep.holds);
}

TEST_CASE("shape-and-label decomposition partitions the closed paths") {
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    SimpleGraph g = graph_from_edge_mask(3, mask);
    for (int p = 1; p <= 3; ++p) {
      BigInt total = 0;
      for_each_dyck_path(p, [&](const DyckPath& eps) {
        std::vector<int> labels(static_cast<std::size_t>(p), 0);
        while (true) {
          total += static_cast<long>(
              enumerate_labeled_paths(g, eps, labels).size());
          int i = 0;
          while (i < p && ++labels[static_cast<std::size_t>(i)] == 3) {
            labels[static_cast<std::size_t>(i)] = 0;
            ++i;
          }
          if (i == p) break;
        }
      });
      CHECK(total == closed_walk_count(g, p));
    }
  }
}

TEST_CASE("spectral lower bounds") {
  auto free_bounds = spectral_lower_bounds(edgeless_graph(1), 4);
  REQUIRE(free_bounds.size() == 4);
  CHECK(free_bounds[0] == doctest::Approx(1.0));
  CHECK(free_bounds[1] == doctest::Approx(std::pow(2.0, 0.25)));
  CHECK(free_bounds[2] == doctest::Approx(std::pow(5.0, 1.0 / 6.0)));
  CHECK(free_bounds[3] == doctest::Approx(std::pow(14.0, 0.125)));

  auto k2_bounds = spectral_lower_bounds(complete_graph(2), 2);
  CHECK(k2_bounds[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(k2_bounds[1] == doctest::Approx(std::pow(10.0, 0.25)));

  for (int L = 1; L <= 4; ++L)
    CHECK(spectral_lower_bounds(edgeless_graph(L), 1)[0] ==
          doctest::Approx(std::sqrt(static_cast<double>(L))));
}

TEST_CASE("lower bounds stay below the clique upper bound on the corpus") {
  for (const auto& [name, g] : corpus()) {
    CAPTURE(name);
    double upper = 2.0 * std::sqrt(static_cast<double>(clique_number(g)) *
                                   g.vertex_count());
    for (double lb : spectral_lower_bounds(g, 3))
      CHECK(lb <= upper + 1e-9);
  }
}

TEST_CASE("spectral power estimate") {
  // single letter: ball of radius R is the path graph P_{R+1}
  double est = spectral_power_estimate(edgeless_graph(1), 20, 1e-10);
  CHECK(est == doctest::Approx(2.0 * std::cos(M_PI / 22.0)).epsilon(1e-6));
  CHECK(spectral_power_estimate(complete_graph(3), 0, 1e-10) == 0.0);

  double e2 = spectral_power_estimate(complete_graph(2), 2, 1e-10);
  double e4 = spectral_power_estimate(complete_graph(2), 4, 1e-10);
  double e6 = spectral_power_estimate(complete_graph(2), 6, 1e-10);
  CHECK(e2 <= e4 + 1e-12);
  CHECK(e4 <= e6 + 1e-12);
  // two commuting independent semicircles: ||s1 + s2|| = 2 sqrt(omega L) = 4
  CHECK(e6 <= 4.0 + 1e-9);
  CHECK(e6 > 3.0);
}
