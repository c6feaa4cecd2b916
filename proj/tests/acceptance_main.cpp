// Acceptance suite: twelve exact-oracle and property criteria, one
// pass/fail line each. Exit status is the number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsemi/cayley.hpp"
#include "gsemi/corpus.hpp"
#include "gsemi/fock.hpp"
#include "gsemi/moments.hpp"

using namespace gsemi;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::printf("%s criterion %2d: %s (%s, %.0f ms)\n", ok ? "PASS" : "FAIL",
              number, label.c_str(), detail.c_str(), ms);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::vector<SimpleGraph> all_graphs_up_to_4() {
  std::vector<SimpleGraph> out;
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t mask = 0; mask < (1ull << (n * (n - 1) / 2)); ++mask)
      out.push_back(graph_from_edge_mask(n, mask));
  return out;
}

struct PathKey {
  std::size_t operator()(const CayleyPath& path) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    TraceWordHash wh;
    for (const auto& w : path.words) h = h * 1099511628211ull ^ wh(w);
    return h;
  }
};

CoefficientVector random_dyadic_alpha(int L, std::mt19937& rng) {
  std::uniform_int_distribution<int> k(-64, 64);
  CoefficientVector cv;
  for (int i = 0; i < L; ++i)
    cv.values.push_back({static_cast<double>(k(rng)) / 64.0, 0.0});
  return cv;
}

}  // namespace

int main() {
  const auto small_graphs = all_graphs_up_to_4();
  const auto the_corpus = corpus();

  criterion(1, "master identity: moments = closed walks = |Pi_2p| via Phi",
            [&](std::string& detail) {
    long checked = 0;
    for (const SimpleGraph& g : small_graphs)
      for (int p = 1; p <= 4; ++p) {
        BigInt moment = moment_unweighted(g, p);
        BigInt walks = closed_walk_count(g, p);
        std::unordered_map<CayleyPath, int, PathKey> images;
        BigInt pi_count = 0;
        bool valid = true;
        for_each_pair_partition(p, [&](const PairPartition& pi) {
          for_each_hom(intersection_graph(pi).underlying, g,
                       [&](const std::vector<int>& labels) {
            CayleyPath path = phi(LabeledPartition{pi, labels}, g);
            ++pi_count;
            try {
              validate_closed_path(path, g);
            } catch (const std::invalid_argument&) {
              valid = false;
            }
            ++images[path];
          });
        });
        bool injective = BigInt(static_cast<long>(images.size())) == pi_count;
        if (!(moment == walks && walks == pi_count && injective && valid))
          return false;
        ++checked;
      }
    detail = std::to_string(checked) + " (graph, p) pairs, exact";
    return true;
  });

  criterion(2, "free case: normalized moments are the Catalan numbers",
            [&](std::string& detail) {
    const long expect[] = {1, 2, 5, 14, 42};
    for (int L = 1; L <= 4; ++L)
      for (int p = 1; p <= 5; ++p)
        if (moment_normalized(edgeless_graph(L), p) != BigRat(expect[p - 1]))
          return false;
    detail = "L = 1..4, p = 1..5, exact rationals";
    return true;
  });

  criterion(3, "K2 landmark: tau((s1+s2)^4) = 10 by all three engines",
            [&](std::string& detail) {
    SimpleGraph k2 = complete_graph(2);
    BigInt partitions = moment_unweighted(k2, 2);
    BigInt walks = closed_walk_count(k2, 2);
    FockBasis fb = build_fock_basis(k2, 2);
    BigInt vacuum = vacuum_moment_exact(weighted_semicircle_sum(fb), 4, fb);
    detail = partitions.get_str() + " / " + walks.get_str() + " / " +
             vacuum.get_str();
    return partitions == 10 && walks == 10 && vacuum == 10;
  });

  criterion(4, "scalar Khintchine on 100 seeded weights per corpus graph",
            [&](std::string& detail) {
    double min_slack = 1e300;
    for (std::size_t gi = 0; gi < the_corpus.size(); ++gi) {
      const SimpleGraph& g = the_corpus[gi].graph;
      std::mt19937 rng(1000u + static_cast<unsigned>(gi));
      for (int p = 1; p <= 4; ++p)
        for (int trial = 0; trial < 100; ++trial) {
          CoefficientVector alpha = random_dyadic_alpha(g.vertex_count(), rng);
          BoundReport rep = check_scalar_khintchine(g, p, alpha);
          min_slack = std::min(min_slack,
                               rep.slack / std::max(1.0, std::abs(rep.rhs)));
          if (rep.slack < -1e-9 * std::max(1.0, std::abs(rep.rhs)))
            return false;
        }
    }
    detail = "min relative slack " + std::to_string(min_slack);
    return true;
  });

  criterion(5, "labeled-path sets bounded by min(prod c*, p!)",
            [&](std::string& detail) {
    long checked = 0;
    for (const SimpleGraph& g : small_graphs) {
      int L = g.vertex_count();
      for (int p = 1; p <= 3; ++p) {
        bool ok = true;
        for_each_dyck_path(p, [&](const DyckPath& eps) {
          std::vector<int> labels(static_cast<std::size_t>(p), 0);
          while (true) {
            PathBoundReport rep = verify_path_count_bound(g, eps, labels);
            ++checked;
            if (!rep.holds) ok = false;
            int i = 0;
            while (i < p && ++labels[static_cast<std::size_t>(i)] == L) {
              labels[static_cast<std::size_t>(i)] = 0;
              ++i;
            }
            if (i == p) break;
          }
        });
        if (!ok) return false;
      }
    }
    detail = std::to_string(checked) + " (shape, labeling) sets, exact";
    return true;
  });

  criterion(6, "bijection: injective, valid, inverse roundtrip, length rule",
            [&](std::string& detail) {
    long checked = 0;
    for (const SimpleGraph& g : small_graphs)
      for (int p = 1; p <= 3; ++p) {
        BijectionCheck check = verify_bijection(g, p);
        if (!check.ok()) return false;
        ++checked;
      }
    detail = std::to_string(checked) + " exhaustive (graph, p) suites";
    return true;
  });

  criterion(7, "number operator norm equals the clique number",
            [&](std::string& detail) {
    for (const auto& [name, g] : the_corpus) {
      int omega = clique_number(g);
      for (int radius : {omega, omega + 1}) {
        FockBasis fb = build_fock_basis(g, radius);
        double norm = operator_norm(number_like_operator(fb), 1e-12);
        if (norm != static_cast<double>(omega)) return false;
      }
    }
    detail = "exact on " + std::to_string(the_corpus.size()) +
             " graphs at radius omega and omega+1";
    return true;
  });

  criterion(8, "operator-valued bound: 50 Hermitian coefficient sets per graph",
            [&](std::string& detail) {
    double min_slack = 1e300;
    const int radius = 6;
    for (std::size_t gi = 0; gi < the_corpus.size(); ++gi) {
      const SimpleGraph& g = the_corpus[gi].graph;
      FockBasis fb = build_fock_basis(g, radius);
      double sqrt_omega = std::sqrt(static_cast<double>(clique_number(g)));
      for (int d : {2, 3})
        for (int trial = 0; trial < 25; ++trial) {
          unsigned seed = 9000u + 97u * static_cast<unsigned>(gi) +
                          17u * static_cast<unsigned>(d) +
                          static_cast<unsigned>(trial);
          OperatorCoefficients coeffs =
              random_coefficients(g.vertex_count(), d, seed, true);
          double lhs = operator_norm(operator_valued_sum(coeffs, fb), 1e-7);
          double rhs = 2.0 * sqrt_omega * coefficient_two_norm(coeffs);
          min_slack = std::min(min_slack, rhs - lhs);
          if (lhs > rhs + 1e-6) return false;
        }
    }
    detail = "min slack " + std::to_string(min_slack) + " at radius 6";
    return true;
  });

  criterion(9, "Turan tightness: bounds rise toward 2 sqrt(omega L)",
            [&](std::string& detail) {
    SimpleGraph g = turan_graph(4, 2);
    const double target = 2.0 * std::sqrt(8.0);
    std::vector<double> lower = spectral_lower_bounds(g, 6);
    for (std::size_t i = 0; i < lower.size(); ++i) {
      if (lower[i] > target + 1e-9) return false;
      if (i > 0 && lower[i] <= lower[i - 1]) return false;
    }
    double compression = spectral_power_estimate(g, 8, 1e-10);
    detail = "radius-8 estimate " + std::to_string(compression) + " of " +
             std::to_string(target);
    return compression > 5.0 && compression <= target + 1e-9;
  });

  criterion(10, "moments never decrease when an edge is added",
            [&](std::string& detail) {
    // memoized moments over (n, edge mask): augmented graphs repeat
    std::map<std::pair<int, std::uint64_t>, std::vector<BigInt>> memo;
    auto moments_of = [&](const SimpleGraph& g) -> const std::vector<BigInt>& {
      auto key = std::make_pair(g.vertex_count(), edge_mask_of(g));
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      std::vector<BigInt> m;
      for (int p = 1; p <= 4; ++p) m.push_back(moment_unweighted(g, p));
      return memo.emplace(key, std::move(m)).first->second;
    };
    long checked = 0;
    for (const auto& [name, g] : the_corpus) {
      const std::vector<BigInt> before = moments_of(g);
      for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
          if (g.adjacent(u, v)) continue;
          const std::vector<BigInt>& after = moments_of(add_edge(g, u, v));
          for (int p = 1; p <= 4; ++p)
            if (before[static_cast<std::size_t>(p) - 1] >
                after[static_cast<std::size_t>(p) - 1])
              return false;
          ++checked;
        }
    }
    detail = std::to_string(checked) + " edge additions, p <= 4, exact";
    return true;
  });

  criterion(11, "extremal sweep: Turan maximizes, K2+N2 minimizes",
            [&](std::string& detail) {
    SweepTable table = extremal_sweep(4, 2, 3);
    for (int p = 1; p <= 3; ++p) {
      if (!table.turan_attains_max[static_cast<std::size_t>(p) - 1])
        return false;
      if (!table.minimizer_attains_min[static_cast<std::size_t>(p) - 1])
        return false;
    }
    detail = std::to_string(table.rows.size()) +
             " labeled graphs with omega = 2, p <= 3";
    return true;
  });

  criterion(12, "minimizer estimates land in the interval bracket",
            [&](std::string& detail) {
    std::string parts;
    for (auto [L, omega] :
         std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 3}}) {
      SimpleGraph g = minimizer_graph(L, omega);
      auto [lo, hi] = minimizer_interval(L, omega);
      double best = spectral_power_estimate(g, 7, 1e-10);
      for (double lb : spectral_lower_bounds(g, 5))
        best = std::max(best, lb);
      double normalized = best / std::sqrt(static_cast<double>(L));
      parts += (parts.empty() ? "" : ", ") + std::to_string(normalized);
      if (normalized < lo || normalized > hi + 1e-9) return false;
    }
    detail = "normalized estimates " + parts;
    return true;
  });

  std::printf("%s: %d of 12 criteria passed\n",
              failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              12 - failures);
  return failures;
}
