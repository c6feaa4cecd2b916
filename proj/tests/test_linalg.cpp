#include <doctest.h>

#include <cmath>
#include <random>

#include "gsemi/eig.hpp"
#include "gsemi/sparse.hpp"

using namespace gsemi;

namespace {

SparseSymOperator random_symmetric(int n, unsigned seed, double density) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  SparseSymOperator op(n, true);
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c)
      if (coin(rng) < density) op.add(r, c, unif(rng));
  op.compile();
  return op;
}

std::vector<double> densify(const SparseSymOperator& op) {
  int n = op.dim();
  std::vector<double> a(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)] = op.entry(r, c);
  return a;
}

}  // namespace

TEST_CASE("sparse assembly, duplicates and transpose") {
  SparseSymOperator op(3, true);
  op.add(0, 1, 2.0);
  op.add(1, 0, 1.0);  // accumulates onto the same unordered pair
  op.add(2, 2, -1.0);
  op.compile();
  CHECK(op.entry(0, 1) == 3.0);
  CHECK(op.entry(1, 0) == 3.0);
  CHECK(op.entry(2, 2) == -1.0);
  CHECK(op.stored_entries() == 2);
  CHECK_FALSE(op.is_diagonal());
  CHECK(op.all_entries_integral());  // 3.0 and -1.0
  op.add(0, 0, 0.5);
  op.compile();
  CHECK_FALSE(op.all_entries_integral());

  SparseSymOperator dir(2, false);
  dir.add(0, 1, 5.0);
  dir.compile();
  CHECK(dir.entry(0, 1) == 5.0);
  CHECK(dir.entry(1, 0) == 0.0);
  SparseSymOperator t = dir.transpose();
  CHECK(t.entry(1, 0) == 5.0);
  CHECK(t.entry(0, 1) == 0.0);
}

TEST_CASE("apply: omp kernel matches the serial reference") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (unsigned seed = 0; seed < 4; ++seed) {
    SparseSymOperator op = random_symmetric(200, seed, 0.05);
    std::vector<double> x(200), y_ref(200), y_omp(200);
    for (auto& e : x) e = unif(rng);
    op.apply_ref(x.data(), y_ref.data());
    op.apply_omp(x.data(), y_omp.data());
    for (int i = 0; i < 200; ++i)
      CHECK(y_ref[static_cast<std::size_t>(i)] ==
            doctest::Approx(y_omp[static_cast<std::size_t>(i)]).epsilon(1e-14));
  }
}

TEST_CASE("symmetric apply uses both triangles") {
  SparseSymOperator op(2, true);
  op.add(0, 1, 1.0);
  op.compile();
  std::vector<double> x{1.0, 0.0}, y;
  op.apply(x, y);
  CHECK(y[0] == 0.0);
  CHECK(y[1] == 1.0);
}

TEST_CASE("jacobi eigenvalues on known matrices") {
  // [[2, 1], [1, 2]] -> 1, 3
  std::vector<double> a{2, 1, 1, 2};
  auto eig = jacobi_eigenvalues(a, 2);
  CHECK(eig[0] == doctest::Approx(1.0));
  CHECK(eig[1] == doctest::Approx(3.0));

  // 3x3 with known spectrum: diag(1,2,3) conjugated stays {1,2,3}
  std::vector<double> b{2, -1, 0, -1, 2, -1, 0, -1, 2};
  eig = jacobi_eigenvalues(b, 3);
  CHECK(eig[0] == doctest::Approx(2.0 - std::sqrt(2.0)));
  CHECK(eig[1] == doctest::Approx(2.0));
  CHECK(eig[2] == doctest::Approx(2.0 + std::sqrt(2.0)));
}

TEST_CASE("tridiagonal extreme eigenvalues by bisection") {
  // path graph P_n adjacency: eigenvalues 2 cos(k pi / (n+1))
  int n = 9;
  std::vector<double> diag(static_cast<std::size_t>(n), 0.0);
  std::vector<double> off(static_cast<std::size_t>(n) - 1, 1.0);
  CHECK(tridiag_max_eigenvalue(diag, off) ==
        doctest::Approx(2.0 * std::cos(M_PI / (n + 1))).epsilon(1e-12));
  CHECK(tridiag_min_eigenvalue(diag, off) ==
        doctest::Approx(-2.0 * std::cos(M_PI / (n + 1))).epsilon(1e-12));
}

TEST_CASE("lanczos agrees with jacobi on random operators") {
  for (unsigned seed = 10; seed < 14; ++seed) {
    SparseSymOperator op = random_symmetric(60, seed, 0.2);
    auto eig = jacobi_eigenvalues(densify(op), 60);
    double expect = std::max(std::abs(eig.front()), std::abs(eig.back()));
    CHECK(lanczos_max_abs(op, 1e-11, 0x5eedu) ==
          doctest::Approx(expect).epsilon(1e-8));
  }
}

TEST_CASE("power iteration on shifted non-negative matrices") {
  // adjacency of P3 via sparse op: top eigenvalue sqrt(2)
  SparseSymOperator op(3, true);
  op.add(0, 1, 1.0);
  op.add(1, 2, 1.0);
  op.compile();
  CHECK(power_iteration_top(op, 1.0, 1e-13) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}
