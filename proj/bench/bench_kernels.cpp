// Times the OpenMP kernels against their serial reference twins:
// sparse symmetric matvec, the walk-count DP, and the partition moment sum.
#include <omp.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "gsemi/cayley.hpp"
#include "gsemi/fock.hpp"
#include "gsemi/moments.hpp"

using namespace gsemi;

namespace {

void report(const char* kernel, double serial_s, double parallel_s,
            bool match) {
  std::printf("%-28s %10.1f ms %10.1f ms %7.2fx  %s\n", kernel,
              1e3 * serial_s, 1e3 * parallel_s, serial_s / parallel_s,
              match ? "outputs match" : "OUTPUT MISMATCH");
}

void bench_spmv() {
  SimpleGraph g = turan_graph(6, 2);
  FockBasis basis = build_fock_basis(g, 6);
  OperatorCoefficients coeffs = random_coefficients(6, 2, 4242, true);
  SparseSymOperator op = operator_valued_sum(coeffs, basis);
  int n = op.dim();
  std::vector<double> x(static_cast<std::size_t>(n)), y_ref(x), y_omp(x);
  for (int i = 0; i < n; ++i)
    x[static_cast<std::size_t>(i)] = std::sin(0.37 * i);

  const int reps = 200;
  double t0 = omp_get_wtime();
  for (int r = 0; r < reps; ++r) op.apply_ref(x.data(), y_ref.data());
  double t1 = omp_get_wtime();
  for (int r = 0; r < reps; ++r) op.apply_omp(x.data(), y_omp.data());
  double t2 = omp_get_wtime();

  double diff = 0;
  for (int i = 0; i < n; ++i)
    diff = std::max(diff, std::abs(y_ref[static_cast<std::size_t>(i)] -
                                   y_omp[static_cast<std::size_t>(i)]));
  std::printf("  (dim %d, stored entries %zu, %d reps)\n", n,
              op.stored_entries(), reps);
  report("sparse symmetric matvec", t1 - t0, t2 - t1, diff < 1e-12);
}

void bench_walk_dp() {
  SimpleGraph g = turan_graph(8, 2);
  const int p_max = 7;
  BallGraph bg = build_ball_graph(g, p_max);
  double t0 = omp_get_wtime();
  WalkCountTable ref = walk_count_table_on_ref(bg, p_max);
  double t1 = omp_get_wtime();
  WalkCountTable par = walk_count_table_on(bg, p_max);
  double t2 = omp_get_wtime();
  bool match = ref.counts == par.counts;
  std::printf("  (ball of %zu words, |P_2p| up to %s)\n", bg.ball.size(),
              ref.counts.back().get_str().c_str());
  report("walk-count DP", t1 - t0, t2 - t1, match);
}

void bench_moment_sum() {
  SimpleGraph g = turan_graph(6, 2);
  const int p = 6;
  double t0 = omp_get_wtime();
  BigInt ref = moment_unweighted_ref(g, p);
  double t1 = omp_get_wtime();
  BigInt par = moment_unweighted(g, p);
  double t2 = omp_get_wtime();
  std::printf("  (10395 partitions, moment %s)\n", ref.get_str().c_str());
  report("partition moment sum", t1 - t0, t2 - t1, ref == par);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "openmp",
              "speedup");
  bench_spmv();
  bench_walk_dp();
  bench_moment_sum();
  return 0;
}
