#include "gsemi/fock.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "gsemi/eig.hpp"

namespace gsemi {

FockBasis build_fock_basis(const SimpleGraph& g, int radius,
                           std::size_t guard) {
  return FockBasis{enumerate_ball(g, radius, guard)};
}

SparseSymOperator creation_operator(const FockBasis& basis, int i) {
  const SimpleGraph& g = basis.graph();
  if (i < 0 || i >= g.vertex_count())
    throw std::invalid_argument("creation letter out of range");
  SparseSymOperator op(basis.dim(), false);
  for (std::size_t w = 0; w < basis.ball.size(); ++w) {
    const TraceWord& word = basis.ball.words[w];
    if (word.length() == basis.radius()) continue;  // truncated to zero
    TraceWord u = left_multiply(i, word, g);
    op.add(static_cast<int>(basis.ball.index_of(u)), static_cast<int>(w), 1.0);
  }
  op.compile();
  return op;
}

SparseSymOperator semicircle_operator(const FockBasis& basis, int i) {
  const SimpleGraph& g = basis.graph();
  if (i < 0 || i >= g.vertex_count())
    throw std::invalid_argument("semicircle letter out of range");
  SparseSymOperator op(basis.dim(), true);
  for (std::size_t w = 0; w < basis.ball.size(); ++w) {
    const TraceWord& word = basis.ball.words[w];
    if (word.length() == basis.radius()) continue;
    TraceWord u = left_multiply(i, word, g);
    op.add(static_cast<int>(basis.ball.index_of(u)), static_cast<int>(w), 1.0);
  }
  op.compile();
  return op;
}

SparseSymOperator weighted_semicircle_sum(const FockBasis& basis,
                                          const std::vector<double>& alpha) {
  const SimpleGraph& g = basis.graph();
  int L = g.vertex_count();
  if (!alpha.empty() && static_cast<int>(alpha.size()) != L)
    throw std::invalid_argument("one weight per vertex required");
  SparseSymOperator op(basis.dim(), true);
  for (std::size_t w = 0; w < basis.ball.size(); ++w) {
    const TraceWord& word = basis.ball.words[w];
    if (word.length() == basis.radius()) continue;
    for (int i = 0; i < L; ++i) {
      double a = alpha.empty() ? 1.0 : alpha[static_cast<std::size_t>(i)];
      if (a == 0.0) continue;
      TraceWord u = left_multiply(i, word, g);
      op.add(static_cast<int>(basis.ball.index_of(u)), static_cast<int>(w), a);
    }
  }
  op.compile();
  return op;
}

SparseSymOperator number_like_operator(const FockBasis& basis) {
  SparseSymOperator op(basis.dim(), true);
  for (std::size_t w = 0; w < basis.ball.size(); ++w) {
    int k = first_clique_size(basis.ball.words[w]);
    if (k > 0) op.add(static_cast<int>(w), static_cast<int>(w), k);
  }
  op.compile();
  return op;
}

namespace {

void check_vacuum_pre(const SparseSymOperator& op, int order,
                      const FockBasis& basis) {
  if (op.dim() != basis.dim())
    throw std::invalid_argument("operator dimension does not match basis");
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  if (order > 2 * basis.radius())
    throw std::invalid_argument(
        "order exceeds 2 * radius: truncation would corrupt the moment");
}

}  // namespace

BigInt vacuum_moment_exact(const SparseSymOperator& op, int order,
                           const FockBasis& basis) {
  check_vacuum_pre(op, order, basis);
  if (!op.all_entries_integral())
    throw std::invalid_argument("exact vacuum moment requires integer entries");
  if (order == 0) return 1;
  const auto& row_ptr = op.row_ptr();
  const auto& col = op.col();
  const auto& val = op.val();
  std::vector<long> ival(val.size());
  for (std::size_t k = 0; k < val.size(); ++k)
    ival[k] = static_cast<long>(std::llround(val[k]));
  std::size_t n = static_cast<std::size_t>(op.dim());
  std::vector<BigInt> cur(n, BigInt(0)), next(n, BigInt(0));
  cur[0] = 1;
  for (int step = 0; step < order; ++step) {
    for (std::size_t r = 0; r < n; ++r) {
      BigInt s = 0;
      for (auto k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
        if (ival[k] != 0) s += BigInt(ival[k]) * cur[col[k]];
      next[r] = std::move(s);
    }
    cur.swap(next);
  }
  return cur[0];
}

double vacuum_moment(const SparseSymOperator& op, int order,
                     const FockBasis& basis) {
  check_vacuum_pre(op, order, basis);
  std::vector<double> cur(static_cast<std::size_t>(op.dim()), 0.0), next;
  cur[0] = 1.0;
  for (int step = 0; step < order; ++step) {
    op.apply(cur, next);
    cur.swap(next);
  }
  return cur[0];
}

double operator_norm(const SparseSymOperator& op, double tol) {
  if (!op.symmetric())
    throw std::invalid_argument("operator_norm requires a symmetric operator");
  if (op.stored_entries() == 0) return 0.0;
  if (op.is_diagonal()) return op.max_abs_diagonal();
  return lanczos_max_abs(op, tol);
}

OperatorCoefficients random_coefficients(int L, int d, unsigned seed,
                                         bool hermitian) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  OperatorCoefficients coeffs;
  coeffs.d = d;
  coeffs.mats.resize(static_cast<std::size_t>(L));
  for (auto& m : coeffs.mats) {
    m.assign(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), {0, 0});
    for (auto& z : m) {
      // uniform on the unit disk by rejection
      double re, im;
      do {
        re = unif(rng);
        im = unif(rng);
      } while (re * re + im * im > 1.0);
      z = {re, im};
    }
    if (hermitian) {
      for (int r = 0; r < d; ++r)
        for (int c = r; c < d; ++c) {
          auto& a = m[static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)];
          auto& b = m[static_cast<std::size_t>(c) * static_cast<std::size_t>(d) + static_cast<std::size_t>(r)];
          std::complex<double> h = 0.5 * (a + std::conj(b));
          a = h;
          b = std::conj(h);
        }
    }
  }
  return coeffs;
}

SparseSymOperator operator_valued_sum(const OperatorCoefficients& coeffs,
                                      const FockBasis& basis) {
  const SimpleGraph& g = basis.graph();
  int L = g.vertex_count();
  if (static_cast<int>(coeffs.mats.size()) != L)
    throw std::invalid_argument("one coefficient matrix per vertex required");
  const int d = coeffs.d;
  for (const auto& m : coeffs.mats)
    if (static_cast<int>(m.size()) != d * d)
      throw std::invalid_argument("coefficient matrix dimension mismatch");
  const int fdim = basis.dim();
  const int big = d * fdim;  // complex dimension before doubling
  SparseSymOperator op(2 * big, true);
  // Complex-Hermitian T = sum_i (a_i (x) l_i + a_i* (x) l_i*) stored as the
  // real-symmetric doubling [[X, -Y], [Y, X]] of X + iY.
  for (std::size_t w = 0; w < basis.ball.size(); ++w) {
    const TraceWord& word = basis.ball.words[w];
    if (word.length() == basis.radius()) continue;
    for (int i = 0; i < L; ++i) {
      TraceWord uw = left_multiply(i, word, g);
      int u = static_cast<int>(basis.ball.index_of(uw));
      const auto& mat = coeffs.mats[static_cast<std::size_t>(i)];
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          std::complex<double> z =
              mat[static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)];
          if (z == std::complex<double>(0, 0)) continue;
          // H entry at (P, Q) with the Hermitian mirror at (Q, P)
          int P = u * d + r, Q = static_cast<int>(w) * d + c;
          op.add(P, Q, z.real());
          op.add(P + big, Q + big, z.real());
          if (z.imag() != 0.0) {
            op.add(P, Q + big, -z.imag());
            op.add(Q, P + big, z.imag());
          }
        }
    }
  }
  op.compile();
  return op;
}

namespace {

// Doubled real-symmetric copy of a dense complex Hermitian d x d matrix.
double hermitian_norm(const std::vector<std::complex<double>>& h, int d) {
  std::vector<double> m(static_cast<std::size_t>(2 * d) * static_cast<std::size_t>(2 * d), 0.0);
  auto at = [&](int r, int c) -> double& {
    return m[static_cast<std::size_t>(r) * static_cast<std::size_t>(2 * d) + static_cast<std::size_t>(c)];
  };
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) {
      std::complex<double> z = h[static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)];
      at(r, c) = z.real();
      at(r + d, c + d) = z.real();
      at(r, c + d) = -z.imag();
      at(r + d, c) = z.imag();
    }
  std::vector<double> eig = jacobi_eigenvalues(std::move(m), 2 * d);
  double norm = 0.0;
  for (double e : eig) norm = std::max(norm, std::abs(e));
  return norm;
}

}  // namespace

double coefficient_two_norm(const OperatorCoefficients& coeffs) {
  const int d = coeffs.d;
  std::vector<std::complex<double>> right(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), {0, 0});
  std::vector<std::complex<double>> left(right);
  for (const auto& a : coeffs.mats)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        std::complex<double> s_aas{0, 0}, s_asa{0, 0};
        for (int k = 0; k < d; ++k) {
          // (a a*)[r][c] += a[r][k] conj(a[c][k]); (a* a)[r][c] += conj(a[k][r]) a[k][c]
          s_aas += a[static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(k)] *
                   std::conj(a[static_cast<std::size_t>(c) * static_cast<std::size_t>(d) + static_cast<std::size_t>(k)]);
          s_asa += std::conj(a[static_cast<std::size_t>(k) * static_cast<std::size_t>(d) + static_cast<std::size_t>(r)]) *
                   a[static_cast<std::size_t>(k) * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)];
        }
        right[static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)] += s_aas;
        left[static_cast<std::size_t>(r) * static_cast<std::size_t>(d) + static_cast<std::size_t>(c)] += s_asa;
      }
  return std::sqrt(std::max(hermitian_norm(right, d), hermitian_norm(left, d)));
}

BoundReport check_operator_khintchine(const OperatorCoefficients& coeffs,
                                      const SimpleGraph& g, int radius,
                                      double tol) {
  FockBasis basis = build_fock_basis(g, radius);
  SparseSymOperator t = operator_valued_sum(coeffs, basis);
  double lhs = operator_norm(t, tol);
  double rhs = 2.0 * std::sqrt(static_cast<double>(clique_number(g))) *
               coefficient_two_norm(coeffs);
  return make_bound_report("operator-khintchine", lhs, rhs);
}

}  // namespace gsemi
