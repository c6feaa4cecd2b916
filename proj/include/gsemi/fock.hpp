#ifndef GSEMI_FOCK_HPP
#define GSEMI_FOCK_HPP

#include <complex>
#include <vector>

#include "gsemi/moments.hpp"
#include "gsemi/sparse.hpp"
#include "gsemi/trace_monoid.hpp"

namespace gsemi {

// Span of the trace words of length <= radius; index 0 is the vacuum x_e.
// A length-truncated ball is closed under left division by construction.
struct FockBasis {
  WordBall ball;

  int dim() const { return static_cast<int>(ball.size()); }
  const SimpleGraph& graph() const { return ball.graph; }
  int radius() const { return ball.radius; }
};

FockBasis build_fock_basis(const SimpleGraph& g, int radius,
                           std::size_t guard = kDefaultBallGuard);

// l(x_i): x_w -> x_{i w}; creation beyond the truncation radius maps to
// zero, which makes every compressed norm a lower bound of the full one.
SparseSymOperator creation_operator(const FockBasis& basis, int i);

// s_i = l(x_i) + l(x_i)^T.
SparseSymOperator semicircle_operator(const FockBasis& basis, int i);

// sum_i alpha_i s_i with real weights (alpha omitted = all ones).
SparseSymOperator weighted_semicircle_sum(const FockBasis& basis,
                                          const std::vector<double>& alpha = {});

// L = sum_i l(x_i) l*(x_i): diagonal with entry k(w), the first-clique size.
SparseSymOperator number_like_operator(const FockBasis& basis);

// <op^order x_e, x_e> in exact integer arithmetic; requires integral
// entries and order <= 2 * radius (exactness of the truncation).
BigInt vacuum_moment_exact(const SparseSymOperator& op, int order,
                           const FockBasis& basis);

double vacuum_moment(const SparseSymOperator& op, int order,
                     const FockBasis& basis);

// Largest |eigenvalue|: exact for diagonal operators, Lanczos otherwise.
double operator_norm(const SparseSymOperator& op, double tol);

// Operator-valued coefficients ---------------------------------------------

struct OperatorCoefficients {
  int d = 0;  // coefficient matrix dimension
  // mats[i] is the d x d complex matrix a_i, row-major
  std::vector<std::vector<std::complex<double>>> mats;
};

OperatorCoefficients random_coefficients(int L, int d, unsigned seed,
                                         bool hermitian);

// T = sum_i (a_i (x) l(x_i) + a_i* (x) l*(x_i)), complex-Hermitian,
// realized as its real-symmetric doubling on dimension 2 * d * dim.
SparseSymOperator operator_valued_sum(const OperatorCoefficients& coeffs,
                                      const FockBasis& basis);

// |T|_2 = max(||sum a_i a_i*||^{1/2}, ||sum a_i* a_i||^{1/2}).
double coefficient_two_norm(const OperatorCoefficients& coeffs);

// Compressed-norm check against 2 sqrt(omega(G)) |T|_2.
BoundReport check_operator_khintchine(const OperatorCoefficients& coeffs,
                                      const SimpleGraph& g, int radius,
                                      double tol);

}  // namespace gsemi

#endif
