#ifndef GSEMI_EIG_HPP
#define GSEMI_EIG_HPP

#include <vector>

#include "gsemi/sparse.hpp"

namespace gsemi {

// Rayleigh-quotient power iteration on op + shift*I. Returns the dominant
// eigenvalue of op (shift removed). For entrywise non-negative symmetric
// operators, shift = 1 makes the dominant eigenvalue of the shifted
// operator the top one, so the iteration cannot oscillate on bipartite
// structures. Deterministic all-ones start, perturbed on a single retry.
double power_iteration_top(const SparseSymOperator& op, double shift,
                           double tol, int max_iter = 100000);

// Largest |eigenvalue| of a symmetric operator by Lanczos with full
// reorthogonalization; deterministic seeded start. Throws ConvergenceError
// when the Krylov cap is hit before the tolerance.
double lanczos_max_abs(const SparseSymOperator& op, double tol,
                       unsigned seed = 0x5eedu, int max_krylov = 400);

// Eigenvalues of a dense symmetric matrix (row-major n x n) by cyclic
// Jacobi rotations, ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

// Extreme eigenvalues of a symmetric tridiagonal matrix by Sturm-sequence
// bisection. diag has size m, off has size m-1.
double tridiag_max_eigenvalue(const std::vector<double>& diag,
                              const std::vector<double>& off);
double tridiag_min_eigenvalue(const std::vector<double>& diag,
                              const std::vector<double>& off);

}  // namespace gsemi

#endif
