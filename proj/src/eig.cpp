#include "gsemi/eig.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gsemi/numeric.hpp"

namespace gsemi {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace

double power_iteration_top(const SparseSymOperator& op, double shift,
                           double tol, int max_iter) {
  int n = op.dim();
  if (n == 0) throw std::invalid_argument("empty operator");
  std::vector<double> x(static_cast<std::size_t>(n), 1.0), y;
  double lambda = 0.0;
  for (int attempt = 0; attempt < 2; ++attempt) {
    double nx = norm2(x);
    for (auto& e : x) e /= nx;
    double prev = std::nan("");
    for (int it = 0; it < max_iter; ++it) {
      op.apply(x, y);
      for (int i = 0; i < n; ++i)
        y[static_cast<std::size_t>(i)] += shift * x[static_cast<std::size_t>(i)];
      lambda = dot(x, y);  // Rayleigh quotient of op + shift*I at unit x
      double ny = norm2(y);
      if (ny == 0.0) return -shift;  // x in the kernel of the shifted op
      for (auto& e : y) e /= ny;
      x.swap(y);
      if (!std::isnan(prev) &&
          std::abs(lambda - prev) <= tol * std::max(1.0, std::abs(lambda)))
        return lambda - shift;
      prev = lambda;
    }
    for (int i = 0; i < n; ++i)
      x[static_cast<std::size_t>(i)] = 1.0 + 1e-3 * ((i % 97) + 1);
  }
  throw ConvergenceError("power iteration did not converge");
}

namespace {

// Sturm count via the LDL^T recurrence: number of eigenvalues < x.
int sturm_count_below(const std::vector<double>& diag,
                      const std::vector<double>& off, double x) {
  int cnt = 0;
  double d = diag[0] - x;
  if (d < 0) ++cnt;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    double denom = d;
    if (denom == 0.0) denom = 1e-300;
    d = diag[i] - x - off[i - 1] * off[i - 1] / denom;
    if (d < 0) ++cnt;
  }
  return cnt;
}

void gershgorin(const std::vector<double>& diag,
                const std::vector<double>& off, double& lo, double& hi) {
  lo = diag[0];
  hi = diag[0];
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i < off.size()) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
}

double tridiag_bisect(const std::vector<double>& diag,
                      const std::vector<double>& off, int below_target) {
  double lo, hi;
  gershgorin(diag, off, lo, hi);
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    double mid = 0.5 * (lo + hi);
    if (sturm_count_below(diag, off, mid) >= below_target)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double tridiag_max_eigenvalue(const std::vector<double>& diag,
                              const std::vector<double>& off) {
  return tridiag_bisect(diag, off, static_cast<int>(diag.size()));
}

double tridiag_min_eigenvalue(const std::vector<double>& diag,
                              const std::vector<double>& off) {
  return tridiag_bisect(diag, off, 1);
}

double lanczos_max_abs(const SparseSymOperator& op, double tol, unsigned seed,
                       int max_krylov) {
  int n = op.dim();
  if (n == 0) throw std::invalid_argument("empty operator");
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<double> q(static_cast<std::size_t>(n));
  for (auto& e : q) e = unif(rng);
  double nq = norm2(q);
  for (auto& e : q) e /= nq;

  std::vector<std::vector<double>> basis;  // kept for full reorthogonalization
  std::vector<double> alpha, beta, w;
  double value = 0.0, prev = std::nan("");
  int stable = 0;
  int cap = std::min(max_krylov, n);
  for (int k = 0; k < cap; ++k) {
    basis.push_back(q);
    op.apply(q, w);
    double a = dot(w, q);
    alpha.push_back(a);
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= a * q[i];
    if (k > 0)
      for (std::size_t i = 0; i < w.size(); ++i)
        w[i] -= beta[static_cast<std::size_t>(k) - 1] * basis[static_cast<std::size_t>(k) - 1][i];
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        double c = dot(w, b);
        if (c != 0.0)
          for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * b[i];
      }
    double nb = norm2(w);

    value = std::max(std::abs(tridiag_max_eigenvalue(alpha, beta)),
                     std::abs(tridiag_min_eigenvalue(alpha, beta)));
    if (!std::isnan(prev) &&
        std::abs(value - prev) <= tol * std::max(1.0, std::abs(value))) {
      if (++stable >= 2) return value;
    } else {
      stable = 0;
    }
    prev = value;

    if (nb <= 1e-13 * std::max(1.0, std::abs(value)))
      return value;  // Krylov space exhausted: tridiagonal is exact
    beta.push_back(nb);
    for (auto& e : w) e /= nb;
    q = w;
  }
  if (cap == n) return value;  // full tridiagonalization reached
  throw ConvergenceError("lanczos did not converge within the Krylov cap");
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int r, int c) -> double& {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)];
  };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int r = 0; r < n; ++r)
      for (int c = r + 1; c < n; ++c) off += at(r, c) * at(r, c);
    if (off < 1e-28) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace gsemi
