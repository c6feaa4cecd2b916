#ifndef GSEMI_NUMERIC_HPP
#define GSEMI_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gsemi {

// Exact integers and rationals used for all combinatorial counts.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// C_p = binom(2p, p) / (p + 1)
inline BigInt catalan(unsigned p) {
  return binomial(2 * p, p) / (p + 1);
}

// (2p - 1)!! = number of pair partitions of [2p]
inline BigInt double_factorial_odd(unsigned p) {
  BigInt r = 1;
  for (unsigned k = 1; k <= p; ++k) r *= 2 * k - 1;
  return r;
}

inline BigInt int_pow(BigInt base, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Thrown when a documented size guard (ball size, vertex count, p range)
// would be exceeded; carries how far the computation got.
class GuardError : public std::runtime_error {
 public:
  GuardError(const std::string& what, unsigned long long reached = 0)
      : std::runtime_error(what), reached_(reached) {}
  unsigned long long reached() const { return reached_; }

 private:
  unsigned long long reached_;
};

// Thrown when an iterative eigensolver hits its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gsemi

#endif
