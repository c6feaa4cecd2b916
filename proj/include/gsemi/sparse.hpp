#ifndef GSEMI_SPARSE_HPP
#define GSEMI_SPARSE_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace gsemi {

// Sparse real operator on an indexed basis. Symmetric operators keep one
// stored entry per unordered index pair; general operators store directed
// entries (row = output index). apply() runs the compiled CSR form, which
// materializes both triangles of a symmetric operator so rows parallelize
// without write conflicts.
class SparseSymOperator {
 public:
  SparseSymOperator() = default;
  SparseSymOperator(int dim, bool symmetric)
      : dim_(dim), symmetric_(symmetric) {}

  int dim() const { return dim_; }
  bool symmetric() const { return symmetric_; }

  // Accumulates v at (r, c); symmetric operators normalize to r <= c.
  void add(int r, int c, double v);

  // Sorts, merges duplicates, and builds the CSR form. Must be called
  // after the last add() and before apply()/entry().
  void compile();
  bool compiled() const { return compiled_; }

  void apply_ref(const double* x, double* y) const;
  void apply_omp(const double* x, double* y) const;
  void apply(const std::vector<double>& x, std::vector<double>& y) const;

  double entry(int r, int c) const;
  std::size_t stored_entries() const { return vals_.size(); }
  bool is_diagonal() const;
  bool all_entries_integral() const;
  double max_abs_diagonal() const;

  // Only meaningful for non-symmetric operators (directed entries).
  SparseSymOperator transpose() const;

  // Compiled CSR over the full pattern (both triangles when symmetric).
  const std::vector<std::uint32_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::uint32_t>& col() const { return col_; }
  const std::vector<double>& val() const { return val_; }

  // Stored entries, one per line: "row col value".
  void write_coordinate(std::ostream& os) const;

 private:
  int dim_ = 0;
  bool symmetric_ = true;
  bool compiled_ = false;
  // stored (deduplicated after compile) entries
  std::vector<std::uint32_t> rows_, cols_;
  std::vector<double> vals_;
  // compiled CSR over the full pattern
  std::vector<std::uint32_t> row_ptr_, col_;
  std::vector<double> val_;
};

}  // namespace gsemi

#endif
