#include "gsemi/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace gsemi {

void SparseSymOperator::add(int r, int c, double v) {
  if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
    throw std::invalid_argument("sparse entry index out of range");
  if (v == 0.0) return;
  if (symmetric_ && r > c) std::swap(r, c);
  rows_.push_back(static_cast<std::uint32_t>(r));
  cols_.push_back(static_cast<std::uint32_t>(c));
  vals_.push_back(v);
  compiled_ = false;
}

void SparseSymOperator::compile() {
  // sort stored triplets and merge duplicates
  std::vector<std::size_t> perm(vals_.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (rows_[a] != rows_[b]) return rows_[a] < rows_[b];
    return cols_[a] < cols_[b];
  });
  std::vector<std::uint32_t> r2, c2;
  std::vector<double> v2;
  r2.reserve(vals_.size());
  c2.reserve(vals_.size());
  v2.reserve(vals_.size());
  for (std::size_t k : perm) {
    if (!v2.empty() && r2.back() == rows_[k] && c2.back() == cols_[k]) {
      v2.back() += vals_[k];
    } else {
      r2.push_back(rows_[k]);
      c2.push_back(cols_[k]);
      v2.push_back(vals_[k]);
    }
  }
  rows_ = std::move(r2);
  cols_ = std::move(c2);
  vals_ = std::move(v2);

  // full-pattern CSR: symmetric operators contribute both (r,c) and (c,r)
  std::vector<std::uint32_t> count(static_cast<std::size_t>(dim_) + 1, 0);
  for (std::size_t k = 0; k < vals_.size(); ++k) {
    ++count[rows_[k] + 1];
    if (symmetric_ && rows_[k] != cols_[k]) ++count[cols_[k] + 1];
  }
  row_ptr_.assign(static_cast<std::size_t>(dim_) + 1, 0);
  for (int i = 0; i < dim_; ++i)
    row_ptr_[static_cast<std::size_t>(i) + 1] =
        row_ptr_[static_cast<std::size_t>(i)] + count[static_cast<std::size_t>(i) + 1];
  col_.assign(row_ptr_.back(), 0);
  val_.assign(row_ptr_.back(), 0.0);
  std::vector<std::uint32_t> cursor(row_ptr_.begin(), row_ptr_.end() - 1);
  for (std::size_t k = 0; k < vals_.size(); ++k) {
    col_[cursor[rows_[k]]] = cols_[k];
    val_[cursor[rows_[k]]++] = vals_[k];
    if (symmetric_ && rows_[k] != cols_[k]) {
      col_[cursor[cols_[k]]] = rows_[k];
      val_[cursor[cols_[k]]++] = vals_[k];
    }
  }
  compiled_ = true;
}

void SparseSymOperator::apply_ref(const double* x, double* y) const {
  for (int r = 0; r < dim_; ++r) {
    double s = 0.0;
    for (std::uint32_t k = row_ptr_[static_cast<std::size_t>(r)];
         k < row_ptr_[static_cast<std::size_t>(r) + 1]; ++k)
      s += val_[k] * x[col_[k]];
    y[r] = s;
  }
}

void SparseSymOperator::apply_omp(const double* x, double* y) const {
#pragma omp parallel for schedule(static)
  for (int r = 0; r < dim_; ++r) {
    double s = 0.0;
    for (std::uint32_t k = row_ptr_[static_cast<std::size_t>(r)];
         k < row_ptr_[static_cast<std::size_t>(r) + 1]; ++k)
      s += val_[k] * x[col_[k]];
    y[r] = s;
  }
}

void SparseSymOperator::apply(const std::vector<double>& x,
                              std::vector<double>& y) const {
  if (!compiled_) throw std::logic_error("apply before compile()");
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("vector dimension mismatch");
  y.resize(x.size());
  apply_omp(x.data(), y.data());
}

double SparseSymOperator::entry(int r, int c) const {
  if (symmetric_ && r > c) std::swap(r, c);
  for (std::size_t k = 0; k < vals_.size(); ++k)
    if (rows_[k] == static_cast<std::uint32_t>(r) &&
        cols_[k] == static_cast<std::uint32_t>(c))
      return vals_[k];
  return 0.0;
}

bool SparseSymOperator::is_diagonal() const {
  for (std::size_t k = 0; k < vals_.size(); ++k)
    if (rows_[k] != cols_[k]) return false;
  return true;
}

bool SparseSymOperator::all_entries_integral() const {
  for (double v : vals_)
    if (v != std::nearbyint(v) || std::abs(v) > 9e15) return false;
  return true;
}

double SparseSymOperator::max_abs_diagonal() const {
  double m = 0.0;
  for (std::size_t k = 0; k < vals_.size(); ++k)
    if (rows_[k] == cols_[k]) m = std::max(m, std::abs(vals_[k]));
  return m;
}

SparseSymOperator SparseSymOperator::transpose() const {
  SparseSymOperator t(dim_, symmetric_);
  for (std::size_t k = 0; k < vals_.size(); ++k)
    t.add(static_cast<int>(cols_[k]), static_cast<int>(rows_[k]), vals_[k]);
  t.compile();
  return t;
}

void SparseSymOperator::write_coordinate(std::ostream& os) const {
  for (std::size_t k = 0; k < vals_.size(); ++k)
    os << rows_[k] << ' ' << cols_[k] << ' ' << vals_[k] << '\n';
}

}  // namespace gsemi
