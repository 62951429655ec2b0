// SPDX-License-Identifier: Apache-2.0
#include "sharpc/sparse.hpp"

#include <algorithm>

#include "sharpc/error.hpp"

namespace sharpc::fem {

CsrMatrix::CsrMatrix(std::int32_t n, std::vector<std::int32_t> row_ptr, std::vector<std::int32_t> col,
                     std::vector<double> val)
    : n_(n), row_ptr_(std::move(row_ptr)), col_(std::move(col)), val_(std::move(val)) {
  if (static_cast<std::int32_t>(row_ptr_.size()) != n_ + 1 || col_.size() != val_.size() ||
      static_cast<std::size_t>(row_ptr_.back()) != val_.size())
    throw DomainError("CsrMatrix: inconsistent arrays");
}

void CsrMatrix::multiply(std::span<const double> x, std::span<double> y) const { kernels::spmv(view(), x, y); }

double CsrMatrix::at(std::int32_t i, std::int32_t j) const {
  const auto b = col_.begin() + row_ptr_[i];
  const auto e = col_.begin() + row_ptr_[i + 1];
  const auto it = std::lower_bound(b, e, j);
  return (it != e && *it == j) ? val_[it - col_.begin()] : 0.0;
}

std::vector<double> CsrMatrix::diagonal() const {
  std::vector<double> d(n_, 0.0);
  for (std::int32_t i = 0; i < n_; ++i) d[i] = at(i, i);
  return d;
}

SparseSymmetric SparseSymmetric::from_entries(std::int32_t dim, std::vector<Entry> entries) {
  for (auto& e : entries) {
    if (e.row < 0 || e.col < 0 || e.row >= dim || e.col >= dim) throw DomainError("SparseSymmetric: index out of range");
    if (e.row > e.col) std::swap(e.row, e.col);
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  SparseSymmetric s(dim);
  for (const auto& e : entries) {
    if (!s.upper_.empty() && s.upper_.back().row == e.row && s.upper_.back().col == e.col)
      s.upper_.back().value += e.value;
    else
      s.upper_.push_back(e);
  }
  return s;
}

double SparseSymmetric::at(std::int32_t i, std::int32_t j) const {
  if (i > j) std::swap(i, j);
  const auto it = std::lower_bound(upper_.begin(), upper_.end(), Entry{i, j, 0.0}, [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return (it != upper_.end() && it->row == i && it->col == j) ? it->value : 0.0;
}

CsrMatrix SparseSymmetric::to_csr() const {
  std::vector<std::int32_t> count(dim_ + 1, 0);
  for (const auto& e : upper_) {
    ++count[e.row + 1];
    if (e.row != e.col) ++count[e.col + 1];
  }
  for (std::int32_t i = 0; i < dim_; ++i) count[i + 1] += count[i];
  std::vector<std::int32_t> col(count.back());
  std::vector<double> val(count.back());
  std::vector<std::int32_t> pos(count.begin(), count.end() - 1);
  // Entries are sorted by (row, col): lower-triangle contributions (col < row)
  // of row r arrive from earlier rows, in increasing column order, before
  // row r's own upper entries, so each row ends up sorted.
  for (const auto& e : upper_) {
    col[pos[e.row]] = e.col;
    val[pos[e.row]++] = e.value;
    if (e.row != e.col) {
      col[pos[e.col]] = e.row;
      val[pos[e.col]++] = e.value;
    }
  }
  return CsrMatrix(dim_, std::move(count), std::move(col), std::move(val));
}

void SparseSymmetric::multiply(std::span<const double> x, std::span<double> y) const {
  std::fill(y.begin(), y.end(), 0.0);
  for (const auto& e : upper_) {
    y[e.row] += e.value * x[e.col];
    if (e.row != e.col) y[e.col] += e.value * x[e.row];
  }
}

double SparseSymmetric::quadratic_form(std::span<const double> x) const {
  double s = 0.0;
  for (const auto& e : upper_) s += (e.row == e.col ? 1.0 : 2.0) * e.value * x[e.row] * x[e.col];
  return s;
}

SparseSymmetric SparseSymmetric::plus(const SparseSymmetric& other, double scale) const {
  if (other.dim_ != dim_) throw DomainError("SparseSymmetric::plus: dimension mismatch");
  std::vector<Entry> all = upper_;
  for (auto e : other.upper_) {
    e.value *= scale;
    all.push_back(e);
  }
  return from_entries(dim_, std::move(all));
}

SparseSymmetric SparseSymmetric::principal_submatrix(const std::vector<bool>& keep) const {
  std::vector<std::int32_t> map(dim_, -1);
  std::int32_t n = 0;
  for (std::int32_t i = 0; i < dim_; ++i)
    if (keep[i]) map[i] = n++;
  std::vector<Entry> sub;
  for (const auto& e : upper_)
    if (map[e.row] >= 0 && map[e.col] >= 0) sub.push_back({map[e.row], map[e.col], e.value});
  return from_entries(n, std::move(sub));
}

}  // namespace sharpc::fem
