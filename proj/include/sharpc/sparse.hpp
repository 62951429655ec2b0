// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sharpc/kernels.hpp"

namespace sharpc::fem {

/// Square matrix in compressed-row form with the full (both triangles)
/// pattern; columns sorted within each row.
class CsrMatrix {
 public:
  CsrMatrix() = default;
  CsrMatrix(std::int32_t n, std::vector<std::int32_t> row_ptr, std::vector<std::int32_t> col, std::vector<double> val);

  std::int32_t rows() const { return n_; }
  std::size_t nonzeros() const { return val_.size(); }
  kernels::CsrView view() const { return {row_ptr_, col_, val_}; }
  std::span<const std::int32_t> row_ptr() const { return row_ptr_; }
  std::span<const std::int32_t> col() const { return col_; }
  std::span<const double> val() const { return val_; }

  void multiply(std::span<const double> x, std::span<double> y) const;
  double at(std::int32_t i, std::int32_t j) const;
  std::vector<double> diagonal() const;

 private:
  std::int32_t n_ = 0;
  std::vector<std::int32_t> row_ptr_{0};
  std::vector<std::int32_t> col_;
  std::vector<double> val_;
};

/// Symmetric sparse matrix stored once per pair (row <= col), sorted by
/// (row, col) with duplicates summed. Symmetry holds by construction.
class SparseSymmetric {
 public:
  struct Entry {
    std::int32_t row;
    std::int32_t col;
    double value;
  };

  SparseSymmetric() = default;
  explicit SparseSymmetric(std::int32_t dim) : dim_(dim) {}

  /// Entries may name either triangle; (i, j) and (j, i) both fold into the
  /// upper pair and are summed.
  static SparseSymmetric from_entries(std::int32_t dim, std::vector<Entry> entries);

  std::int32_t dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return upper_; }
  bool empty() const { return upper_.empty(); }

  double at(std::int32_t i, std::int32_t j) const;
  CsrMatrix to_csr() const;
  /// y = A x
  void multiply(std::span<const double> x, std::span<double> y) const;
  double quadratic_form(std::span<const double> x) const;

  /// A + s B on the same dimension.
  SparseSymmetric plus(const SparseSymmetric& other, double scale = 1.0) const;
  /// Principal submatrix on the indices with keep[i] == true, renumbered in
  /// increasing order.
  SparseSymmetric principal_submatrix(const std::vector<bool>& keep) const;

 private:
  std::int32_t dim_ = 0;
  std::vector<Entry> upper_;
};

/// Triplet accumulator used by assembly.
class SymmetricBuilder {
 public:
  explicit SymmetricBuilder(std::int32_t dim) : dim_(dim) {}
  void add(std::int32_t i, std::int32_t j, double v) { entries_.push_back({i, j, v}); }
  SparseSymmetric build() && { return SparseSymmetric::from_entries(dim_, std::move(entries_)); }

 private:
  std::int32_t dim_;
  std::vector<SparseSymmetric::Entry> entries_;
};

}  // namespace sharpc::fem
