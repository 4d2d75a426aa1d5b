#pragma once

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "flipkit/errors.hpp"

namespace flipkit {

// Dense integer matrix, small sizes only (exchange matrices, K-theory shadows).
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw argument_error("IntMat: negative dimension");
  }
  IntMat(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw argument_error("IntMat: ragged rows");
      for (auto v : r) a_.push_back(v);
    }
  }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const IntMat& x, const IntMat& y) { return !(x == y); }
  friend bool operator<(const IntMat& x, const IntMat& y) {
    if (x.rows_ != y.rows_) return x.rows_ < y.rows_;
    if (x.cols_ != y.cols_) return x.cols_ < y.cols_;
    return x.a_ < y.a_;
  }

  friend IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols_ != y.rows_) throw argument_error("IntMat: dimension mismatch in product");
    IntMat z(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        std::int64_t v = x(i, k);
        if (v == 0) continue;
        for (int j = 0; j < y.cols_; ++j) z(i, j) += v * y(k, j);
      }
    return z;
  }

  bool is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j <= i; ++j)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  // Exactly one 1 in each row and column, zeros elsewhere.
  bool is_permutation() const {
    if (rows_ != cols_) return false;
    std::vector<int> col_hits(cols_, 0);
    for (int i = 0; i < rows_; ++i) {
      int row_hits = 0;
      for (int j = 0; j < cols_; ++j) {
        std::int64_t v = (*this)(i, j);
        if (v == 1) {
          ++row_hits;
          ++col_hits[j];
        } else if (v != 0) {
          return false;
        }
      }
      if (row_hits != 1) return false;
    }
    for (int c : col_hits)
      if (c != 1) return false;
    return true;
  }

  std::int64_t det2() const {
    if (rows_ != 2 || cols_ != 2) throw argument_error("det2: matrix is not 2x2");
    return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
      os << "[";
      for (int j = 0; j < cols_; ++j) os << (*this)(i, j) << (j + 1 < cols_ ? "," : "");
      os << "]" << (i + 1 < rows_ ? "," : "");
    }
    os << "]";
    return os.str();
  }

 private:
  int rows_, cols_;
  std::vector<std::int64_t> a_;
};

}  // namespace flipkit
