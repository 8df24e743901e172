#ifndef FROBNC_LINALG_HPP
#define FROBNC_LINALG_HPP

#include <vector>

#include "frobnc/gf.hpp"

namespace frobnc::linalg {

using gf::elem_t;
using gf::Field;

// Dense matrix over a finite field, row-major.
class Mat {
 public:
  Mat() : f_(nullptr), rows_(0), cols_(0) {}
  Mat(const Field* f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols), a_((std::size_t)rows * cols, 0) {}

  static Mat identity(const Field* f, int n);

  const Field* field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  elem_t at(int i, int j) const { return a_[(std::size_t)i * cols_ + j]; }
  elem_t& at(int i, int j) { return a_[(std::size_t)i * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  Mat transpose() const;
  Mat scale(elem_t s) const;
  // entrywise x -> x^{p^j}
  Mat frobenius_entrywise(long j) const;

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref();
  int rank() const;
  elem_t det() const;
  Mat inverse() const;  // Degenerate when singular
  bool is_zero() const;

 private:
  const Field* f_;
  int rows_, cols_;
  std::vector<elem_t> a_;
};

}  // namespace frobnc::linalg

#endif
