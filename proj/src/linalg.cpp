#include "frobnc/linalg.hpp"

namespace frobnc::linalg {

Mat Mat::identity(const Field* f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f->from_int(1);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  require(f_ == o.f_, Err::FieldMismatch, "matrix fields differ");
  require(cols_ == o.rows_, Err::DimensionMismatch, "matrix product shapes");
  Mat r(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      elem_t aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        r.at(i, j) = f_->add(r.at(i, j), f_->mul(aik, o.at(k, j)));
      }
    }
  }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  require(f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_,
          Err::DimensionMismatch, "matrix sum shapes");
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->add(a_[i], o.a_[i]);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  require(f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_,
          Err::DimensionMismatch, "matrix difference shapes");
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->sub(a_[i], o.a_[i]);
  return r;
}

Mat Mat::transpose() const {
  Mat r(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::scale(elem_t s) const {
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->mul(a_[i], s);
  return r;
}

Mat Mat::frobenius_entrywise(long j) const {
  Mat r(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->frobenius(a_[i], j);
  return r;
}

std::vector<int> Mat::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int sel = -1;
    for (int i = row; i < rows_; ++i) {
      if (at(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
    }
    elem_t inv = f_->inv(at(row, col));
    for (int j = 0; j < cols_; ++j) at(row, j) = f_->mul(at(row, j), inv);
    for (int i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      elem_t c = at(i, col);
      for (int j = 0; j < cols_; ++j)
        at(i, j) = f_->sub(at(i, j), f_->mul(c, at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Mat::rank() const {
  Mat copy = *this;
  return (int)copy.rref().size();
}

elem_t Mat::det() const {
  require(rows_ == cols_, Err::DimensionMismatch, "determinant of non-square matrix");
  Mat m = *this;
  elem_t d = f_->from_int(1);
  for (int col = 0; col < cols_; ++col) {
    int sel = -1;
    for (int i = col; i < rows_; ++i) {
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) return 0;
    if (sel != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(col, j));
      d = f_->neg(d);
    }
    elem_t piv = m.at(col, col);
    d = f_->mul(d, piv);
    elem_t inv = f_->inv(piv);
    for (int i = col + 1; i < rows_; ++i) {
      if (m.at(i, col) == 0) continue;
      elem_t c = f_->mul(m.at(i, col), inv);
      for (int j = col; j < cols_; ++j)
        m.at(i, j) = f_->sub(m.at(i, j), f_->mul(c, m.at(col, j)));
    }
  }
  return d;
}

Mat Mat::inverse() const {
  require(rows_ == cols_, Err::DimensionMismatch, "inverse of non-square matrix");
  Mat aug(f_, rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = f_->from_int(1);
  }
  auto piv = aug.rref();
  require((int)piv.size() == rows_ && piv.back() < cols_, Err::Degenerate,
          "matrix is singular");
  Mat r(f_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
  return r;
}

bool Mat::is_zero() const {
  for (elem_t v : a_)
    if (v != 0) return false;
  return true;
}

}  // namespace frobnc::linalg
