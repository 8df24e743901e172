#include "frobnc/unipoly.hpp"

#include <sstream>

namespace frobnc::mpoly {

UPoly::UPoly(const Field* f, std::vector<elem_t> coeffs)
    : f_(f), c_(std::move(coeffs)) {
  trim();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  require(f_ == o.f_, Err::FieldMismatch, "univariate operands differ in field");
  std::vector<elem_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return {f_, std::move(r)};
}

UPoly UPoly::operator-(const UPoly& o) const {
  require(f_ == o.f_, Err::FieldMismatch, "univariate operands differ in field");
  std::vector<elem_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = f_->sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return {f_, std::move(r)};
}

UPoly UPoly::operator*(const UPoly& o) const {
  require(f_ == o.f_, Err::FieldMismatch, "univariate operands differ in field");
  if (is_zero() || o.is_zero()) return UPoly(f_);
  std::vector<elem_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
  }
  return {f_, std::move(r)};
}

UPoly UPoly::scale(elem_t s) const {
  std::vector<elem_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_->mul(c_[i], s);
  return {f_, std::move(r)};
}

UPoly UPoly::shift(int s) const {
  if (is_zero()) return *this;
  std::vector<elem_t> r(c_.size() + s, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i + s] = c_[i];
  return {f_, std::move(r)};
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly(f_);
  std::vector<elem_t> r(c_.size() - 1, 0);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = f_->mul(c_[i], f_->from_int((long long)i));
  return {f_, std::move(r)};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scale(f_->inv(lead()));
}

elem_t UPoly::eval(elem_t x) const {
  elem_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
  return acc;
}

UPoly UPoly::embed(const Field* target) const {
  std::vector<elem_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = f_->embed_to(c_[i], target);
  return {target, std::move(r)};
}

void UPoly::divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  require(!b.is_zero(), Err::DivisionByZero, "univariate division by zero");
  const Field* f = a.f_;
  require(f == b.f_, Err::FieldMismatch, "univariate operands differ in field");
  std::vector<elem_t> rem = a.c_;
  std::vector<elem_t> quo;
  if ((int)rem.size() >= (int)b.c_.size()) quo.assign(rem.size() - b.c_.size() + 1, 0);
  elem_t linv = f->inv(b.lead());
  for (int i = (int)rem.size() - 1; i >= (int)b.c_.size() - 1; --i) {
    if (rem[i] == 0) continue;
    elem_t c = f->mul(rem[i], linv);
    int s = i - ((int)b.c_.size() - 1);
    quo[s] = c;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      rem[s + j] = f->sub(rem[s + j], f->mul(c, b.c_[j]));
  }
  q = UPoly(f, std::move(quo));
  r = UPoly(f, std::move(rem));
}

UPoly UPoly::operator%(const UPoly& o) const {
  UPoly q, r;
  divrem(*this, o, q, r);
  return r;
}

UPoly UPoly::operator/(const UPoly& o) const {
  UPoly q, r;
  divrem(*this, o, q, r);
  return q;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != f_->from_int(1)) os << f_->elem_literal(c_[i]);
    if (i > 0) {
      if (c_[i] != f_->from_int(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
  require(!(a.is_zero() && b.is_zero()), Err::BothZero,
          "gcd of two zero polynomials");
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x % y;
    x = y;
    y = r;
  }
  return x.monic();
}

bool upoly_squarefree(const UPoly& f) {
  require(!f.is_zero(), Err::ZeroForm, "squarefree test on the zero polynomial");
  if (f.deg() == 0) return true;
  UPoly d = f.derivative();
  if (d.is_zero()) return false;  // p-th power
  return upoly_gcd(f, d).deg() == 0;
}

}  // namespace frobnc::mpoly
