#ifndef FROBNC_UNIPOLY_HPP
#define FROBNC_UNIPOLY_HPP

#include <vector>

#include "frobnc/gf.hpp"

namespace frobnc::mpoly {

using gf::elem_t;
using gf::Field;
using gf::FieldElement;

// Dense univariate polynomial over a finite field, constant term first.
class UPoly {
 public:
  UPoly() : f_(nullptr) {}
  explicit UPoly(const Field* f) : f_(f) {}
  UPoly(const Field* f, std::vector<elem_t> coeffs);

  static UPoly x(const Field* f) { return {f, {0, f->from_int(1)}}; }
  static UPoly constant(const Field* f, elem_t c) { return {f, {c}}; }

  const Field* field() const { return f_; }
  bool is_zero() const { return c_.empty(); }
  int deg() const { return (int)c_.size() - 1; }  // -1 for the zero polynomial
  elem_t coeff(int i) const {
    return (i >= 0 && i < (int)c_.size()) ? c_[i] : 0;
  }
  elem_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<elem_t>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  bool operator==(const UPoly& o) const { return f_ == o.f_ && c_ == o.c_; }
  UPoly scale(elem_t s) const;
  UPoly shift(int s) const;  // multiply by x^s
  UPoly derivative() const;
  UPoly monic() const;
  elem_t eval(elem_t x) const;
  UPoly embed(const Field* target) const;

  // quotient/remainder with an arbitrary nonzero divisor
  static void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  UPoly operator%(const UPoly& o) const;
  UPoly operator/(const UPoly& o) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  const Field* f_;
  std::vector<elem_t> c_;
};

// Monic gcd via Euclid; BothZero when both inputs vanish.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);

bool upoly_squarefree(const UPoly& f);

}  // namespace frobnc::mpoly

#endif
