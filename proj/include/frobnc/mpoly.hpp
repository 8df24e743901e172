#ifndef FROBNC_MPOLY_HPP
#define FROBNC_MPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "frobnc/gf.hpp"
#include "frobnc/linalg.hpp"
#include "frobnc/unipoly.hpp"

namespace frobnc::mpoly {

using Exps = std::vector<long long>;

// Total-degree cap: F_{a,b} raises exponents by q^a, so keep room in 64 bits.
inline constexpr long long kDegreeCap = 1LL << 31;

// Graded reverse lexicographic order, fixed globally.
bool grevlex_greater(const Exps& a, const Exps& b);

struct Term {
  Exps e;
  elem_t c;
};

struct EulerCheck;

// Sparse homogeneous multivariate polynomial.  Terms are kept grevlex
// descending with nonzero coefficients; the zero polynomial carries an
// explicit nominal degree so homogeneity bookkeeping survives cancellation.
class HomogPoly {
 public:
  HomogPoly() : f_(nullptr), nvars_(0), deg_(0) {}

  static HomogPoly zero(const Field* f, int nvars, long long deg);
  static HomogPoly monomial(const Field* f, int nvars, const Exps& e,
                            FieldElement c);
  static HomogPoly make(const Field* f, int nvars,
                        const std::vector<std::pair<Exps, FieldElement>>& terms,
                        long long nominal_deg = -1);

  const Field* field() const { return f_; }
  int nvars() const { return nvars_; }
  long long degree() const { return deg_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  FieldElement coeff(const Exps& e) const;
  const Term& lead() const;  // ZeroPolynomial when zero
  std::vector<int> support() const;

  HomogPoly operator+(const HomogPoly& o) const;
  HomogPoly operator-(const HomogPoly& o) const;
  HomogPoly operator*(const HomogPoly& o) const;
  bool operator==(const HomogPoly& o) const;
  bool operator!=(const HomogPoly& o) const { return !(*this == o); }
  HomogPoly neg() const;
  HomogPoly scale(FieldElement c) const;
  HomogPoly mul_monomial(const Exps& e, elem_t c) const;
  HomogPoly pow(long long e) const;
  HomogPoly frobenius_twist(long j) const;  // F^{p^j}, computed termwise

  HomogPoly partial_derivative(int i) const;

  FieldElement evaluate(const std::vector<FieldElement>& coords) const;
  // Evaluation over an extension of the coefficient field, raw codes.
  elem_t evaluate_raw(const Field* ext, const std::vector<elem_t>& coords) const;

  // x_i <- sum_j M(i,j) y_j; M has nvars rows and out_nvars columns.
  HomogPoly substitute_linear(const linalg::Mat& m, int out_nvars) const;

  // Does *this divide g?  Single-divisor leading-term reduction; returns the
  // quotient exactly when the remainder vanishes.
  std::optional<HomogPoly> divides(const HomogPoly& g) const;

  std::optional<HomogPoly> pth_root() const;
  bool is_pth_power() const { return pth_root().has_value(); }

  EulerCheck euler_check() const;

  HomogPoly embed(const Field* target) const;

  std::string str() const;  // canonical grevlex-sorted printing

 private:
  void normalize(long long nominal);
  const Field* f_;
  int nvars_;
  long long deg_;
  std::vector<Term> terms_;
};

struct EulerCheck {
  bool ok;
  HomogPoly lhs;  // sum_i x_i dF/dx_i
  HomogPoly rhs;  // d * F
};

HomogPoly parse_poly(const std::string& text, const Field* f, int nvars);

// Binary-form utilities (nvars == 2).  Dehomogenize at x1 = 1; the returned
// multiplicity-at-infinity counts the projective root (1:0).
UPoly binary_dehomogenize(const HomogPoly& f, long long* inf_mult);
bool binary_squarefree(const HomogPoly& f);

}  // namespace frobnc::mpoly

#endif
