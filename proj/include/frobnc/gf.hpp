#ifndef FROBNC_GF_HPP
#define FROBNC_GF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobnc/error.hpp"

namespace frobnc::gf {

// Element code: the coefficient vector (c_0,...,c_{k-1}) of the residue class
// packed as sum c_i p^i.  Codes 0..q-1 enumerate the field, zero first, in
// the canonical order (c_0 varies fastest).
using elem_t = std::uint32_t;

inline constexpr long kMaxFieldOrder = 1L << 16;

class Field;
class FieldElement;

// Fixed embedding of one field into an extension.  `fwd` maps source codes to
// target codes; the embedding sends the source generator to the first root of
// the source modulus in target enumeration order.
struct Embedding {
  const Field* src = nullptr;
  const Field* dst = nullptr;
  std::vector<elem_t> fwd;
  std::optional<elem_t> preimage(elem_t y) const;
};

class Field {
 public:
  // Built-in modulus (first monic irreducible of degree k, high coefficients
  // most significant).  Throws NonPrimeCharacteristic / FieldTooLarge.
  static const Field* get(long p, int k);
  // User-supplied modulus, constant term first, length k+1, monic.
  // Throws ReducibleModulus when the modulus fails validation.
  static const Field* get(long p, int k, const std::vector<long>& modulus);

  long p() const { return p_; }
  int k() const { return k_; }
  long q() const { return q_; }
  const std::vector<long>& modulus() const { return mod_; }
  bool square_order() const { return k_ % 2 == 0; }
  long sqrt_q() const;  // q' with q'^2 = q; NotASquareField when k is odd

  // Raw-code arithmetic.  All operations are exact and total on [0,q).
  elem_t add(elem_t a, elem_t b) const {
    if (p_ == 2) return a ^ b;
    if (!add_tab_.empty()) return add_tab_[(std::size_t)a * q_ + b];
    return add_slow(a, b);
  }
  elem_t neg(elem_t a) const { return neg_tab_[a]; }
  elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }
  elem_t mul(elem_t a, elem_t b) const {
    if (!mul_tab_.empty()) return mul_tab_[(std::size_t)a * q_ + b];
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= (std::uint32_t)(q_ - 1)) s -= (q_ - 1);
    return exp_[s];
  }
  elem_t inv(elem_t a) const;  // DivisionByZero on 0
  elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }
  elem_t pow(elem_t a, long long e) const;         // e >= 0
  elem_t frobenius(elem_t a, long j) const;        // a^{p^j}, j >= 0
  elem_t conj(elem_t a) const;                     // a^{sqrt q}; k must be even
  elem_t from_int(long long n) const;              // n mod p in the prime subfield
  elem_t gen_code() const;                         // residue class of `a`
  elem_t from_gen_poly(const std::vector<long long>& c) const;  // sum c_i a^i

  std::string elem_str(elem_t a) const;      // "0", "2", "a+1", "2*a^2+a"
  std::string elem_literal(elem_t a) const;  // coefficient literal: "2" or "(a+1)"

  FieldElement make(elem_t code) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(long long n) const;  // from_int
  FieldElement generator() const;
  std::vector<FieldElement> elements() const;  // all q, canonical order

  // F_{q^m}, built-in modulus.  FieldTooLarge beyond the order cap.
  const Field* extension(int m) const;
  // Fixed embedding this -> target; IncompatibleFields unless p matches and
  // k divides target's k.  Cached per (source, target) pair.
  const Embedding& embedding_into(const Field* target) const;
  elem_t embed_to(elem_t x, const Field* target) const;

  std::string name() const;  // "F_q"

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;
  ~Field();

 private:
  Field(long p, int k, std::vector<long> mod);
  void build_tables();
  elem_t add_slow(elem_t a, elem_t b) const;
  elem_t mul_poly(elem_t a, elem_t b) const;  // table-free, used during setup

  long p_;
  int k_;
  long q_;
  std::vector<long> mod_;  // constant first, length k+1, monic
  std::vector<elem_t> neg_tab_, exp_, log_, frob_, add_tab_, mul_tab_;
  elem_t gen_;  // multiplicative generator backing exp_/log_

  struct EmbedCache;
  mutable EmbedCache* embeds_;
};

class FieldElement {
 public:
  FieldElement() : f_(nullptr), v_(0) {}
  FieldElement(const Field* f, elem_t v) : f_(f), v_(v) {}

  const Field* field() const { return f_; }
  elem_t code() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  std::vector<long> coeffs() const;

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    return {same(a, b), a.f_->add(a.v_, b.v_)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    return {same(a, b), a.f_->sub(a.v_, b.v_)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    return {same(a, b), a.f_->mul(a.v_, b.v_)};
  }
  friend FieldElement operator/(FieldElement a, FieldElement b) {
    return {same(a, b), a.f_->div(a.v_, b.v_)};
  }
  FieldElement operator-() const { return {f_, f_->neg(v_)}; }
  friend bool operator==(FieldElement a, FieldElement b) {
    return same(a, b) && a.v_ == b.v_;
  }
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

  FieldElement inv() const { return {f_, f_->inv(v_)}; }
  FieldElement pow(long long e) const { return {f_, f_->pow(v_, e)}; }
  FieldElement frobenius_pow(long j) const { return {f_, f_->frobenius(v_, j)}; }
  FieldElement conjugate() const { return {f_, f_->conj(v_)}; }
  FieldElement embed(const Field* target) const {
    return {target, f_->embed_to(v_, target)};
  }
  std::string str() const { return f_->elem_str(v_); }

 private:
  static const Field* same(const FieldElement& a, const FieldElement& b) {
    require(a.f_ && a.f_ == b.f_, Err::FieldMismatch,
            "operands belong to different fields");
    return a.f_;
  }
  const Field* f_;
  elem_t v_;
};

bool is_prime(long n);

}  // namespace frobnc::gf

#endif
