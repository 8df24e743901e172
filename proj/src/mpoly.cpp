#include "frobnc/mpoly.hpp"
#include <cctype>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace frobnc::mpoly {

bool grevlex_greater(const Exps& a, const Exps& b) {
  long long da = std::accumulate(a.begin(), a.end(), 0LL);
  long long db = std::accumulate(b.begin(), b.end(), 0LL);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

namespace {

struct GrevlexDesc {
  bool operator()(const Exps& a, const Exps& b) const {
    return grevlex_greater(a, b);
  }
};

using TermMap = std::map<Exps, elem_t, GrevlexDesc>;

long long exp_sum(const Exps& e) {
  long long s = 0;
  for (long long x : e) {
    require(x >= 0, Err::InvalidParameters, "negative exponent");
    s += x;
    require(s <= kDegreeCap, Err::DegreeOverflow, "total degree exceeds 2^31");
  }
  return s;
}

void map_add(const Field* f, TermMap& m, const Exps& e, elem_t c) {
  if (c == 0) return;
  auto it = m.find(e);
  if (it == m.end()) {
    m.emplace(e, c);
  } else {
    it->second = f->add(it->second, c);
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

void HomogPoly::normalize(long long nominal) {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grevlex_greater(a.e, b.e); });
  deg_ = terms_.empty() ? nominal : exp_sum(terms_[0].e);
  for (const Term& t : terms_) {
    require((int)t.e.size() == nvars_, Err::LengthMismatch,
            "exponent vector length differs from nvars");
    require(exp_sum(t.e) == deg_, Err::NotHomogeneous,
            "terms of different total degree");
  }
}

HomogPoly HomogPoly::zero(const Field* f, int nvars, long long deg) {
  HomogPoly r;
  r.f_ = f;
  r.nvars_ = nvars;
  r.deg_ = deg < 0 ? 0 : deg;
  return r;
}

HomogPoly HomogPoly::monomial(const Field* f, int nvars, const Exps& e,
                              FieldElement c) {
  require(c.field() == f, Err::FieldMismatch, "coefficient field differs");
  HomogPoly r = zero(f, nvars, 0);
  if (!c.is_zero()) r.terms_.push_back({e, c.code()});
  r.normalize(exp_sum(e));
  return r;
}

HomogPoly HomogPoly::make(const Field* f, int nvars,
                          const std::vector<std::pair<Exps, FieldElement>>& terms,
                          long long nominal_deg) {
  TermMap m;
  long long seen_deg = -1;
  for (const auto& [e, c] : terms) {
    require(c.field() == f, Err::FieldMismatch, "coefficient field differs");
    require((int)e.size() == nvars, Err::LengthMismatch,
            "exponent vector length differs from nvars");
    long long d = exp_sum(e);
    if (seen_deg < 0) seen_deg = d;
    require(d == seen_deg, Err::NotHomogeneous, "terms of different total degree");
    map_add(f, m, e, c.code());
  }
  HomogPoly r = zero(f, nvars, nominal_deg >= 0 ? nominal_deg
                                                : (seen_deg >= 0 ? seen_deg : 0));
  for (const auto& [e, c] : m) r.terms_.push_back({e, c});
  r.normalize(r.deg_);
  return r;
}

FieldElement HomogPoly::coeff(const Exps& e) const {
  for (const Term& t : terms_) {
    if (t.e == e) return {f_, t.c};
  }
  return {f_, 0};
}

const Term& HomogPoly::lead() const {
  require(!terms_.empty(), Err::ZeroPolynomial, "leading term of zero polynomial");
  return terms_[0];
}

std::vector<int> HomogPoly::support() const {
  std::vector<int> out;
  for (int i = 0; i < nvars_; ++i) {
    for (const Term& t : terms_) {
      if (t.e[i] > 0) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
  require(f_ == o.f_, Err::FieldMismatch, "polynomial fields differ");
  require(nvars_ == o.nvars_, Err::DimensionMismatch, "nvars differ");
  if (!is_zero() && !o.is_zero())
    require(deg_ == o.deg_, Err::NotHomogeneous, "adding different degrees");
  TermMap m;
  for (const Term& t : terms_) map_add(f_, m, t.e, t.c);
  for (const Term& t : o.terms_) map_add(f_, m, t.e, t.c);
  HomogPoly r = zero(f_, nvars_, is_zero() ? (o.is_zero() ? deg_ : o.deg_) : deg_);
  for (const auto& [e, c] : m) r.terms_.push_back({e, c});
  r.normalize(r.deg_);
  return r;
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const { return *this + o.neg(); }

HomogPoly HomogPoly::neg() const {
  HomogPoly r = *this;
  for (Term& t : r.terms_) t.c = f_->neg(t.c);
  return r;
}

HomogPoly HomogPoly::scale(FieldElement c) const {
  require(c.field() == f_, Err::FieldMismatch, "scalar field differs");
  if (c.is_zero()) return zero(f_, nvars_, deg_);
  HomogPoly r = *this;
  for (Term& t : r.terms_) t.c = f_->mul(t.c, c.code());
  return r;
}

HomogPoly HomogPoly::mul_monomial(const Exps& e, elem_t c) const {
  if (c == 0) return zero(f_, nvars_, deg_ + exp_sum(e));
  HomogPoly r = zero(f_, nvars_, deg_ + exp_sum(e));
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    Exps ne(t.e);
    for (int i = 0; i < nvars_; ++i) ne[i] += e[i];
    r.terms_.push_back({std::move(ne), f_->mul(t.c, c)});
  }
  r.normalize(r.deg_);
  return r;
}

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
  require(f_ == o.f_, Err::FieldMismatch, "polynomial fields differ");
  require(nvars_ == o.nvars_, Err::DimensionMismatch, "nvars differ");
  TermMap m;
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      Exps e(a.e);
      for (int i = 0; i < nvars_; ++i) e[i] += b.e[i];
      map_add(f_, m, e, f_->mul(a.c, b.c));
    }
  }
  HomogPoly r = zero(f_, nvars_, deg_ + o.deg_);
  for (const auto& [e, c] : m) r.terms_.push_back({e, c});
  r.normalize(r.deg_);
  return r;
}

bool HomogPoly::operator==(const HomogPoly& o) const {
  if (f_ != o.f_ || nvars_ != o.nvars_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
  }
  if (terms_.empty() && deg_ != o.deg_) return false;
  return true;
}

HomogPoly HomogPoly::pow(long long e) const {
  require(e >= 0, Err::InvalidParameters, "negative polynomial power");
  require(deg_ * std::max<long long>(e, 1) <= kDegreeCap, Err::DegreeOverflow,
          "power exceeds the degree cap");
  HomogPoly acc = monomial(f_, nvars_, Exps(nvars_, 0), f_->one());
  HomogPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

HomogPoly HomogPoly::frobenius_twist(long j) const {
  long long pj = 1;
  for (long i = 0; i < j; ++i) {
    pj *= f_->p();
    require(deg_ * pj <= kDegreeCap, Err::DegreeOverflow,
            "Frobenius twist exceeds the degree cap");
  }
  HomogPoly r = zero(f_, nvars_, deg_ * pj);
  for (const Term& t : terms_) {
    Exps e(t.e);
    for (auto& x : e) x *= pj;
    r.terms_.push_back({std::move(e), f_->frobenius(t.c, j)});
  }
  r.normalize(r.deg_);
  return r;
}

HomogPoly HomogPoly::partial_derivative(int i) const {
  require(i >= 0 && i < nvars_, Err::IndexOutOfRange,
          "variable index out of range");
  TermMap m;
  for (const Term& t : terms_) {
    if (t.e[i] == 0) continue;
    elem_t c = f_->mul(t.c, f_->from_int(t.e[i]));
    if (c == 0) continue;
    Exps e(t.e);
    e[i] -= 1;
    map_add(f_, m, e, c);
  }
  HomogPoly r = zero(f_, nvars_, deg_ > 0 ? deg_ - 1 : 0);
  for (const auto& [e, c] : m) r.terms_.push_back({e, c});
  r.normalize(r.deg_);
  return r;
}

FieldElement HomogPoly::evaluate(const std::vector<FieldElement>& coords) const {
  require((int)coords.size() == nvars_, Err::LengthMismatch,
          "coordinate count differs from nvars");
  const Field* ext = f_;
  if (!coords.empty()) ext = coords[0].field();
  std::vector<elem_t> raw(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    require(coords[i].field() == ext, Err::FieldMismatch,
            "coordinates in different fields");
    raw[i] = coords[i].code();
  }
  return {ext, evaluate_raw(ext, raw)};
}

elem_t HomogPoly::evaluate_raw(const Field* ext,
                               const std::vector<elem_t>& coords) const {
  require((int)coords.size() == nvars_, Err::LengthMismatch,
          "coordinate count differs from nvars");
  elem_t acc = 0;
  for (const Term& t : terms_) {
    elem_t v = f_->embed_to(t.c, ext);
    for (int i = 0; i < nvars_ && v != 0; ++i) {
      if (t.e[i] != 0) v = ext->mul(v, ext->pow(coords[i], t.e[i]));
    }
    acc = ext->add(acc, v);
  }
  return acc;
}

HomogPoly HomogPoly::substitute_linear(const linalg::Mat& m, int out_nvars) const {
  require(m.field() == f_, Err::FieldMismatch, "matrix field differs");
  require(m.rows() == nvars_ && m.cols() == out_nvars, Err::DimensionMismatch,
          "substitution matrix must be nvars x out_nvars");
  std::vector<HomogPoly> lin;
  lin.reserve(nvars_);
  for (int i = 0; i < nvars_; ++i) {
    std::vector<std::pair<Exps, FieldElement>> ts;
    for (int j = 0; j < out_nvars; ++j) {
      if (m.at(i, j) == 0) continue;
      Exps e(out_nvars, 0);
      e[j] = 1;
      ts.emplace_back(e, FieldElement(f_, m.at(i, j)));
    }
    lin.push_back(make(f_, out_nvars, ts, 1));
  }
  HomogPoly acc = zero(f_, out_nvars, deg_);
  for (const Term& t : terms_) {
    HomogPoly prod = monomial(f_, out_nvars, Exps(out_nvars, 0),
                              FieldElement(f_, t.c));
    for (int i = 0; i < nvars_; ++i) {
      if (t.e[i] > 0) prod = prod * lin[i].pow(t.e[i]);
    }
    if (acc.is_zero() && !prod.is_zero()) {
      acc = prod;
    } else if (!prod.is_zero()) {
      acc = acc + prod;
    }
  }
  if (acc.is_zero()) return zero(f_, out_nvars, deg_);
  return acc;
}

std::optional<HomogPoly> HomogPoly::divides(const HomogPoly& g) const {
  require(!is_zero(), Err::ZeroDivisor, "division by the zero polynomial");
  require(f_ == g.f_, Err::FieldMismatch, "polynomial fields differ");
  require(nvars_ == g.nvars_, Err::DimensionMismatch, "nvars differ");
  long long qdeg = g.deg_ - deg_;
  if (g.is_zero()) return zero(f_, nvars_, qdeg >= 0 ? qdeg : 0);
  if (qdeg < 0) return std::nullopt;

  TermMap rem;
  for (const Term& t : g.terms_) rem.emplace(t.e, t.c);
  const Term& lf = terms_[0];
  elem_t lf_inv = f_->inv(lf.c);
  TermMap quot;
  while (!rem.empty()) {
    const auto& [le, lc] = *rem.begin();
    Exps qe(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      long long d = le[i] - lf.e[i];
      if (d < 0) return std::nullopt;  // single divisor: term lands in remainder
      qe[i] = d;
    }
    elem_t qc = f_->mul(lc, lf_inv);
    quot.emplace(qe, qc);
    for (const Term& t : terms_) {
      Exps e(t.e);
      for (int i = 0; i < nvars_; ++i) e[i] += qe[i];
      map_add(f_, rem, e, f_->neg(f_->mul(t.c, qc)));
    }
  }
  HomogPoly q = zero(f_, nvars_, qdeg);
  for (const auto& [e, c] : quot) q.terms_.push_back({e, c});
  q.normalize(q.deg_);
  return q;
}

std::optional<HomogPoly> HomogPoly::pth_root() const {
  long p = f_->p();
  for (const Term& t : terms_) {
    for (long long e : t.e) {
      if (e % p != 0) return std::nullopt;
    }
  }
  HomogPoly r = zero(f_, nvars_, deg_ / p);
  for (const Term& t : terms_) {
    Exps e(t.e);
    for (auto& x : e) x /= p;
    r.terms_.push_back({std::move(e), f_->frobenius(t.c, f_->k() - 1)});
  }
  r.normalize(r.deg_);
  return r;
}

EulerCheck HomogPoly::euler_check() const {
  HomogPoly lhs = zero(f_, nvars_, deg_);
  for (int i = 0; i < nvars_; ++i) {
    Exps xi(nvars_, 0);
    xi[i] = 1;
    HomogPoly part = partial_derivative(i).mul_monomial(xi, f_->from_int(1));
    lhs = lhs + part;
  }
  HomogPoly rhs = scale(FieldElement(f_, f_->from_int(deg_)));
  return {lhs == rhs, lhs, rhs};
}

HomogPoly HomogPoly::embed(const Field* target) const {
  HomogPoly r = zero(target, nvars_, deg_);
  for (const Term& t : terms_) r.terms_.push_back({t.e, f_->embed_to(t.c, target)});
  r.normalize(r.deg_);
  return r;
}

std::string HomogPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_vars = false;
    for (long long e : t.e) has_vars = has_vars || e > 0;
    bool unit = (t.c == f_->from_int(1));
    if (!unit || !has_vars) os << f_->elem_literal(t.c);
    bool need_star = !unit && has_vars;
    for (int i = 0; i < nvars_; ++i) {
      if (t.e[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << "x" << i;
      if (t.e[i] > 1) os << "^" << t.e[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Parser {
  const std::string& s;
  const Field* f;
  int nvars;
  std::size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) const {
    fail(Err::SyntaxError, msg + " at position " + std::to_string(pos));
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit((unsigned char)s[pos]);
  }
  long long nat() {
    skip_ws();
    if (!at_digit()) err("expected a number");
    long long v = 0;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
      v = v * 10 + (s[pos] - '0');
      if (v > kDegreeCap) err("number too large");
      ++pos;
    }
    return v;
  }

  elem_t elemexpr() {
    // integer-coefficient polynomial expression in the generator `a`
    elem_t acc = 0;
    long long sign = 1;
    if (eat('-')) sign = -1;
    while (true) {
      long long c = 1;
      bool have_num = false;
      if (at_digit()) {
        c = nat();
        have_num = true;
      }
      long long e = 0;
      if (have_num) eat('*');
      if (peek('a')) {
        require(f->k() >= 2, Err::CoefficientNotInField,
                "generator `a` is undefined in a prime field");
        ++pos;
        e = 1;
        if (eat('^')) e = nat();
      } else if (!have_num) {
        err("expected a coefficient term");
      }
      elem_t v = f->mul(f->from_int(sign * c), f->pow(f->gen_code(), e));
      acc = f->add(acc, v);
      skip_ws();
      if (eat('+')) {
        sign = 1;
      } else if (eat('-')) {
        sign = -1;
      } else {
        break;
      }
    }
    return acc;
  }

  elem_t coeff() {
    if (eat('(')) {
      elem_t v = elemexpr();
      if (!eat(')')) err("expected ')'");
      return v;
    }
    return f->from_int(nat());
  }

  bool factor(Exps& e) {
    if (!peek('x')) return false;
    ++pos;
    if (!at_digit()) err("expected a variable index after 'x'");
    long long idx = nat();
    require(idx < nvars, Err::UnknownVariable,
            "variable x" + std::to_string(idx) + " exceeds nvars");
    long long exp = 1;
    if (eat('^')) exp = nat();
    e[idx] += exp;
    return true;
  }

  void term(std::vector<std::pair<Exps, FieldElement>>& out, bool negate) {
    elem_t c = f->from_int(1);
    bool have_coeff = false;
    skip_ws();
    if (at_digit() || peek('(')) {
      c = coeff();
      have_coeff = true;
      eat('*');
    }
    Exps e(nvars, 0);
    bool any = factor(e);
    while (any && eat('*')) {
      if (!factor(e)) err("expected a variable factor after '*'");
    }
    if (!any && !have_coeff) err("expected a term");
    if (negate) c = f->neg(c);
    out.emplace_back(std::move(e), FieldElement(f, c));
  }

  HomogPoly run() {
    std::vector<std::pair<Exps, FieldElement>> terms;
    bool neg = eat('-');
    term(terms, neg);
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) {
        term(terms, false);
      } else if (eat('-')) {
        term(terms, true);
      } else {
        err("unexpected character '" + std::string(1, s[pos]) + "'");
      }
    }
    return HomogPoly::make(f, nvars, terms);
  }
};

}  // namespace

HomogPoly parse_poly(const std::string& text, const Field* f, int nvars) {
  Parser parser{text, f, nvars};
  return parser.run();
}

UPoly binary_dehomogenize(const HomogPoly& f, long long* inf_mult) {
  require(f.nvars() == 2, Err::DimensionMismatch, "binary form expected");
  require(!f.is_zero(), Err::ZeroForm, "zero binary form");
  long long d = f.degree();
  std::vector<elem_t> c((std::size_t)d + 1, 0);
  for (const Term& t : f.terms()) c[(std::size_t)t.e[0]] = t.c;
  UPoly u(f.field(), std::move(c));
  if (inf_mult) *inf_mult = d - u.deg();
  return u;
}

bool binary_squarefree(const HomogPoly& f) {
  require(!f.is_zero(), Err::ZeroForm, "zero binary form");
  long long inf_mult = 0;
  UPoly u = binary_dehomogenize(f, &inf_mult);
  if (inf_mult > 1) return false;
  if (u.deg() == 0) return true;
  UPoly du = u.derivative();
  if (du.is_zero()) return false;
  return upoly_gcd(u, du).deg() == 0;
}

}  // namespace frobnc::mpoly
