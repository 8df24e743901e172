#include "frobnc/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace frobnc::gf {

namespace {

// Dense F_p polynomial helpers, constant term first.  Only used while
// validating moduli and constructing field tables.
using PPoly = std::vector<long>;

void ptrim(PPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  ptrim(r);
  return r;
}

PPoly pmod(PPoly a, const PPoly& m, long p) {
  ptrim(a);
  long lead_inv = 1;  // moduli here are monic
  while (a.size() >= m.size()) {
    long c = a.back() % p;
    std::size_t shift = a.size() - m.size();
    if (c != 0) {
      long f = (c * lead_inv) % p;
      for (std::size_t i = 0; i < m.size(); ++i) {
        a[i + shift] = ((a[i + shift] - f * m[i]) % p + p) % p;
      }
    }
    a.pop_back();
    ptrim(a);
  }
  return a;
}

PPoly pgcd(PPoly a, PPoly b, long p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    // make b monic for pmod
    long inv = 1;
    long lb = b.back();
    for (long t = 1; t < p; ++t)
      if ((lb * t) % p == 1) inv = t;
    PPoly bm(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) bm[i] = (b[i] * inv) % p;
    PPoly r = pmod(a, bm, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PPoly pxpow_mod(long long e, const PPoly& m, long p) {
  // x^e mod m by square and multiply
  PPoly result{1};
  PPoly base{0, 1};
  base = pmod(base, m, p);
  while (e > 0) {
    if (e & 1) result = pmod(pmul(result, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const PPoly& m, long p, int k) {
  if (k == 1) return true;
  // Rabin: x^{p^k} == x mod m, and gcd(x^{p^{k/l}} - x, m) = 1 for prime l | k.
  auto xq_minus_x = [&](long long e) {
    PPoly f = pxpow_mod(e, m, p);
    if (f.size() < 2) f.resize(2, 0);
    f[1] = ((f[1] - 1) % p + p) % p;
    ptrim(f);
    return f;
  };
  long long pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  if (!xq_minus_x(pk).empty()) return false;
  int kk = k;
  for (int l = 2; l * l <= kk; ++l) {
    if (kk % l) continue;
    while (kk % l == 0) kk /= l;
    long long e = 1;
    for (int i = 0; i < k / l; ++i) e *= p;
    PPoly g = pgcd(m, xq_minus_x(e), p);
    if (g.size() != 1) return false;
  }
  if (kk > 1) {
    long long e = 1;
    for (int i = 0; i < k / kk; ++i) e *= p;
    PPoly g = pgcd(m, xq_minus_x(e), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<long> builtin_modulus(long p, int k) {
  // First monic irreducible of degree k, ordering the candidate coefficient
  // vectors (c_{k-1},...,c_0) lexicographically.  Deterministic, and matches
  // the usual small-field generators (a^2+a+1 for F_4, a^3+a+1 for F_8).
  long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (long code = 0; code < total; ++code) {
    PPoly m(k + 1, 0);
    m[k] = 1;
    long c = code;
    for (int i = 0; i < k; ++i) {
      m[i] = c % p;
      c /= p;
    }
    if (is_irreducible(m, p, k)) return m;
  }
  fail(Err::ReducibleModulus, "no irreducible polynomial found (internal)");
}

struct Registry {
  std::mutex mu;
  std::map<std::tuple<long, int, std::vector<long>>, std::unique_ptr<Field>> fields;
};

Registry& registry() {
  static Registry* r = new Registry;
  return *r;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct Field::EmbedCache {
  std::mutex mu;
  std::unordered_map<const Field*, std::unique_ptr<Embedding>> into;
  std::unordered_map<const Field*, std::unordered_map<elem_t, elem_t>> reverse;
};

const Field* Field::get(long p, int k) {
  require(is_prime(p), Err::NonPrimeCharacteristic,
          "p = " + std::to_string(p) + " is not prime");
  require(k >= 1, Err::InvalidParameters, "extension degree must be >= 1");
  double qd = 1;
  for (int i = 0; i < k; ++i) qd *= (double)p;
  require(qd <= (double)kMaxFieldOrder, Err::FieldTooLarge,
          "p^k exceeds the 2^16 order cap");
  return get(p, k, builtin_modulus(p, k));
}

const Field* Field::get(long p, int k, const std::vector<long>& modulus) {
  require(is_prime(p), Err::NonPrimeCharacteristic,
          "p = " + std::to_string(p) + " is not prime");
  require(k >= 1, Err::InvalidParameters, "extension degree must be >= 1");
  double qd = 1;
  for (int i = 0; i < k; ++i) qd *= (double)p;
  require(qd <= (double)kMaxFieldOrder, Err::FieldTooLarge,
          "p^k exceeds the 2^16 order cap");
  require((int)modulus.size() == k + 1, Err::ReducibleModulus,
          "modulus must have degree k (length k+1, constant term first)");
  std::vector<long> m(modulus);
  for (auto& c : m) c = ((c % p) + p) % p;
  require(m[k] == 1, Err::ReducibleModulus, "modulus must be monic");
  require(is_irreducible(m, p, k), Err::ReducibleModulus,
          "modulus is reducible over F_p");

  auto key = std::make_tuple(p, k, m);
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  auto it = r.fields.find(key);
  if (it == r.fields.end()) {
    it = r.fields.emplace(key, std::unique_ptr<Field>(new Field(p, k, m))).first;
  }
  return it->second.get();
}

Field::Field(long p, int k, std::vector<long> mod)
    : p_(p), k_(k), mod_(std::move(mod)), embeds_(new EmbedCache) {
  q_ = 1;
  for (int i = 0; i < k_; ++i) q_ *= p_;
  build_tables();
}

Field::~Field() { delete embeds_; }

elem_t Field::add_slow(elem_t a, elem_t b) const {
  elem_t r = 0, mul = 1;
  for (int i = 0; i < k_; ++i) {
    long da = (a / mul) % p_ + (b / mul) % p_;
    if (da >= p_) da -= p_;
    r += (elem_t)(da * mul);
    mul *= (elem_t)p_;
  }
  return r;
}

elem_t Field::mul_poly(elem_t a, elem_t b) const {
  PPoly pa(k_), pb(k_);
  long x = a;
  for (int i = 0; i < k_; ++i) {
    pa[i] = x % p_;
    x /= p_;
  }
  x = b;
  for (int i = 0; i < k_; ++i) {
    pb[i] = x % p_;
    x /= p_;
  }
  PPoly r = pmod(pmul(pa, pb, p_), mod_, p_);
  elem_t code = 0, mul = 1;
  for (std::size_t i = 0; i < r.size(); ++i) {
    code += (elem_t)(r[i] * mul);
    mul *= (elem_t)p_;
  }
  return code;
}

void Field::build_tables() {
  neg_tab_.resize(q_);
  for (long a = 0; a < q_; ++a) {
    elem_t r = 0;
    long x = a, mul = 1;
    for (int i = 0; i < k_; ++i) {
      long d = x % p_;
      x /= p_;
      r += (elem_t)(((p_ - d) % p_) * mul);
      mul *= p_;
    }
    neg_tab_[a] = r;
  }

  // multiplicative generator: smallest code whose order is q-1
  std::vector<long> prime_divs;
  {
    long m = q_ - 1;
    for (long d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        prime_divs.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) prime_divs.push_back(m);
  }
  auto pow_raw = [&](elem_t a, long long e) {
    elem_t r = from_int(1);
    while (e > 0) {
      if (e & 1) r = mul_poly(r, a);
      a = mul_poly(a, a);
      e >>= 1;
    }
    return r;
  };
  gen_ = 0;
  for (elem_t c = 1; c < (elem_t)q_; ++c) {
    bool ok = true;
    for (long d : prime_divs) {
      if (pow_raw(c, (q_ - 1) / d) == from_int(1)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = c;
      break;
    }
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  exp_[0] = from_int(1);
  for (long i = 1; i < q_ - 1; ++i) exp_[i] = mul_poly(exp_[i - 1], gen_);
  for (long i = 0; i < q_ - 1; ++i) log_[exp_[i]] = (elem_t)i;

  frob_.resize(q_);
  for (long a = 0; a < q_; ++a) frob_[a] = pow_raw((elem_t)a, p_);

  if (q_ <= 256) {
    add_tab_.resize((std::size_t)q_ * q_);
    mul_tab_.resize((std::size_t)q_ * q_);
    for (long a = 0; a < q_; ++a) {
      for (long b = 0; b < q_; ++b) {
        add_tab_[(std::size_t)a * q_ + b] = add_slow((elem_t)a, (elem_t)b);
        mul_tab_[(std::size_t)a * q_ + b] = mul_poly((elem_t)a, (elem_t)b);
      }
    }
  }
}

long Field::sqrt_q() const {
  require(square_order(), Err::NotASquareField,
          name() + " does not have square order");
  long r = 1;
  for (int i = 0; i < k_ / 2; ++i) r *= p_;
  return r;
}

elem_t Field::inv(elem_t a) const {
  require(a != 0, Err::DivisionByZero, "inverse of zero in " + name());
  if (a == from_int(1)) return a;
  return exp_[(q_ - 1) - log_[a]];
}

elem_t Field::pow(elem_t a, long long e) const {
  require(e >= 0, Err::InvalidParameters, "negative exponent");
  if (a == 0) return e == 0 ? from_int(1) : 0;
  long long r = e % (q_ - 1);
  if (r == 0) return from_int(1);
  return exp_[((long long)log_[a] * r) % (q_ - 1)];
}

elem_t Field::frobenius(elem_t a, long j) const {
  require(j >= 0, Err::InvalidParameters, "negative Frobenius power");
  j %= k_;
  for (long i = 0; i < j; ++i) a = frob_[a];
  return a;
}

elem_t Field::conj(elem_t a) const {
  require(square_order(), Err::NotASquareField,
          "conjugation needs a square-order field, got " + name());
  return frobenius(a, k_ / 2);
}

elem_t Field::from_int(long long n) const {
  long r = (long)(((n % p_) + p_) % p_);
  return (elem_t)r;
}

elem_t Field::gen_code() const { return k_ >= 2 ? (elem_t)p_ : from_int(1); }

elem_t Field::from_gen_poly(const std::vector<long long>& c) const {
  elem_t a = gen_code();
  elem_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = add(mul(acc, a), from_int(c[i]));
  }
  return acc;
}

std::string Field::elem_str(elem_t v) const {
  if (k_ == 1) return std::to_string(v);
  std::ostringstream os;
  bool first = true;
  long x = v;
  std::vector<long> c(k_);
  for (int i = 0; i < k_; ++i) {
    c[i] = x % p_;
    x /= p_;
  }
  for (int i = k_ - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << "*";
      os << "a";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string Field::elem_literal(elem_t v) const {
  if (k_ == 1 || v < (elem_t)p_) return std::to_string(v);
  return "(" + elem_str(v) + ")";
}

FieldElement Field::make(elem_t code) const { return {this, code}; }
FieldElement Field::zero() const { return {this, 0}; }
FieldElement Field::one() const { return {this, from_int(1)}; }
FieldElement Field::element(long long n) const { return {this, from_int(n)}; }
FieldElement Field::generator() const { return {this, gen_code()}; }

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q_);
  for (long c = 0; c < q_; ++c) out.emplace_back(this, (elem_t)c);
  return out;
}

const Field* Field::extension(int m) const {
  require(m >= 1, Err::InvalidParameters, "extension degree must be >= 1");
  return Field::get(p_, k_ * m);
}

const Embedding& Field::embedding_into(const Field* target) const {
  require(target != nullptr, Err::IncompatibleFields, "null target field");
  require(target->p_ == p_ && target->k_ % k_ == 0, Err::IncompatibleFields,
          name() + " does not embed into " + target->name());
  std::lock_guard<std::mutex> lock(embeds_->mu);
  auto it = embeds_->into.find(target);
  if (it != embeds_->into.end()) return *it->second;

  auto emb = std::make_unique<Embedding>();
  emb->src = this;
  emb->dst = target;
  // first root of our modulus in target enumeration order
  elem_t root = 0;
  bool found = false;
  for (long y = 0; y < target->q_; ++y) {
    elem_t acc = 0;
    for (int i = k_; i >= 0; --i) {
      acc = target->add(target->mul(acc, (elem_t)y), target->from_int(mod_[i]));
    }
    if (acc == 0) {
      root = (elem_t)y;
      found = true;
      break;
    }
  }
  require(found, Err::IncompatibleFields,
          "modulus of " + name() + " has no root in " + target->name());
  emb->fwd.resize(q_);
  for (long x = 0; x < q_; ++x) {
    long v = x;
    std::vector<long> c(k_);
    for (int i = 0; i < k_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    elem_t acc = 0;
    for (int i = k_ - 1; i >= 0; --i) {
      acc = target->add(target->mul(acc, root), target->from_int(c[i]));
    }
    emb->fwd[x] = acc;
  }
  const Embedding& ref = *emb;
  embeds_->into.emplace(target, std::move(emb));
  return ref;
}

elem_t Field::embed_to(elem_t x, const Field* target) const {
  if (target == this) return x;
  return embedding_into(target).fwd[x];
}

std::optional<elem_t> Embedding::preimage(elem_t y) const {
  for (elem_t x = 0; x < fwd.size(); ++x) {
    if (fwd[x] == y) return x;
  }
  return std::nullopt;
}

std::string Field::name() const { return "F_" + std::to_string(q_); }

std::vector<long> FieldElement::coeffs() const {
  std::vector<long> c(f_->k());
  long x = v_;
  for (int i = 0; i < f_->k(); ++i) {
    c[i] = x % f_->p();
    x /= f_->p();
  }
  return c;
}

}  // namespace frobnc::gf
