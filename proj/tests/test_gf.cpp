#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "frobnc/gf.hpp"

using namespace frobnc;
using namespace frobnc::gf;

TEST_CASE("field construction and built-in moduli") {
  const Field* f2 = Field::get(2, 1);
  CHECK(f2->q() == 2);

  const Field* f4 = Field::get(2, 2, {1, 1, 1});  // a^2+a+1
  CHECK(f4->q() == 4);
  CHECK(Field::get(2, 2) == f4);  // built-in table picks the same modulus

  const Field* f8 = Field::get(2, 3, {1, 1, 0, 1});  // a^3+a+1
  CHECK(Field::get(2, 3) == f8);

  const Field* f9 = Field::get(3, 2);
  CHECK(f9->q() == 9);

  CHECK_THROWS_AS(Field::get(4, 1), Error);                 // 4 not prime
  CHECK_THROWS_AS(Field::get(2, 2, {1, 0, 1}), Error);       // (a+1)^2
  CHECK_THROWS_AS(Field::get(2, 17), Error);                 // beyond cap
  CHECK_THROWS_WITH_AS(Field::get(2, 2, {1, 0, 1}), doctest::Contains("ReducibleModulus"), Error);
}

TEST_CASE("arithmetic in F_4 matches the modulus relations") {
  const Field* f4 = Field::get(2, 2);
  FieldElement a = f4->generator();
  FieldElement one = f4->one();

  CHECK(a * (a + one) == one);       // a^2 + a = 1
  CHECK(a.inv() == a + one);
  CHECK((a + a).is_zero());
  CHECK(a.pow(3) == one);
  CHECK(a.str() == "a");
  CHECK((a + one).str() == "a+1");
}

TEST_CASE("arithmetic in F_3") {
  const Field* f3 = Field::get(3, 1);
  CHECK(f3->element(2).pow(2) == f3->one());  // 4 mod 3
  CHECK(f3->element(2) + f3->element(2) == f3->one());
  CHECK_THROWS_AS(f3->zero().inv(), Error);
}

TEST_CASE("field axioms hold exhaustively for q <= 64") {
  for (auto [p, k] : {std::pair<long, int>{2, 1}, {2, 2}, {2, 3}, {2, 4},
                      {2, 5}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2},
                      {7, 1}, {7, 2}, {11, 1}, {13, 1}}) {
    const Field* f = Field::get(p, k);
    long q = f->q();
    for (long a = 0; a < q; ++a) {
      for (long b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        if (b != 0) CHECK(f->mul(f->div(a, b), b) == (elem_t)a);
        for (long c = 0; c < q && q <= 16; ++c) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == f->from_int(1));
    }
  }
}

TEST_CASE("freshman's dream and x^q = x for q <= 64") {
  for (auto [p, k] : {std::pair<long, int>{2, 4}, {2, 6}, {3, 2}, {3, 3},
                      {5, 2}, {7, 2}}) {
    const Field* f = Field::get(p, k);
    for (long a = 0; a < f->q(); ++a) {
      CHECK(f->frobenius(a, k) == (elem_t)a);  // x^{p^k} = x
      CHECK(f->pow(a, f->q()) == (elem_t)a);
      for (long b = 0; b < f->q(); ++b) {
        CHECK(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
      }
    }
  }
}

TEST_CASE("frobenius_pow in F_4 and F_2") {
  const Field* f4 = Field::get(2, 2);
  FieldElement a = f4->generator();
  CHECK(a.frobenius_pow(1) == a + f4->one());  // a^2 = a+1
  const Field* f2 = Field::get(2, 1);
  CHECK(f2->one().frobenius_pow(5) == f2->one());
}

TEST_CASE("conjugation is the sqrt(q) involution") {
  const Field* f4 = Field::get(2, 2);
  FieldElement a = f4->generator();
  CHECK(a.conjugate() == a + f4->one());
  CHECK(a.conjugate().conjugate() == a);

  const Field* f9 = Field::get(3, 2);
  int fixed = 0;
  for (auto x : f9->elements()) {
    CHECK(x.conjugate().conjugate() == x);
    if (x.conjugate() == x) ++fixed;
  }
  CHECK(fixed == 3);  // fixed field is F_3
  // elements of the prime subfield are fixed
  for (long c = 0; c < 3; ++c) CHECK(f9->conj(f9->from_int(c)) == f9->from_int(c));
  // conjugation is multiplicative and additive
  for (auto x : f9->elements())
    for (auto y : f9->elements()) {
      CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
      CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    }

  const Field* f8 = Field::get(2, 3);
  CHECK_THROWS_AS(f8->conj(1), Error);  // k odd
}

TEST_CASE("norm surjectivity onto the fixed subfield for q in {4,9,16}") {
  for (auto [p, k] : {std::pair<long, int>{2, 2}, {3, 2}, {2, 4}}) {
    const Field* f = Field::get(p, k);
    const Field* sub = Field::get(p, k / 2);
    std::set<elem_t> norms;
    for (auto x : f->elements()) norms.insert((x * x.conjugate()).code());
    std::set<elem_t> sub_img;
    for (auto s : sub->elements()) sub_img.insert(sub->embed_to(s.code(), f));
    CHECK(norms == sub_img);
  }
}

TEST_CASE("enumeration order is canonical") {
  const Field* f2 = Field::get(2, 1);
  auto e2 = f2->elements();
  REQUIRE(e2.size() == 2);
  CHECK(e2[0].is_zero());
  CHECK(e2[1] == f2->one());

  const Field* f4 = Field::get(2, 2);
  auto e4 = f4->elements();
  REQUIRE(e4.size() == 4);
  CHECK(e4[0].str() == "0");
  CHECK(e4[1].str() == "1");
  CHECK(e4[2].str() == "a");
  CHECK(e4[3].str() == "a+1");

  CHECK(Field::get(3, 2)->elements().size() == 9);
}

TEST_CASE("embeddings are ring homomorphisms, checked exhaustively F_4 -> F_16") {
  const Field* f4 = Field::get(2, 2);
  const Field* f16 = Field::get(2, 4);
  const Field* f2 = Field::get(2, 1);

  CHECK(f2->one().embed(f4) == f4->one());
  CHECK(f4->zero().embed(f16) == f16->zero());
  CHECK(f4->one().embed(f16) == f16->one());

  for (auto x : f4->elements()) {
    for (auto y : f4->elements()) {
      CHECK((x * y).embed(f16) == x.embed(f16) * y.embed(f16));
      CHECK((x + y).embed(f16) == x.embed(f16) + y.embed(f16));
    }
  }
  // injective
  std::set<elem_t> img;
  for (auto x : f4->elements()) img.insert(x.embed(f16).code());
  CHECK(img.size() == 4);

  CHECK_THROWS_AS(f4->embedding_into(Field::get(2, 3)), Error);  // 2 !| 3
  CHECK_THROWS_AS(f4->embedding_into(Field::get(3, 2)), Error);  // wrong p

  // embedding of an embedding agrees with the direct one on F_2 -> F_4 -> F_16
  for (auto x : f2->elements()) {
    CHECK(x.embed(f4).embed(f16) == x.embed(f16));
  }
}

TEST_CASE("cross-field arithmetic is rejected") {
  const Field* f4 = Field::get(2, 2);
  const Field* f9 = Field::get(3, 2);
  CHECK_THROWS_AS(f4->one() + f9->one(), Error);
}

TEST_CASE("preimage lookup through an embedding") {
  const Field* f2 = Field::get(2, 1);
  const Field* f8 = Field::get(2, 3);
  const Embedding& e = f2->embedding_into(f8);
  CHECK(e.preimage(f8->one().code()).value() == f2->one().code());
  CHECK_FALSE(e.preimage(f8->generator().code()).has_value());
}
