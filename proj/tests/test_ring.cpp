#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octadet/verify.hpp"

using namespace octadet;

namespace {

std::vector<RingPtr> sample_rings() {
  return {Ring::parse("int"), Ring::parse("mod:6"), Ring::parse("mod:2"),
          Ring::parse("poly:int"), Ring::parse("poly:mod:2")};
}

}  // namespace

TEST_CASE("ring spec grammar") {
  CHECK(Ring::parse("int")->kind() == Ring::Kind::Integers);
  auto m6 = Ring::parse("mod:6");
  CHECK(m6->kind() == Ring::Kind::IntegersMod);
  CHECK(m6->modulus() == 6);
  auto pm2 = Ring::parse("poly:mod:2");
  CHECK(pm2->kind() == Ring::Kind::Poly);
  CHECK(pm2->inner()->modulus() == 2);
  CHECK(pm2->spec() == "poly:mod:2");

  CHECK_THROWS_AS(Ring::parse("mod:1"), parse_error);
  CHECK_THROWS_AS(Ring::parse("mod:"), parse_error);
  CHECK_THROWS_AS(Ring::parse("mod:x"), parse_error);
  CHECK_THROWS_AS(Ring::parse("gf:4"), parse_error);
  CHECK_THROWS_AS(Ring::parse("poly:"), parse_error);
}

TEST_CASE("boolean rings") {
  CHECK_FALSE(Ring::parse("int")->is_boolean());
  CHECK_FALSE(Ring::parse("mod:6")->is_boolean());
  CHECK(Ring::parse("mod:2")->is_boolean());
  CHECK(Ring::parse("poly:mod:2")->is_boolean());
  CHECK_FALSE(Ring::parse("poly:int")->is_boolean());
}

TEST_CASE("basic arithmetic") {
  auto m6 = Ring::parse("mod:6");
  CHECK(add(m6->from_int(4), m6->from_int(5)) == m6->from_int(3));

  // (x+1)^2 = x^2 + 1 over F_2[x]: the cross term 2x vanishes
  auto pm2 = Ring::parse("poly:mod:2");
  auto inner = pm2->inner();
  Element x_plus_1 = pm2->make_poly({inner->one(), inner->one()});
  Element sq = mul(x_plus_1, x_plus_1);
  CHECK(sq == pm2->make_poly({inner->one(), inner->zero(), inner->one()}));

  auto z = Ring::parse("int");
  CHECK(neg(z->zero()) == z->zero());
  CHECK(sub(z->from_int(3), z->from_int(5)) == z->from_int(-2));
  CHECK_THROWS_AS(add(z->one(), m6->one()), domain_error);
}

TEST_CASE("nat_scale") {
  auto m5 = Ring::parse("mod:5");
  CHECK(nat_scale(3, m5->from_int(2)) == m5->from_int(1));
  auto z = Ring::parse("int");
  CHECK(nat_scale(0, z->from_int(17)) == z->zero());
  auto m2 = Ring::parse("mod:2");
  CHECK(nat_scale(2, m2->one()) == m2->zero());
  for (unsigned n = 1; n <= 10; ++n)
    CHECK(nat_scale(pow2(n), m2->from_int(1)) == m2->zero());
}

TEST_CASE("nat_scale equals naive iterated addition") {
  SplitMix64 rng(7);
  for (const auto& ring : sample_rings()) {
    for (int rep = 0; rep < 5; ++rep) {
      Element a = random_element(ring, rng);
      Nat c = Nat(rng.below(1001));
      Element naive = ring->zero();
      for (Nat i = 0; i < c; ++i) naive = add(naive, a);
      CHECK(nat_scale(c, a) == naive);
    }
  }
}

TEST_CASE("ring_pow") {
  auto z = Ring::parse("int");
  CHECK(ring_pow(z->from_int(-1), 4) == z->one());
  CHECK(ring_pow(z->from_int(-1), 5) == z->from_int(-1));
  CHECK(ring_pow(z->from_int(123), 0) == z->one());
  auto m6 = Ring::parse("mod:6");
  CHECK(ring_pow(m6->from_int(3), 2) == m6->from_int(3));
}

TEST_CASE("sign_of_parity") {
  auto z = Ring::parse("int");
  CHECK(sign_of_parity(Parity::Even, *z) == z->one());
  CHECK(sign_of_parity(Parity::Odd, *z) == z->from_int(-1));
  auto m2 = Ring::parse("mod:2");
  CHECK(sign_of_parity(Parity::Odd, *m2) == m2->one());
}

TEST_CASE("ring axioms on random triples") {
  SplitMix64 rng(11);
  for (const auto& ring : sample_rings()) {
    for (int rep = 0; rep < 25; ++rep) {
      Element a = random_element(ring, rng);
      Element b = random_element(ring, rng);
      Element c = random_element(ring, rng);
      CHECK(add(a, b) == add(b, a));
      CHECK(mul(a, b) == mul(b, a));
      CHECK(add(add(a, b), c) == add(a, add(b, c)));
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
      CHECK(add(a, ring->zero()) == a);
      CHECK(mul(a, ring->one()) == a);
      CHECK(add(a, neg(a)) == ring->zero());
    }
  }
}

TEST_CASE("polynomial normalization is idempotent") {
  auto pz = Ring::parse("poly:int");
  auto z = pz->inner();
  Element a = pz->make_poly({z->from_int(2), z->from_int(3), z->zero(),
                             z->zero()});
  Element b = pz->make_poly({z->from_int(2), z->from_int(3)});
  CHECK(a == b);
  CHECK(a.as_poly().size() == 2);
  CHECK(pz->make_poly(a.as_poly()) == a);
  CHECK(pz->make_poly({z->zero(), z->zero()}) == pz->zero());
}

TEST_CASE("natural-number helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(pow2(10) == 1024);
}
