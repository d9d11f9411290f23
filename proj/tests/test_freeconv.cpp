#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octadet/hyperoct.hpp"
#include "octadet/verify.hpp"

using namespace octadet;

namespace {

const RingPtr kZ = Ring::parse("int");

CharPolyCoeffs coeffs_of(const RingPtr& ring,
                         const std::vector<long long>& vals) {
  std::vector<Element> c;
  for (long long v : vals) c.push_back(ring->from_int(v));
  return CharPolyCoeffs{ring, std::move(c)};
}

}  // namespace

TEST_CASE("factorial_constant") {
  CHECK(factorial_constant(1, 1, 0) == 1);
  for (int n = 0; n <= 6; ++n) CHECK(factorial_constant(n, 0, 0) == factorial(unsigned(n)));
  CHECK_THROWS_AS(factorial_constant(3, 2, 3), domain_error);
  CHECK_THROWS_AS(factorial_constant(2, 3, 1), domain_error);
}

TEST_CASE("factorial_constant cross-check identity") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k)
      for (int i = 0; i <= k; ++i) {
        Nat expect = factorial(unsigned(i)) * factorial(unsigned(n - i)) *
                     binomial(unsigned(n - k + i), unsigned(i));
        CHECK(factorial_constant(n, k, i) == expect);
      }
}

TEST_CASE("conv_mult_rhs") {
  // n = m = 1: p = [1, bc], q = [1, a]
  auto r = conv_mult_rhs(coeffs_of(kZ, {1, 15}), coeffs_of(kZ, {1, 2}));
  CHECK(r.poly.coeffs ==
        std::vector<Element>{kZ->from_int(2), kZ->from_int(60)});
  CHECK(r.provenance == "mult(n=1,m=1)");

  // q = charpoly(identity(m)): r_k = 2^m m! p_k
  int m = 3, n = 2;
  auto q = charpoly(Matrix::identity(kZ, m));
  SplitMix64 rng(3);
  auto p = charpoly(random_matrix(kZ, n, n, rng));
  auto rid = conv_mult_rhs(p, q);
  for (int k = 0; k <= n; ++k)
    CHECK(rid.poly.coeffs[k] ==
          nat_scale(pow2(unsigned(m)) * factorial(unsigned(m)), p.coeffs[k]));

  // p_k = 0 annihilates r_k
  auto rz = conv_mult_rhs(coeffs_of(kZ, {1, 0, 7}), coeffs_of(kZ, {1, 1, 1}));
  CHECK(rz.poly.coeffs[1] == kZ->zero());

  auto m6 = Ring::parse("mod:6");
  CHECK_THROWS_AS(
      conv_mult_rhs(coeffs_of(kZ, {1, 1}), coeffs_of(m6, {1, 1})),
      domain_error);
}

TEST_CASE("conv_add_rhs") {
  auto r = conv_add_rhs(coeffs_of(kZ, {1, 3}), coeffs_of(kZ, {1, 4}));
  CHECK(r.poly.coeffs ==
        std::vector<Element>{kZ->from_int(2), kZ->from_int(14)});
  CHECK(r.provenance == "add(n=1)");

  // q = [1, 0, ..., 0]: r_k = 2^n n! p_k
  int n = 3;
  SplitMix64 rng(4);
  auto p = charpoly(random_matrix(kZ, n, n, rng));
  auto rz = conv_add_rhs(p, coeffs_of(kZ, {1, 0, 0, 0}));
  for (int k = 0; k <= n; ++k)
    CHECK(rz.poly.coeffs[k] ==
          nat_scale(pow2(unsigned(n)) * factorial(unsigned(n)), p.coeffs[k]));

  // p = q = [1, 0, ..., 0]
  auto rzz = conv_add_rhs(coeffs_of(kZ, {1, 0, 0}), coeffs_of(kZ, {1, 0, 0}));
  CHECK(rzz.poly.coeffs[0] == nat_scale(Nat(4 * 2), kZ->one()));
  CHECK(rzz.poly.coeffs[1] == kZ->zero());
  CHECK(rzz.poly.coeffs[2] == kZ->zero());

  CHECK_THROWS_AS(
      conv_add_rhs(coeffs_of(kZ, {1, 1}), coeffs_of(kZ, {1, 1, 1})),
      domain_error);
}

TEST_CASE("conv_add_rhs is symmetric") {
  SplitMix64 rng(6);
  for (const auto& ring : {kZ, Ring::parse("mod:6")})
    for (int n = 1; n <= 3; ++n) {
      auto p = charpoly(random_matrix(ring, n, n, rng));
      auto q = charpoly(random_matrix(ring, n, n, rng));
      CHECK(conv_add_rhs(p, q).poly == conv_add_rhs(q, p).poly);
    }
}

TEST_CASE("conv_rect_rhs") {
  std::vector<Element> pm = {kZ->one(), kZ->from_int(10)};   // [1, ac]
  std::vector<Element> qm = {kZ->one(), kZ->from_int(21)};   // [1, bd]
  auto r = conv_rect_rhs(pm, qm, 1, 1);
  CHECK(r.poly.coeffs ==
        std::vector<Element>{kZ->from_int(4), kZ->from_int(124)});
  CHECK(r.provenance == "rect(n=1,m=1)");

  // qm = [1, 0, ...]: only i = k survives, with c_{m,k,k} c_{n,k,k}
  int n = 2, m = 3;
  SplitMix64 rng(5);
  auto ac = minor_sum_vector(random_matrix(kZ, n, n, rng), n);
  std::vector<Element> zero_qm(n + 1, kZ->zero());
  zero_qm[0] = kZ->one();
  auto rz = conv_rect_rhs(ac, zero_qm, n, m);
  for (int k = 0; k <= n; ++k) {
    Nat cst = pow2(unsigned(n + m)) * factorial_constant(m, k, k) *
              factorial_constant(n, k, k);
    CHECK(rz.poly.coeffs[k] == nat_scale(cst, ac[k]));
  }

  // k = 0 coefficient: 2^{n+m} m! n!
  CHECK(rz.poly.coeffs[0] ==
        nat_scale(pow2(unsigned(n + m)) * factorial(unsigned(n)) *
                      factorial(unsigned(m)),
                  kZ->one()));

  CHECK_THROWS_AS(conv_rect_rhs(pm, qm, 2, 1), domain_error);
}

TEST_CASE("untwist_alternating") {
  auto p = coeffs_of(kZ, {1, -3, 5, -7});
  auto u = untwist_alternating(p);
  CHECK(u == std::vector<Element>{kZ->from_int(1), kZ->from_int(3),
                                  kZ->from_int(5), kZ->from_int(7)});
}

TEST_CASE("minor_sum_vector") {
  SplitMix64 rng(9);
  Matrix a = random_matrix(kZ, 3, 3, rng);
  auto v = minor_sum_vector(a, 4);
  REQUIRE(v.size() == 5);
  for (int k = 0; k <= 4; ++k) CHECK(v[k] == principal_minor_sum(a, k));
}

TEST_CASE("closed forms match group sums") {
  SplitMix64 rng(10);
  for (const auto& ring : {kZ, Ring::parse("mod:6"), Ring::parse("mod:2"),
                           Ring::parse("poly:int")}) {
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 2; ++m) {
        Matrix a = random_matrix(ring, m, m, rng);
        Matrix b = random_matrix(ring, n, m, rng);
        Matrix c = random_matrix(ring, m, n, rng);
        CHECK(conv_mult_lhs(a, b, c) ==
              conv_mult_rhs(charpoly(mat_mul(b, c)), charpoly(a)).poly);
      }
    for (int n = 1; n <= 2; ++n) {
      Matrix a = random_matrix(ring, n, n, rng);
      Matrix b = random_matrix(ring, n, n, rng);
      CHECK(conv_add_lhs(a, b) ==
            conv_add_rhs(charpoly(a), charpoly(b)).poly);
    }
    for (int n = 1; n <= 2; ++n)
      for (int m = n; m <= 2; ++m) {
        Matrix a = random_matrix(ring, n, m, rng);
        Matrix b = random_matrix(ring, n, m, rng);
        Matrix c = random_matrix(ring, m, n, rng);
        Matrix d = random_matrix(ring, m, n, rng);
        auto pm = minor_sum_vector(mat_mul(a, c), n);
        auto qm = minor_sum_vector(mat_mul(b, d), n);
        CHECK(conv_rect_lhs(a, b, c, d) ==
              conv_rect_rhs(pm, qm, n, m).poly);
      }
  }
}

TEST_CASE("mutated constants break the closed forms") {
  SplitMix64 rng(12);
  Matrix a = random_matrix(kZ, 2, 2, rng);
  Matrix b = random_matrix(kZ, 2, 2, rng);
  Matrix c = random_matrix(kZ, 2, 2, rng);
  CHECK(conv_mult_lhs(a, b, c) !=
        conv_mult_rhs(charpoly(mat_mul(b, c)), charpoly(a),
                      constants_for(Mutation::MultConstant))
            .poly);
  CHECK(conv_add_lhs(a, b) !=
        conv_add_rhs(charpoly(a), charpoly(b),
                     constants_for(Mutation::AddConstant))
            .poly);
  Matrix d = random_matrix(kZ, 2, 2, rng);
  auto pm = minor_sum_vector(mat_mul(a, c), 2);
  auto qm = minor_sum_vector(mat_mul(b, d), 2);
  CHECK(conv_rect_lhs(a, b, c, d) !=
        conv_rect_rhs(pm, qm, 2, 2, constants_for(Mutation::RectConstant))
            .poly);
}
