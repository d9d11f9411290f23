#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "octadet/hyperoct.hpp"
#include "octadet/verify.hpp"

using namespace octadet;

namespace {

const RingPtr kZ = Ring::parse("int");

std::string dump(const Matrix& m) {
  std::ostringstream os;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      os << m.at(r, c).as_int() << ",";
  return os.str();
}

}  // namespace

TEST_CASE("enumeration sizes and distinctness") {
  auto signs1 = enumerate_signs(1, kZ);
  REQUIRE(signs1.size() == 2);
  CHECK(signs1[0].at(0, 0) == kZ->one());
  CHECK(signs1[1].at(0, 0) == kZ->from_int(-1));

  CHECK(enumerate_group(2).size() == 8);

  auto perms3 = enumerate_perms(3, kZ);
  REQUIRE(perms3.size() == 6);
  std::set<std::string> seen;
  for (const auto& p : perms3) seen.insert(dump(p));
  CHECK(seen.size() == 6);

  CHECK_THROWS_AS(enumerate_signs(13, kZ), guard_error);
  CHECK_THROWS_AS(enumerate_perms(9, kZ), guard_error);
  CHECK(group_order(3) == 48);
}

TEST_CASE("group element matrices and inverses") {
  for (const auto& g : enumerate_group(3)) {
    Matrix m = group_matrix(g, kZ);
    Matrix mi = group_matrix_inverse(g, kZ);
    CHECK(mat_mul(m, mi) == Matrix::identity(kZ, 3));
    CHECK(mat_mul(mi, m) == Matrix::identity(kZ, 3));
  }
}

TEST_CASE("group closure") {
  for (int n = 1; n <= 3; ++n) {
    std::set<std::string> members;
    for (const auto& g : enumerate_group(n))
      members.insert(dump(group_matrix(g, kZ)));
    CHECK(members.size() == size_t(group_order(n).convert_to<std::uint64_t>()));
    std::vector<std::string> keys(members.begin(), members.end());
    for (const auto& g : enumerate_group(n))
      for (const auto& h : enumerate_group(n))
        CHECK(members.count(dump(mat_mul(group_matrix(g, kZ),
                                         group_matrix(h, kZ)))) == 1);
  }
}

TEST_CASE("max_group_terms env override") {
  CHECK(max_group_terms() == 10000000);
}

TEST_CASE("cancel_sum_q") {
  Subset one1(1, {1});
  CHECK(cancel_sum_q(1, one1, one1, one1, one1, kZ) == kZ->from_int(2));
  CHECK(cancel_sum_q(1, one1, one1, empty_subset(1), empty_subset(1), kZ) ==
        kZ->zero());
  auto m2 = Ring::parse("mod:2");
  Subset s12(3, {1, 2});
  CHECK(cancel_sum_q(3, s12, s12, s12, s12, m2) == m2->zero());
}

TEST_CASE("sign cancellation sum, exhaustive n <= 3") {
  for (const auto& ring : {kZ, Ring::parse("mod:6")})
    for (int n = 1; n <= 3; ++n) {
      auto subs = all_subsets(n);
      for (const auto& s : subs)
        for (const auto& t : subs) {
          if (t.size() != s.size()) continue;
          for (const auto& u : subs)
            for (const auto& v : subs) {
              if (v.size() != u.size()) continue;
              Element expect = (s == t && t == u && u == v)
                                   ? nat_scale(pow2(unsigned(n)), ring->one())
                                   : ring->zero();
              CHECK(cancel_sum_q(n, s, t, u, v, ring) == expect);
            }
        }
    }
}

TEST_CASE("cancel_sum_p") {
  Subset s1(2, {1}), s2(2, {2});
  CHECK(cancel_sum_p(2, s1, s1, s1, kZ) == kZ->one());
  CHECK(cancel_sum_p(2, s1, s1, s2, kZ) == kZ->zero());
  Subset f3 = full_set(3);
  CHECK(cancel_sum_p(3, f3, f3, f3, kZ) == kZ->from_int(6));
}

TEST_CASE("permutation cancellation sum, exhaustive n <= 3") {
  for (const auto& ring : {kZ, Ring::parse("mod:6")})
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= n; ++k)
        for (const auto& s : subsets_of_size(n, k))
          for (const auto& t : subsets_of_size(n, k))
            for (const auto& u : subsets_of_size(n, k)) {
              Nat c = factorial(unsigned(k)) * factorial(unsigned(n - k));
              Element expect =
                  (t == u) ? nat_scale(c, ring->one()) : ring->zero();
              CHECK(cancel_sum_p(n, s, t, u, ring) == expect);
            }
}

TEST_CASE("four_set_table pinned entries") {
  auto table = four_set_table(2, 1);
  CHECK(table.entries.size() == 16);
  std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>,
                      std::vector<int>>,
           Int>
      m;
  for (const auto& [s, t, u, v, val] : table.entries)
    m[{s.members, t.members, u.members, v.members}] = val;
  CHECK(m[{{1}, {1}, {1}, {1}}] == 1);
  CHECK(m[{{1}, {2}, {2}, {1}}] == 1);
  CHECK(m[{{1}, {1}, {1}, {2}}] == 0);
  for (const auto& [key, val] : m) CHECK((val == 0 || val == 1));

  auto t1 = four_set_table(1, 1);
  REQUIRE(t1.entries.size() == 1);
  CHECK(std::get<4>(t1.entries[0]) == 1);

  CHECK_THROWS_AS(four_set_table(7, 2), guard_error);
}

TEST_CASE("four_set_table diagonal matches cancel_sum_p") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) {
      auto table = four_set_table(n, k);
      for (const auto& [s, t, u, v, val] : table.entries)
        if (v == s)
          CHECK(kZ->from_Int(val) == cancel_sum_p(n, s, t, u, kZ));
    }
}

TEST_CASE("four_set_table signed relabeling invariance") {
  // Conjugating the summation variable by pi permutes rows as
  // (S,T,U,V) -> (piS,piT,piU,piV) and multiplies the value by the
  // sign of pi restricted to each of the four subsets.
  for (int n = 2; n <= 4; ++n) {
    int k = n / 2 + 1;
    auto table = four_set_table(n, k);
    std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>,
                        std::vector<int>>,
             Int>
        m;
    for (const auto& [s, t, u, v, val] : table.entries)
      m[{s.members, t.members, u.members, v.members}] = val;
    auto restricted_sign = [](const Permutation& pi, const Subset& s) {
      std::vector<int> img;
      for (int i : s.members) img.push_back(pi.apply(i));
      return parity_of(img);
    };
    for (const auto& pi : all_permutations(n))
      for (const auto& [s, t, u, v, val] : table.entries) {
        Parity p = restricted_sign(pi, s) ^ restricted_sign(pi, t) ^
                   restricted_sign(pi, u) ^ restricted_sign(pi, v);
        Int expect = p == Parity::Even ? val : -val;
        CHECK(m[{apply(pi, s).members, apply(pi, t).members,
                 apply(pi, u).members, apply(pi, v).members}] == expect);
      }
  }
}

TEST_CASE("four_set_table csv shape") {
  auto table = four_set_table(2, 1);
  std::ostringstream os;
  write_csv(table, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "n,k,S,T,U,V,value");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == 16);
}

TEST_CASE("symm_group_sum hand values") {
  Matrix a(kZ, 1, 1), b(kZ, 1, 1), c(kZ, 1, 1);
  a.at(0, 0) = kZ->from_int(3);
  b.at(0, 0) = kZ->from_int(5);
  c.at(0, 0) = kZ->from_int(7);
  Subset one1(1, {1});
  CHECK(symm_group_sum(a, b, c, one1, one1) == kZ->from_int(2 * 3 * 5 * 7));
}

TEST_CASE("symmetric group-sum identity on random instances") {
  SplitMix64 rng(77);
  for (const auto& ring :
       {kZ, Ring::parse("mod:6"), Ring::parse("mod:2")})
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 2; ++m) {
        int r = m;
        Matrix a = random_matrix(ring, n, n, rng);
        Matrix b = random_matrix(ring, m, n, rng);
        Matrix c = random_matrix(ring, n, r, rng);
        Matrix bc = mat_mul(b, c);
        for (int k = 0; k <= std::min({n, m, r}); ++k)
          for (const auto& x : subsets_of_size(m, k))
            for (const auto& y : subsets_of_size(r, k)) {
              Nat cst = pow2(unsigned(n)) * factorial(unsigned(k)) *
                        factorial(unsigned(n - k));
              Element rhs = nat_scale(
                  cst, mul(minor(bc, x, y), principal_minor_sum(a, k)));
              CHECK(symm_group_sum(a, b, c, x, y) == rhs);
            }
      }
}

TEST_CASE("symm special cases") {
  SplitMix64 rng(78);
  int n = 2, m = 2;
  Matrix b = random_matrix(kZ, m, n, rng);
  Matrix c = random_matrix(kZ, n, m, rng);
  Matrix a = Matrix::identity(kZ, n);
  Matrix bc = mat_mul(b, c);
  // k = 0: every minor is one
  CHECK(symm_group_sum(a, b, c, empty_subset(m), empty_subset(m)) ==
        nat_scale(group_order(n), kZ->one()));
  // A = I: conjugation fixes it
  Subset x(m, {1}), y(m, {2});
  CHECK(symm_group_sum(a, b, c, x, y) ==
        nat_scale(group_order(n), minor(bc, x, y)));
}

TEST_CASE("asymm hand values and vanishing") {
  Matrix one(kZ, 1, 1);
  one.at(0, 0) = kZ->one();
  Subset s1(1, {1});
  AsymmSelector sel{s1, s1, s1, s1};
  CHECK(asymm_group_sum(one, one, one, one, one, one, sel) == kZ->from_int(4));

  Matrix a(kZ, 1, 1), e(kZ, 1, 1);
  a.at(0, 0) = kZ->from_int(3);
  e.at(0, 0) = kZ->from_int(5);
  CHECK(asymm_group_sum(a, one, one, e, one, one, sel) == kZ->from_int(60));

  AsymmSelector mixed{s1, s1, empty_subset(1), empty_subset(1)};
  CHECK(asymm_group_sum(a, one, one, e, one, one, mixed) == kZ->zero());
}

TEST_CASE("asymmetric group-sum identity exhaustive at n = m = 2") {
  SplitMix64 rng(79);
  for (const auto& ring : {kZ, Ring::parse("mod:6")}) {
    int n = 2, m = 2, p = 2, r = 2;
    Matrix a = random_matrix(ring, n, m, rng);
    Matrix b = random_matrix(ring, p, n, rng);
    Matrix c = random_matrix(ring, m, r, rng);
    Matrix e = random_matrix(ring, m, n, rng);
    Matrix f = random_matrix(ring, p, m, rng);
    Matrix g = random_matrix(ring, n, r, rng);
    Matrix bg = mat_mul(b, g);
    Matrix fc = mat_mul(f, c);
    Matrix ae = mat_mul(a, e);
    for (int k = 0; k <= 2; ++k)
      for (int j = 0; j <= 2; ++j)
        for (const auto& x : subsets_of_size(p, k))
          for (const auto& y : subsets_of_size(r, k))
            for (const auto& w : subsets_of_size(p, j))
              for (const auto& z : subsets_of_size(r, j)) {
                Element lhs =
                    asymm_group_sum(a, b, c, e, f, g, {x, y, w, z});
                Element rhs = ring->zero();
                if (j == k) {
                  Nat cst = pow2(unsigned(n + m)) * factorial(unsigned(k)) *
                            factorial(unsigned(n - k)) *
                            factorial(unsigned(k)) *
                            factorial(unsigned(m - k));
                  rhs = nat_scale(cst, mul(mul(minor(bg, x, z),
                                               minor(fc, w, y)),
                                           principal_minor_sum(ae, k)));
                }
                CHECK(lhs == rhs);
              }
  }
}

TEST_CASE("conv lhs hand values") {
  Matrix a(kZ, 1, 1), b(kZ, 1, 1), c(kZ, 1, 1), d(kZ, 1, 1);
  a.at(0, 0) = kZ->from_int(2);
  b.at(0, 0) = kZ->from_int(3);
  c.at(0, 0) = kZ->from_int(5);
  d.at(0, 0) = kZ->from_int(7);

  auto cm = conv_mult_lhs(a, b, c);
  CHECK(cm.coeffs == std::vector<Element>{kZ->from_int(2), kZ->from_int(60)});

  auto ca = conv_add_lhs(a, b);
  CHECK(ca.coeffs == std::vector<Element>{kZ->from_int(2), kZ->from_int(10)});

  auto cr = conv_rect_lhs(a, b, c, d);
  // [4, 4(ac + bd)] = [4, 4(10 + 21)]
  CHECK(cr.coeffs == std::vector<Element>{kZ->from_int(4), kZ->from_int(124)});
}

TEST_CASE("conv lhs degenerate collapses") {
  SplitMix64 rng(80);
  int n = 2, m = 2;
  Matrix b = random_matrix(kZ, n, m, rng);
  Matrix c = random_matrix(kZ, m, n, rng);
  auto scaled = [&](const CharPolyCoeffs& p, const Nat& cst) {
    std::vector<Element> out;
    for (const auto& e : p.coeffs) out.push_back(nat_scale(cst, e));
    return out;
  };

  // mult with A = I: all summands identical
  auto cm = conv_mult_lhs(Matrix::identity(kZ, m), b, c);
  CHECK(cm.coeffs == scaled(charpoly(mat_mul(b, c)), group_order(m)));

  // add with B = 0 and A = 0
  Matrix a = random_matrix(kZ, n, n, rng);
  CHECK(conv_add_lhs(a, Matrix(kZ, n, n)).coeffs ==
        scaled(charpoly(a), group_order(n)));
  CHECK(conv_add_lhs(Matrix(kZ, n, n), a).coeffs ==
        scaled(charpoly(a), group_order(n)));

  // rect with A = C = 0: M = BD always
  Matrix bb = random_matrix(kZ, n, m, rng);
  Matrix dd = random_matrix(kZ, m, n, rng);
  CHECK(conv_rect_lhs(Matrix(kZ, n, m), bb, Matrix(kZ, m, n), dd).coeffs ==
        scaled(charpoly(mat_mul(bb, dd)),
               pow2(unsigned(n + m)) * factorial(unsigned(n)) *
                   factorial(unsigned(m))));

  CHECK_THROWS_AS(conv_rect_lhs(Matrix(kZ, 3, 2), Matrix(kZ, 3, 2),
                                Matrix(kZ, 2, 3), Matrix(kZ, 2, 3)),
                  domain_error);
}

TEST_CASE("boolean degeneracy of conv lhs") {
  auto m2 = Ring::parse("mod:2");
  SplitMix64 rng(81);
  Matrix a = random_matrix(m2, 2, 2, rng);
  Matrix b = random_matrix(m2, 2, 2, rng);
  Matrix c = random_matrix(m2, 2, 2, rng);
  for (const auto& e : conv_mult_lhs(a, b, c).coeffs) CHECK(e == m2->zero());
  for (const auto& e : conv_add_lhs(a, b).coeffs) CHECK(e == m2->zero());
}
