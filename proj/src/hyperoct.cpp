#include "octadet/hyperoct.hpp"

#include <cstdlib>
#include <ostream>

namespace octadet {

namespace {

void check_group_guard(const Nat& terms, const std::string& what) {
  Nat limit = max_group_terms();
  if (terms > limit)
    throw guard_error(what + " needs " + terms.str() +
                      " terms, over the limit of " + limit.str() +
                      " (OCTADET_MAX_TERMS raises it)");
}

std::string subset_str(const Subset& s) {
  std::string out;
  for (size_t i = 0; i < s.members.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(s.members[i]);
  }
  return out;
}

void accumulate_coeffs(std::vector<Element>& acc,
                       const std::vector<Element>& term) {
  if (acc.empty()) {
    acc = term;
    return;
  }
  for (size_t i = 0; i < acc.size(); ++i) acc[i] = add(acc[i], term[i]);
}

}  // namespace

Matrix group_matrix(const GroupElement& g, const RingPtr& ring) {
  return mat_mul(sign_matrix(g.sign_set, ring),
                 permutation_matrix(g.perm, ring));
}

Matrix group_matrix_inverse(const GroupElement& g, const RingPtr& ring) {
  return mat_mul(permutation_matrix(g.perm.inverse(), ring),
                 sign_matrix(g.sign_set, ring));
}

Nat group_order(int n) { return pow2(unsigned(n)) * factorial(unsigned(n)); }

Nat max_group_terms() {
  if (const char* env = std::getenv("OCTADET_MAX_TERMS")) {
    try {
      Nat v(env);
      if (v > 0) return v;
    } catch (...) {
      // fall through to the default on a malformed value
    }
  }
  return Nat(10000000);
}

std::vector<Matrix> enumerate_signs(int n, const RingPtr& ring) {
  if (n < 1 || n > 12)
    throw guard_error("enumerate_signs: n = " + std::to_string(n) +
                      " refused (2^n sign matrices, limit n <= 12)");
  std::vector<Matrix> out;
  out.reserve(size_t(1) << n);
  for (const auto& s : all_subsets(n)) out.push_back(sign_matrix(s, ring));
  return out;
}

std::vector<Matrix> enumerate_perms(int n, const RingPtr& ring) {
  std::vector<Matrix> out;
  for (const auto& p : all_permutations(n))
    out.push_back(permutation_matrix(p, ring));
  return out;
}

std::vector<GroupElement> enumerate_group(int n) {
  check_group_guard(group_order(n),
                    "enumerate_group(n=" + std::to_string(n) + ")");
  auto signs = all_subsets(n);
  auto perms = all_permutations(n);
  std::vector<GroupElement> out;
  out.reserve(signs.size() * perms.size());
  for (const auto& s : signs)
    for (const auto& p : perms) out.push_back(GroupElement{s, p});
  return out;
}

Element cancel_sum_q(int n, const Subset& s, const Subset& t, const Subset& u,
                     const Subset& v, const RingPtr& ring) {
  if (s.size() != t.size() || u.size() != v.size())
    throw domain_error("cancel_sum_q: need |S| = |T| and |U| = |V|");
  Element acc = ring->zero();
  for (const auto& x : all_subsets(n)) {
    Matrix q = sign_matrix(x, ring);
    acc = add(acc, mul(minor(q, s, t), minor(q, u, v)));
  }
  return acc;
}

Element cancel_sum_p(int n, const Subset& s, const Subset& t, const Subset& u,
                     const RingPtr& ring) {
  if (s.size() != t.size() || s.size() != u.size())
    throw domain_error("cancel_sum_p: need |S| = |T| = |U|");
  Element acc = ring->zero();
  for (const auto& sigma : all_permutations(n)) {
    Matrix p = permutation_matrix(sigma, ring);
    Matrix pinv = permutation_matrix(sigma.inverse(), ring);
    acc = add(acc, mul(minor(p, s, t), minor(pinv, u, s)));
  }
  return acc;
}

FourSetTable four_set_table(int n, int k) {
  if (n < 1 || n > 6)
    throw guard_error("four_set_table: n = " + std::to_string(n) +
                      " refused (limit 6)");
  if (k < 0 || k > n) throw domain_error("four_set_table: need 0 <= k <= n");
  RingPtr ring = Ring::integers();
  auto subs = subsets_of_size(n, k);
  auto perms = all_permutations(n);
  std::vector<std::pair<Matrix, Matrix>> mats;
  mats.reserve(perms.size());
  for (const auto& sigma : perms)
    mats.emplace_back(permutation_matrix(sigma, ring),
                      permutation_matrix(sigma.inverse(), ring));
  FourSetTable table;
  table.n = n;
  table.k = k;
  for (const auto& s : subs)
    for (const auto& t : subs)
      for (const auto& u : subs)
        for (const auto& v : subs) {
          Element acc = ring->zero();
          for (const auto& [p, pinv] : mats)
            acc = add(acc, mul(minor(p, s, t), minor(pinv, u, v)));
          table.entries.emplace_back(s, t, u, v, acc.as_int());
        }
  return table;
}

void write_csv(const FourSetTable& table, std::ostream& os) {
  os << "n,k,S,T,U,V,value\n";
  for (const auto& [s, t, u, v, value] : table.entries)
    os << table.n << ',' << table.k << ',' << subset_str(s) << ','
       << subset_str(t) << ',' << subset_str(u) << ',' << subset_str(v) << ','
       << value << '\n';
}

std::vector<Element> symm_group_sums(
    const Matrix& a, const Matrix& b, const Matrix& c,
    const std::vector<std::pair<Subset, Subset>>& selectors) {
  if (!a.is_square() || b.cols() != a.rows() || c.rows() != a.rows())
    throw domain_error("symm_group_sum: need A n x n, B m x n, C n x r");
  int n = a.rows();
  const RingPtr& ring = a.ring();
  check_group_guard(group_order(n), "symm_group_sum(n=" + std::to_string(n) + ")");
  for (const auto& [x, y] : selectors)
    if (x.size() != y.size())
      throw domain_error("symm_group_sum: |X| != |Y|");
  std::vector<Element> acc(selectors.size(), ring->zero());
  for (const auto& g : enumerate_group(n)) {
    Matrix conj = group_matrix(g, ring);
    Matrix conj_inv = group_matrix_inverse(g, ring);
    Matrix m = mat_mul(mat_mul(b, conj), mat_mul(a, mat_mul(conj_inv, c)));
    for (size_t i = 0; i < selectors.size(); ++i)
      acc[i] = add(acc[i], minor(m, selectors[i].first, selectors[i].second));
  }
  return acc;
}

Element symm_group_sum(const Matrix& a, const Matrix& b, const Matrix& c,
                       const Subset& x, const Subset& y) {
  return symm_group_sums(a, b, c, {{x, y}}).front();
}

std::vector<Element> asymm_group_sums(const Matrix& a, const Matrix& b,
                                      const Matrix& c, const Matrix& e,
                                      const Matrix& f, const Matrix& g,
                                      const std::vector<AsymmSelector>& sels) {
  int n = a.rows(), m = a.cols();
  if (b.cols() != n || c.rows() != m || e.rows() != m || e.cols() != n ||
      f.cols() != m || g.rows() != n)
    throw domain_error(
        "asymm_group_sum: need A n x m, B p1 x n, C m x r1, E m x n, "
        "F p2 x m, G n x r2");
  const RingPtr& ring = a.ring();
  check_group_guard(group_order(n) * group_order(m),
                    "asymm_group_sum(n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ")");
  for (const auto& sel : sels)
    if (sel.x.size() != sel.y.size() || sel.w.size() != sel.z.size())
      throw domain_error("asymm_group_sum: need |X| = |Y| and |W| = |Z|");
  std::vector<Element> acc(sels.size(), ring->zero());
  auto gn = enumerate_group(n);
  auto gm = enumerate_group(m);
  for (const auto& gi : gn) {
    Matrix qp = group_matrix(gi, ring);
    Matrix qp_inv = group_matrix_inverse(gi, ring);
    Matrix b_qp = mat_mul(b, qp);        // p1 x n
    Matrix qp_inv_g = mat_mul(qp_inv, g);  // n x r2
    for (const auto& gj : gm) {
      Matrix qp2 = group_matrix(gj, ring);
      Matrix qp2_inv = group_matrix_inverse(gj, ring);
      Matrix m1 = mat_mul(b_qp, mat_mul(a, mat_mul(qp2_inv, c)));
      Matrix m2 = mat_mul(mat_mul(f, qp2), mat_mul(e, qp_inv_g));
      for (size_t i = 0; i < sels.size(); ++i) {
        Element term = mul(minor(m1, sels[i].x, sels[i].y),
                           minor(m2, sels[i].w, sels[i].z));
        acc[i] = add(acc[i], term);
      }
    }
  }
  return acc;
}

Element asymm_group_sum(const Matrix& a, const Matrix& b, const Matrix& c,
                        const Matrix& e, const Matrix& f, const Matrix& g,
                        const AsymmSelector& sel) {
  return asymm_group_sums(a, b, c, e, f, g, {sel}).front();
}

CharPolyCoeffs conv_mult_lhs(const Matrix& a, const Matrix& b,
                             const Matrix& c) {
  // The summation group is m-dimensional: A is m x m and gets conjugated.
  int m = a.rows();
  if (!a.is_square() || b.cols() != m || c.rows() != m)
    throw domain_error("conv_mult_lhs: need A m x m, B n x m, C m x n");
  if (b.rows() != c.cols())
    throw domain_error("conv_mult_lhs: need B n x m and C m x n");
  const RingPtr& ring = a.ring();
  check_group_guard(group_order(m), "conv_mult_lhs(m=" + std::to_string(m) + ")");
  std::vector<Element> acc;
  for (const auto& g : enumerate_group(m)) {
    Matrix conj = group_matrix(g, ring);
    Matrix conj_inv = group_matrix_inverse(g, ring);
    Matrix prod = mat_mul(mat_mul(b, conj), mat_mul(a, mat_mul(conj_inv, c)));
    accumulate_coeffs(acc, charpoly(prod).coeffs);
  }
  return CharPolyCoeffs{ring, std::move(acc)};
}

CharPolyCoeffs conv_add_lhs(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw domain_error("conv_add_lhs: need equal square shapes");
  int n = a.rows();
  const RingPtr& ring = a.ring();
  check_group_guard(group_order(n), "conv_add_lhs(n=" + std::to_string(n) + ")");
  std::vector<Element> acc;
  for (const auto& g : enumerate_group(n)) {
    Matrix conj = group_matrix(g, ring);
    Matrix conj_inv = group_matrix_inverse(g, ring);
    Matrix summand = mat_add(mat_mul(conj, mat_mul(a, conj_inv)), b);
    accumulate_coeffs(acc, charpoly(summand).coeffs);
  }
  return CharPolyCoeffs{ring, std::move(acc)};
}

CharPolyCoeffs conv_rect_lhs(const Matrix& a, const Matrix& b, const Matrix& c,
                             const Matrix& d) {
  int n = a.rows(), m = a.cols();
  if (n > m) throw domain_error("conv_rect_lhs: need n <= m");
  if (b.rows() != n || b.cols() != m || c.rows() != m || c.cols() != n ||
      d.rows() != m || d.cols() != n)
    throw domain_error("conv_rect_lhs: need A, B n x m and C, D m x n");
  const RingPtr& ring = a.ring();
  check_group_guard(group_order(n) * group_order(m),
                    "conv_rect_lhs(n=" + std::to_string(n) +
                        ", m=" + std::to_string(m) + ")");
  std::vector<Element> acc;
  for (const auto& gi : enumerate_group(n)) {
    Matrix qp = group_matrix(gi, ring);
    Matrix qp_inv = group_matrix_inverse(gi, ring);
    for (const auto& gj : enumerate_group(m)) {
      Matrix qp2 = group_matrix(gj, ring);
      Matrix qp2_inv = group_matrix_inverse(gj, ring);
      Matrix left = mat_add(mat_mul(qp, mat_mul(a, qp2_inv)), b);
      Matrix right = mat_add(mat_mul(qp2, mat_mul(c, qp_inv)), d);
      accumulate_coeffs(acc, charpoly(mat_mul(left, right)).coeffs);
    }
  }
  return CharPolyCoeffs{ring, std::move(acc)};
}

}  // namespace octadet
