#include "octadet/matrix.hpp"

#include <algorithm>

namespace octadet {

namespace {

void require_same_ring(const Matrix& a, const Matrix& b) {
  if (!a.ring()->same(*b.ring()))
    throw domain_error("matrix ring mismatch: " + a.ring()->spec() + " vs " +
                       b.ring()->spec());
}

void require_subset_fits(const Subset& s, int bound, const char* what) {
  if (!s.members.empty() && s.members.back() > bound)
    throw domain_error(std::string(what) + ": subset member exceeds dimension");
}

}  // namespace

Matrix::Matrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  if (rows_ < 0 || cols_ < 0) throw domain_error("matrix: negative shape");
  entries_.assign(size_t(rows_) * cols_, ring_->zero());
}

Matrix Matrix::identity(const RingPtr& ring, int n) {
  Matrix m(ring, n, n);
  Element one = ring->one();
  for (int i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  require_same_ring(a, b);
  return a.entries_ == b.entries_;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.cols() != b.rows())
    throw domain_error("mat_mul: inner dimensions disagree");
  Matrix out(a.ring(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Element acc = a.ring()->zero();
      for (int k = 0; k < a.cols(); ++k)
        acc = add(acc, mul(a.at(i, k), b.at(k, j)));
      out.at(i, j) = std::move(acc);
    }
  return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw domain_error("mat_add: shape mismatch");
  Matrix out(a.ring(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.at(i, j) = add(a.at(i, j), b.at(i, j));
  return out;
}

Matrix mat_neg(const Matrix& a) {
  Matrix out(a.ring(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = neg(a.at(i, j));
  return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  return mat_add(a, mat_neg(b));
}

Matrix permutation_matrix(const Permutation& sigma, const RingPtr& ring) {
  int n = sigma.n();
  Matrix m(ring, n, n);
  Element one = ring->one();
  for (int i = 1; i <= n; ++i) m.at(i - 1, sigma.apply(i) - 1) = one;
  return m;
}

Matrix sign_matrix(const Subset& s, const RingPtr& ring) {
  int n = s.ambient;
  Matrix m(ring, n, n);
  Element one = ring->one();
  Element minus = neg(one);
  for (int i = 1; i <= n; ++i)
    m.at(i - 1, i - 1) = s.contains(i) ? minus : one;
  return m;
}

Element det_leibniz(const Matrix& a) {
  if (!a.is_square()) throw domain_error("det_leibniz: non-square matrix");
  int n = a.rows();
  if (n == 0) return a.ring()->one();
  if (n > 8)
    throw guard_error("det_leibniz: n = " + std::to_string(n) +
                      " refused (limit 8)");
  Element acc = a.ring()->zero();
  for (const auto& sigma : all_permutations(n)) {
    Element term = sign_of_parity(sigma.parity, *a.ring());
    for (int i = 1; i <= n; ++i)
      term = mul(term, a.at(i - 1, sigma.apply(i) - 1));
    acc = add(acc, term);
  }
  return acc;
}

std::vector<Element> charpoly_ximinus(const Matrix& a) {
  if (!a.is_square()) throw domain_error("charpoly: non-square matrix");
  const RingPtr& ring = a.ring();
  int n = a.rows();
  std::vector<Element> c{ring->one()};
  for (int i = 1; i <= n; ++i) {
    // Toeplitz column for the leading i x i block: t_0 = 1, t_1 = -a_ii,
    // t_j = -(R A^{j-2} S) with R the last row and S the last column.
    std::vector<Element> t;
    t.reserve(i + 1);
    t.push_back(ring->one());
    t.push_back(neg(a.at(i - 1, i - 1)));
    if (i >= 2) {
      std::vector<Element> v(i - 1);
      for (int r = 0; r < i - 1; ++r) v[r] = a.at(r, i - 1);
      for (int j = 2; j <= i; ++j) {
        Element dot = ring->zero();
        for (int r = 0; r < i - 1; ++r)
          dot = add(dot, mul(a.at(i - 1, r), v[r]));
        t.push_back(neg(dot));
        if (j < i) {
          std::vector<Element> w(i - 1);
          for (int r = 0; r < i - 1; ++r) {
            Element acc = ring->zero();
            for (int k = 0; k < i - 1; ++k)
              acc = add(acc, mul(a.at(r, k), v[k]));
            w[r] = std::move(acc);
          }
          v = std::move(w);
        }
      }
    }
    std::vector<Element> next(i + 1, ring->zero());
    for (int j = 0; j <= i; ++j)
      for (int l = 0; l <= std::min<int>(j, int(c.size()) - 1); ++l)
        next[j] = add(next[j], mul(t[j - l], c[l]));
    c = std::move(next);
  }
  return c;
}

Element det_berkowitz(const Matrix& a) {
  if (!a.is_square()) throw domain_error("det_berkowitz: non-square matrix");
  int n = a.rows();
  if (n == 0) return a.ring()->one();
  // det(xI - A) has constant term (-1)^n det(A).
  Element cn = charpoly_ximinus(a).back();
  return n % 2 == 0 ? cn : neg(cn);
}

Matrix submatrix(const Matrix& a, const Subset& rows, const Subset& cols) {
  require_subset_fits(rows, a.rows(), "submatrix rows");
  require_subset_fits(cols, a.cols(), "submatrix cols");
  Matrix out(a.ring(), rows.size(), cols.size());
  for (int i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols.size(); ++j)
      out.at(i, j) = a.at(rows.members[i] - 1, cols.members[j] - 1);
  return out;
}

Element minor(const Matrix& a, const Subset& s, const Subset& t) {
  if (s.size() != t.size())
    throw domain_error("minor: |S| != |T|");
  if (s.size() == 0) return a.ring()->one();
  Matrix sub = submatrix(a, s, t);
  // Leibniz is cheaper at tiny sizes; Berkowitz above. Results agree.
  return s.size() <= 4 ? det_leibniz(sub) : det_berkowitz(sub);
}

Element principal_minor_sum(const Matrix& a, int k) {
  if (!a.is_square())
    throw domain_error("principal_minor_sum: non-square matrix");
  if (k < 0) throw domain_error("principal_minor_sum: negative k");
  if (k == 0) return a.ring()->one();
  if (k > a.rows()) return a.ring()->zero();
  Element acc = a.ring()->zero();
  for (const auto& s : subsets_of_size(a.rows(), k))
    acc = add(acc, minor(a, s, s));
  return acc;
}

CharPolyCoeffs charpoly(const Matrix& a) {
  // det(xI + A) = det(xI - (-A)); Berkowitz runs on -A.
  return CharPolyCoeffs{a.ring(), charpoly_ximinus(mat_neg(a))};
}

Element det_add_expansion(const Matrix& a, const Matrix& b) {
  require_same_ring(a, b);
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols())
    throw domain_error("det_add_expansion: need equal square shapes");
  int n = a.rows();
  if (n > 6)
    throw guard_error("det_add_expansion: n = " + std::to_string(n) +
                      " refused (limit 6)");
  Element acc = a.ring()->zero();
  for (int k = 0; k <= n; ++k) {
    auto subs = subsets_of_size(n, k);
    for (const auto& s : subs)
      for (const auto& t : subs) {
        Element term = sign_of_parity(l1_parity(sym_diff(s, t)), *a.ring());
        term = mul(term, minor(a, s, t));
        term = mul(term, minor(b, complement(s), complement(t)));
        acc = add(acc, term);
      }
  }
  return acc;
}

Element cauchy_binet(const Matrix& a, const Matrix& b, const Subset& s,
                     const Subset& t) {
  require_same_ring(a, b);
  if (a.cols() != b.rows())
    throw domain_error("cauchy_binet: inner dimensions disagree");
  if (s.size() != t.size())
    throw domain_error("cauchy_binet: |S| != |T|");
  require_subset_fits(s, a.rows(), "cauchy_binet S");
  require_subset_fits(t, b.cols(), "cauchy_binet T");
  Element acc = a.ring()->zero();
  for (const auto& u : subsets_of_size(a.cols(), s.size()))
    acc = add(acc, mul(minor(a, s, u), minor(b, u, t)));
  return acc;
}

}  // namespace octadet
