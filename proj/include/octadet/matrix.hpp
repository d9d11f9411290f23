#ifndef OCTADET_MATRIX_HPP
#define OCTADET_MATRIX_HPP

#include <vector>

#include "octadet/combi.hpp"
#include "octadet/ring.hpp"

namespace octadet {

/// Dense rectangular matrix over a ring. Immutable by convention:
/// operations return fresh values. Indexing is 0-based internally;
/// Subset row/column selectors stay 1-based.
class Matrix {
 public:
  Matrix(RingPtr ring, int rows, int cols);

  static Matrix identity(const RingPtr& ring, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const RingPtr& ring() const { return ring_; }

  Element& at(int r, int c) { return entries_[size_t(r) * cols_ + c]; }
  const Element& at(int r, int c) const {
    return entries_[size_t(r) * cols_ + c];
  }

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  RingPtr ring_;
  int rows_, cols_;
  std::vector<Element> entries_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_neg(const Matrix& a);
Matrix mat_sub(const Matrix& a, const Matrix& b);

/// P_sigma(i, j) = one iff sigma(i) = j.
Matrix permutation_matrix(const Permutation& sigma, const RingPtr& ring);

/// Diagonal with neg(one) at positions in S, one elsewhere.
Matrix sign_matrix(const Subset& s, const RingPtr& ring);

/// Sum over S_n of sign(sigma) * prod_i A(i, sigma(i)); guard n <= 8.
Element det_leibniz(const Matrix& a);

/// Samuelson-Berkowitz division-free determinant, O(n^4) ring ops.
Element det_berkowitz(const Matrix& a);

/// Coefficients c_0..c_n of det(xI - A), c_0 = one (Berkowitz core).
std::vector<Element> charpoly_ximinus(const Matrix& a);

Matrix submatrix(const Matrix& a, const Subset& rows, const Subset& cols);

/// [A]_{S,T}; |S| = |T| required, the empty minor is one.
Element minor(const Matrix& a, const Subset& s, const Subset& t);

/// [A]^{(k)}: sum of principal k-minors; one for k = 0, zero for k > n.
Element principal_minor_sum(const Matrix& a, int k);

struct CharPolyCoeffs {
  RingPtr ring;
  std::vector<Element> coeffs;  // c_0..c_n, det(xI + A) = sum x^{n-k} c_k

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const CharPolyCoeffs& a, const CharPolyCoeffs& b) {
    return a.ring->same(*b.ring) && a.coeffs == b.coeffs;
  }
};

/// Coefficients of det(xI + A) (note the plus-sign convention),
/// computed division-free via Berkowitz on -A.
CharPolyCoeffs charpoly(const Matrix& a);

/// Right side of the additive expansion
///   det(A+B) = sum_{S,T} (-1)^{||S+T||_1} [A]_{S,T} [B]_{S~,T~};
/// guard n <= 6.
Element det_add_expansion(const Matrix& a, const Matrix& b);

/// sum_U [A]_{S,U} [B]_{U,T}, the Cauchy-Binet side of [AB]_{S,T}.
Element cauchy_binet(const Matrix& a, const Matrix& b, const Subset& s,
                     const Subset& t);

}  // namespace octadet

#endif
