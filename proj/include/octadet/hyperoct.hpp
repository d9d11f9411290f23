#ifndef OCTADET_HYPEROCT_HPP
#define OCTADET_HYPEROCT_HPP

#include <cstdint>
#include <iosfwd>
#include <tuple>
#include <vector>

#include "octadet/matrix.hpp"

namespace octadet {

/// One element Q_S P_sigma of the hyperoctahedral group B_n.
struct GroupElement {
  Subset sign_set;
  Permutation perm;
};

/// The matrix Q_S P_sigma over the given ring.
Matrix group_matrix(const GroupElement& g, const RingPtr& ring);

/// (Q_S P_sigma)^{-1} = P_{sigma^{-1}} Q_S; no generic inversion.
Matrix group_matrix_inverse(const GroupElement& g, const RingPtr& ring);

/// |B_n| = 2^n n!.
Nat group_order(int n);

/// Term budget for group sums; default 10^7, raised by OCTADET_MAX_TERMS.
Nat max_group_terms();

std::vector<Matrix> enumerate_signs(int n, const RingPtr& ring);  // n <= 12
std::vector<Matrix> enumerate_perms(int n, const RingPtr& ring);  // n <= 8

/// All 2^n n! elements, lexicographic in (sign_set, perm image).
std::vector<GroupElement> enumerate_group(int n);

/// sum_{Q in Q_n} [Q]_{S,T} [Q]_{U,V}, computed by direct enumeration.
Element cancel_sum_q(int n, const Subset& s, const Subset& t, const Subset& u,
                     const Subset& v, const RingPtr& ring);

/// sum_{P in P_n} [P]_{S,T} [P^{-1}]_{U,S}.
Element cancel_sum_p(int n, const Subset& s, const Subset& t, const Subset& u,
                     const RingPtr& ring);

/// The four-subset permutation sums sum_P [P]_{S,T} [P^{-1}]_{U,V}
/// over the integers, tabulated for all quadruples of k-subsets.
struct FourSetTable {
  int n = 0, k = 0;
  // rows in lexicographic (S, T, U, V) order
  std::vector<std::tuple<Subset, Subset, Subset, Subset, Int>> entries;
};

FourSetTable four_set_table(int n, int k);  // guard n <= 6
void write_csv(const FourSetTable& table, std::ostream& os);

/// sum over B_n of [B (QP) A (QP)^{-1} C]_{X,Y}.
Element symm_group_sum(const Matrix& a, const Matrix& b, const Matrix& c,
                       const Subset& x, const Subset& y);

/// Batched variant: one pass over the group, many (X, Y) selectors.
std::vector<Element> symm_group_sums(
    const Matrix& a, const Matrix& b, const Matrix& c,
    const std::vector<std::pair<Subset, Subset>>& selectors);

struct AsymmSelector {
  Subset x, y;  // |x| = |y| = k
  Subset w, z;  // |w| = |z| = j
};

/// The quadruple sum over (Q, P) in B_n and (Q', P') in B_m of
/// [B (QP) A (Q'P')^{-1} C]_{X,Y} [F (Q'P') E (QP)^{-1} G]_{W,Z}.
Element asymm_group_sum(const Matrix& a, const Matrix& b, const Matrix& c,
                        const Matrix& e, const Matrix& f, const Matrix& g,
                        const AsymmSelector& sel);

std::vector<Element> asymm_group_sums(const Matrix& a, const Matrix& b,
                                      const Matrix& c, const Matrix& e,
                                      const Matrix& f, const Matrix& g,
                                      const std::vector<AsymmSelector>& sels);

/// Group-sum side of the multiplicative convolution:
/// coefficients of sum over B_m of det(xI + B (QP) A (QP)^{-1} C).
CharPolyCoeffs conv_mult_lhs(const Matrix& a, const Matrix& b, const Matrix& c);

/// Group-sum side of the additive convolution:
/// coefficients of sum over B_n of det(xI + QPAP^{-1}Q + B).
CharPolyCoeffs conv_add_lhs(const Matrix& a, const Matrix& b);

/// Group-sum side of the rectangular convolution: coefficients of the sum
/// over (Q,P) in B_n, (Q',P') in B_m of
/// det(xI + (QP A (Q'P')^{-1} + B)((Q'P') C (QP)^{-1} + D)).
CharPolyCoeffs conv_rect_lhs(const Matrix& a, const Matrix& b, const Matrix& c,
                             const Matrix& d);

}  // namespace octadet

#endif
