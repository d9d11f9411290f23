#ifndef OCTADET_FREECONV_HPP
#define OCTADET_FREECONV_HPP

#include <string>

#include "octadet/matrix.hpp"

namespace octadet {

/// c_{n,k,i} = (n-k+i)! (n-i)! / (n-k)!; the division is exact in N
/// and is verified (an inexact quotient aborts via logic_error).
Nat factorial_constant(int n, int k, int i);

/// The natural-number constants of the closed-form convolutions,
/// overridable so the verification harness can test mutations.
struct ConvConstants {
  virtual ~ConvConstants() = default;
  /// k!(m-k)! of the multiplicative convolution.
  virtual Nat mult_constant(int m, int k) const;
  /// (n-i)!(n-k+i)!/(n-k)! of the additive convolution.
  virtual Nat add_constant(int n, int k, int i) const;
  /// c_{n,k,i} of the rectangular convolution.
  virtual Nat rect_constant(int n, int k, int i) const;
};

const ConvConstants& exact_constants();

/// Closed-form coefficient vector with a note on which convolution
/// and which dimensions produced it.
struct ConvCoefficients {
  CharPolyCoeffs poly;
  std::string provenance;
};

/// r_k = 2^m k!(m-k)! p_k q_k (zero for k > m), where p = charpoly(BC)
/// of degree n and q = charpoly(A) of degree m.
ConvCoefficients conv_mult_rhs(const CharPolyCoeffs& p, const CharPolyCoeffs& q,
                               const ConvConstants& consts = exact_constants());

/// r_k = 2^n sum_i (n-i)!(n-k+i)!/(n-k)! p_i q_{k-i}; p, q of equal degree n.
ConvCoefficients conv_add_rhs(const CharPolyCoeffs& p, const CharPolyCoeffs& q,
                              const ConvConstants& consts = exact_constants());

/// r_k = 2^{n+m} sum_i c_{m,k,i} c_{n,k,i} pm_i qm_{k-i}, where pm and qm
/// are the untwisted principal-minor-sum vectors [AC]^{(i)} and [BD]^{(i)}
/// (i = 0..n each).
ConvCoefficients conv_rect_rhs(const std::vector<Element>& pm,
                               const std::vector<Element>& qm, int n, int m,
                               const ConvConstants& consts = exact_constants());

/// Adapter from the alternating-sign coefficient reading
/// (coefficient i carrying a (-1)^i twist) to plain minor sums.
std::vector<Element> untwist_alternating(const CharPolyCoeffs& p);

/// Principal-minor-sum vector [M]^{(0)}..[M]^{(k_max)} of a square matrix.
std::vector<Element> minor_sum_vector(const Matrix& m, int k_max);

}  // namespace octadet

#endif
