#include "octadet/freeconv.hpp"

#include <stdexcept>

namespace octadet {

Nat factorial_constant(int n, int k, int i) {
  if (i < 0 || i > k || k > n)
    throw domain_error("factorial_constant: need 0 <= i <= k <= n");
  Nat num = factorial(unsigned(n - k + i)) * factorial(unsigned(n - i));
  Nat den = factorial(unsigned(n - k));
  Nat q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw std::logic_error("factorial_constant: inexact division");
  return q;
}

Nat ConvConstants::mult_constant(int m, int k) const {
  return factorial(unsigned(k)) * factorial(unsigned(m - k));
}

Nat ConvConstants::add_constant(int n, int k, int i) const {
  return factorial_constant(n, k, i);
}

Nat ConvConstants::rect_constant(int n, int k, int i) const {
  return factorial_constant(n, k, i);
}

const ConvConstants& exact_constants() {
  static ConvConstants inst;
  return inst;
}

ConvCoefficients conv_mult_rhs(const CharPolyCoeffs& p, const CharPolyCoeffs& q,
                               const ConvConstants& consts) {
  if (!p.ring->same(*q.ring))
    throw domain_error("conv_mult_rhs: ring mismatch");
  int n = p.degree();
  int m = q.degree();
  Nat two_m = pow2(unsigned(m));
  std::vector<Element> r;
  r.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    if (k > m) {
      r.push_back(p.ring->zero());
      continue;
    }
    Element pq = mul(p.coeffs[k], q.coeffs[k]);
    r.push_back(nat_scale(two_m * consts.mult_constant(m, k), pq));
  }
  return ConvCoefficients{
      CharPolyCoeffs{p.ring, std::move(r)},
      "mult(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")"};
}

ConvCoefficients conv_add_rhs(const CharPolyCoeffs& p, const CharPolyCoeffs& q,
                              const ConvConstants& consts) {
  if (!p.ring->same(*q.ring))
    throw domain_error("conv_add_rhs: ring mismatch");
  if (p.degree() != q.degree())
    throw domain_error("conv_add_rhs: degree mismatch");
  int n = p.degree();
  Nat two_n = pow2(unsigned(n));
  std::vector<Element> r;
  r.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    Element acc = p.ring->zero();
    for (int i = 0; i <= k; ++i)
      acc = add(acc, nat_scale(consts.add_constant(n, k, i),
                               mul(p.coeffs[i], q.coeffs[k - i])));
    r.push_back(nat_scale(two_n, acc));
  }
  return ConvCoefficients{CharPolyCoeffs{p.ring, std::move(r)},
                          "add(n=" + std::to_string(n) + ")"};
}

ConvCoefficients conv_rect_rhs(const std::vector<Element>& pm,
                               const std::vector<Element>& qm, int n, int m,
                               const ConvConstants& consts) {
  if (n > m) throw domain_error("conv_rect_rhs: need n <= m");
  if (int(pm.size()) != n + 1 || int(qm.size()) != n + 1)
    throw domain_error("conv_rect_rhs: need minor-sum vectors of length n+1");
  const RingPtr& ring = pm.front().ring_ptr();
  for (const auto& e : qm)
    if (!e.ring().same(*ring))
      throw domain_error("conv_rect_rhs: ring mismatch");
  Nat two_nm = pow2(unsigned(n + m));
  std::vector<Element> r;
  r.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    Element acc = ring->zero();
    for (int i = 0; i <= k; ++i) {
      Nat c = consts.rect_constant(m, k, i) * consts.rect_constant(n, k, i);
      acc = add(acc, nat_scale(c, mul(pm[i], qm[k - i])));
    }
    r.push_back(nat_scale(two_nm, acc));
  }
  return ConvCoefficients{
      CharPolyCoeffs{ring, std::move(r)},
      "rect(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")"};
}

std::vector<Element> untwist_alternating(const CharPolyCoeffs& p) {
  std::vector<Element> out;
  out.reserve(p.coeffs.size());
  for (size_t i = 0; i < p.coeffs.size(); ++i)
    out.push_back(i % 2 == 0 ? p.coeffs[i] : neg(p.coeffs[i]));
  return out;
}

std::vector<Element> minor_sum_vector(const Matrix& m, int k_max) {
  std::vector<Element> out;
  out.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k) out.push_back(principal_minor_sum(m, k));
  return out;
}

}  // namespace octadet
