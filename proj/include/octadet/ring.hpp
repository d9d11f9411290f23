#ifndef OCTADET_RING_HPP
#define OCTADET_RING_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "octadet/errors.hpp"

namespace octadet {

using Int = boost::multiprecision::cpp_int;

// Natural-number constants (n, k!, binomials, ...) that act on ring elements
// by repeated addition only. Kept out of the ring on purpose.
using Nat = boost::multiprecision::cpp_int;

enum class Parity { Even, Odd };

inline Parity operator^(Parity a, Parity b) {
  return a == b ? Parity::Even : Parity::Odd;
}

class Ring;
class Element;
using RingPtr = std::shared_ptr<const Ring>;

/// A commutative ring with identity, described structurally:
/// the integers, the integers mod m (m >= 2), or univariate
/// polynomials over an inner ring. All arithmetic is exact and
/// division-free; no inverses are ever computed.
class Ring : public std::enable_shared_from_this<const Ring> {
 public:
  enum class Kind { Integers, IntegersMod, Poly };

  static RingPtr integers();
  static RingPtr integers_mod(Int modulus);
  static RingPtr poly(RingPtr inner);

  /// Parses the spec grammar `int | mod:<m> | poly:<spec>`, m >= 2.
  static RingPtr parse(std::string_view spec);

  Kind kind() const { return kind_; }
  const Int& modulus() const;
  const RingPtr& inner() const;

  /// A ring is boolean iff one + one = zero in it.
  bool is_boolean() const;
  bool same(const Ring& other) const;
  std::string spec() const;

  Element zero() const;
  Element one() const;
  Element from_int(long long v) const;
  Element from_Int(const Int& v) const;

  /// Builds a polynomial element from ascending inner coefficients
  /// (trailing zeros are stripped). Poly rings only.
  Element make_poly(std::vector<Element> coeffs) const;

 private:
  explicit Ring(Kind k) : kind_(k) {}
  Kind kind_;
  Int modulus_;
  RingPtr inner_;
};

/// An immutable value in some ring. Payloads are normalized so
/// equality is structural: mod residues live in [0, m), polynomials
/// carry no trailing zero coefficients.
class Element {
 public:
  Element() = default;  // empty; only valid as a placeholder

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  bool valid() const { return ring_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  const Int& as_int() const;  // Integers / IntegersMod payload
  const std::vector<Element>& as_poly() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  friend class Ring;
  friend Element add(const Element&, const Element&);
  friend Element mul(const Element&, const Element&);
  friend Element neg(const Element&);

  RingPtr ring_;
  std::variant<Int, std::vector<Element>> value_;
};

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element neg(const Element& a);

/// c-fold repeated addition of a, via binary doubling (O(log c) ring adds).
Element nat_scale(const Nat& count, const Element& a);

/// e-fold ring product; a^0 = one.
Element ring_pow(const Element& a, const Nat& e);

/// even -> one, odd -> neg(one). In a boolean ring both are one.
Element sign_of_parity(Parity p, const Ring& ring);

Nat factorial(unsigned n);
Nat binomial(unsigned n, unsigned k);
Nat pow2(unsigned n);

}  // namespace octadet

#endif
