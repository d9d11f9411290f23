#include "octadet/ring.hpp"

#include <utility>

namespace octadet {

namespace {

void require_same_ring(const Element& a, const Element& b) {
  if (!a.valid() || !b.valid())
    throw domain_error("ring arithmetic on an empty element");
  if (&a.ring() == &b.ring()) return;
  if (!a.ring().same(b.ring()))
    throw domain_error("ring mismatch: " + a.ring().spec() + " vs " +
                       b.ring().spec());
}

Int mod_reduce(const Int& v, const Int& m) {
  Int r = v % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

RingPtr Ring::integers() {
  static RingPtr inst(new Ring(Kind::Integers));
  return inst;
}

RingPtr Ring::integers_mod(Int modulus) {
  if (modulus < 2) throw domain_error("modulus must be >= 2");
  auto r = RingPtr(new Ring(Kind::IntegersMod));
  const_cast<Ring&>(*r).modulus_ = std::move(modulus);
  return r;
}

RingPtr Ring::poly(RingPtr inner) {
  if (!inner) throw domain_error("poly ring needs an inner ring");
  auto r = RingPtr(new Ring(Kind::Poly));
  const_cast<Ring&>(*r).inner_ = std::move(inner);
  return r;
}

RingPtr Ring::parse(std::string_view spec) {
  if (spec == "int") return integers();
  constexpr std::string_view kMod = "mod:";
  constexpr std::string_view kPoly = "poly:";
  if (spec.substr(0, kMod.size()) == kMod) {
    std::string_view digits = spec.substr(kMod.size());
    if (digits.empty())
      throw parse_error("ring spec: missing modulus after 'mod:'");
    for (char c : digits)
      if (c < '0' || c > '9')
        throw parse_error("ring spec: bad modulus token '" +
                          std::string(digits) + "'");
    Int m{std::string(digits)};
    if (m < 2)
      throw parse_error("ring spec: modulus must be >= 2, got '" +
                        std::string(digits) + "'");
    return integers_mod(m);
  }
  if (spec.substr(0, kPoly.size()) == kPoly)
    return poly(parse(spec.substr(kPoly.size())));
  throw parse_error("ring spec: unrecognized token '" + std::string(spec) +
                    "' (expected int | mod:<m> | poly:<spec>)");
}

const Int& Ring::modulus() const {
  if (kind_ != Kind::IntegersMod) throw domain_error("not a mod ring");
  return modulus_;
}

const RingPtr& Ring::inner() const {
  if (kind_ != Kind::Poly) throw domain_error("not a poly ring");
  return inner_;
}

bool Ring::is_boolean() const {
  switch (kind_) {
    case Kind::Integers: return false;
    case Kind::IntegersMod: return modulus_ == 2;
    case Kind::Poly: return inner_->is_boolean();
  }
  return false;
}

bool Ring::same(const Ring& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Integers: return true;
    case Kind::IntegersMod: return modulus_ == other.modulus_;
    case Kind::Poly: return inner_->same(*other.inner_);
  }
  return false;
}

std::string Ring::spec() const {
  switch (kind_) {
    case Kind::Integers: return "int";
    case Kind::IntegersMod: return "mod:" + modulus_.str();
    case Kind::Poly: return "poly:" + inner_->spec();
  }
  return {};
}

Element Ring::zero() const {
  Element e;
  e.ring_ = shared_from_this();
  if (kind_ == Kind::Poly)
    e.value_ = std::vector<Element>{};
  else
    e.value_ = Int(0);
  return e;
}

Element Ring::one() const { return from_int(1); }

Element Ring::from_int(long long v) const { return from_Int(Int(v)); }

Element Ring::from_Int(const Int& v) const {
  Element e;
  e.ring_ = shared_from_this();
  switch (kind_) {
    case Kind::Integers:
      e.value_ = v;
      break;
    case Kind::IntegersMod:
      e.value_ = mod_reduce(v, modulus_);
      break;
    case Kind::Poly: {
      Element c = inner_->from_Int(v);
      std::vector<Element> coeffs;
      if (!c.is_zero()) coeffs.push_back(std::move(c));
      e.value_ = std::move(coeffs);
      break;
    }
  }
  return e;
}

Element Ring::make_poly(std::vector<Element> coeffs) const {
  if (kind_ != Kind::Poly) throw domain_error("make_poly on a non-poly ring");
  for (const auto& c : coeffs)
    if (!c.valid() || !c.ring().same(*inner_))
      throw domain_error("make_poly: coefficient from the wrong ring");
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  Element e;
  e.ring_ = shared_from_this();
  e.value_ = std::move(coeffs);
  return e;
}

bool Element::is_zero() const {
  if (ring_->kind() == Ring::Kind::Poly)
    return std::get<std::vector<Element>>(value_).empty();
  return std::get<Int>(value_) == 0;
}

bool Element::is_one() const { return *this == ring_->one(); }

const Int& Element::as_int() const {
  if (ring_->kind() == Ring::Kind::Poly)
    throw domain_error("as_int on a polynomial element");
  return std::get<Int>(value_);
}

const std::vector<Element>& Element::as_poly() const {
  if (ring_->kind() != Ring::Kind::Poly)
    throw domain_error("as_poly on a scalar element");
  return std::get<std::vector<Element>>(value_);
}

bool operator==(const Element& a, const Element& b) {
  require_same_ring(a, b);
  return a.value_ == b.value_;
}

Element add(const Element& a, const Element& b) {
  require_same_ring(a, b);
  Element out;
  out.ring_ = a.ring_;
  switch (a.ring().kind()) {
    case Ring::Kind::Integers:
      out.value_ = std::get<Int>(a.value_) + std::get<Int>(b.value_);
      break;
    case Ring::Kind::IntegersMod:
      out.value_ = mod_reduce(std::get<Int>(a.value_) + std::get<Int>(b.value_),
                              a.ring().modulus());
      break;
    case Ring::Kind::Poly: {
      const auto& pa = std::get<std::vector<Element>>(a.value_);
      const auto& pb = std::get<std::vector<Element>>(b.value_);
      std::vector<Element> sum;
      size_t hi = std::max(pa.size(), pb.size());
      sum.reserve(hi);
      for (size_t i = 0; i < hi; ++i) {
        if (i < pa.size() && i < pb.size())
          sum.push_back(add(pa[i], pb[i]));
        else
          sum.push_back(i < pa.size() ? pa[i] : pb[i]);
      }
      while (!sum.empty() && sum.back().is_zero()) sum.pop_back();
      out.value_ = std::move(sum);
      break;
    }
  }
  return out;
}

Element sub(const Element& a, const Element& b) { return add(a, neg(b)); }

Element neg(const Element& a) {
  if (!a.valid()) throw domain_error("neg of an empty element");
  Element out;
  out.ring_ = a.ring_;
  switch (a.ring().kind()) {
    case Ring::Kind::Integers:
      out.value_ = -std::get<Int>(a.value_);
      break;
    case Ring::Kind::IntegersMod:
      out.value_ =
          mod_reduce(-std::get<Int>(a.value_), a.ring().modulus());
      break;
    case Ring::Kind::Poly: {
      std::vector<Element> coeffs;
      for (const auto& c : std::get<std::vector<Element>>(a.value_))
        coeffs.push_back(neg(c));
      out.value_ = std::move(coeffs);
      break;
    }
  }
  return out;
}

Element mul(const Element& a, const Element& b) {
  require_same_ring(a, b);
  Element out;
  out.ring_ = a.ring_;
  switch (a.ring().kind()) {
    case Ring::Kind::Integers:
      out.value_ = std::get<Int>(a.value_) * std::get<Int>(b.value_);
      break;
    case Ring::Kind::IntegersMod:
      out.value_ = mod_reduce(std::get<Int>(a.value_) * std::get<Int>(b.value_),
                              a.ring().modulus());
      break;
    case Ring::Kind::Poly: {
      const auto& pa = std::get<std::vector<Element>>(a.value_);
      const auto& pb = std::get<std::vector<Element>>(b.value_);
      std::vector<Element> prod;
      if (!pa.empty() && !pb.empty()) {
        const Ring& inner = *a.ring().inner();
        prod.assign(pa.size() + pb.size() - 1, inner.zero());
        for (size_t i = 0; i < pa.size(); ++i)
          for (size_t j = 0; j < pb.size(); ++j)
            prod[i + j] = add(prod[i + j], mul(pa[i], pb[j]));
        while (!prod.empty() && prod.back().is_zero()) prod.pop_back();
      }
      out.value_ = std::move(prod);
      break;
    }
  }
  return out;
}

Element nat_scale(const Nat& count, const Element& a) {
  if (count < 0) throw domain_error("nat_scale: negative count");
  Element acc = a.ring().zero();
  Element base = a;
  Nat c = count;
  while (c > 0) {
    if (boost::multiprecision::bit_test(c, 0)) acc = add(acc, base);
    c >>= 1;
    if (c > 0) base = add(base, base);
  }
  return acc;
}

Element ring_pow(const Element& a, const Nat& e) {
  if (e < 0) throw domain_error("ring_pow: negative exponent");
  Element acc = a.ring().one();
  Element base = a;
  Nat c = e;
  while (c > 0) {
    if (boost::multiprecision::bit_test(c, 0)) acc = mul(acc, base);
    c >>= 1;
    if (c > 0) base = mul(base, base);
  }
  return acc;
}

Element sign_of_parity(Parity p, const Ring& ring) {
  Element one = ring.one();
  return p == Parity::Even ? one : neg(one);
}

Nat factorial(unsigned n) {
  Nat f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

Nat binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Nat b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

Nat pow2(unsigned n) {
  Nat p = 1;
  p <<= n;
  return p;
}

}  // namespace octadet
