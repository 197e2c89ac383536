#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "certalg/field.hpp"
#include "certalg/monomial.hpp"

namespace certalg {

// Ring descriptor: coefficient field, number of variables x0..x{n-1}, and the
// monomial order. Small enough to live by value inside every polynomial;
// equality is structural so independently built rings interoperate.
template <class K>
struct Ring {
  K field;
  int nvars = 0;
  MonomialOrder order;

  Ring() = default;
  Ring(K f, int n, MonomialOrder ord = {}) : field(std::move(f)), nvars(n), order(ord) {
    if (n < 0 || n > Monomial::kMaxVars)
      throw ArityMismatch("ring supports at most " + std::to_string(Monomial::kMaxVars) + " variables");
  }

  bool operator==(const Ring& o) const {
    return field == o.field && nvars == o.nvars && order == o.order;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

  int cmp(const Monomial& a, const Monomial& b) const { return order.compare(a, b, nvars); }
};

// Sparse multivariate polynomial: strictly descending terms, no zero
// coefficients, canonical form unique.
template <class K>
class Poly {
 public:
  using Elem = typename K::Elem;
  using Term = std::pair<Monomial, Elem>;

  Poly() = default;
  explicit Poly(Ring<K> ring) : ring_(std::move(ring)) {}

  static Poly zero(const Ring<K>& ring) { return Poly(ring); }

  static Poly constant(const Ring<K>& ring, Elem c) {
    Poly p(ring);
    if (!ring.field.is_zero(c)) p.terms_.emplace_back(Monomial::one(), std::move(c));
    return p;
  }

  static Poly from_int(const Ring<K>& ring, long long v) {
    return constant(ring, ring.field.from_int(v));
  }

  static Poly variable(const Ring<K>& ring, int i, uint8_t exp = 1) {
    if (i < 0 || i >= ring.nvars) throw ArityMismatch("variable index out of range");
    Poly p(ring);
    if (exp == 0) return constant(ring, ring.field.one());
    p.terms_.emplace_back(Monomial::var(i, exp), ring.field.one());
    return p;
  }

  static Poly term(const Ring<K>& ring, Monomial m, Elem c) {
    Poly p(ring);
    if (!ring.field.is_zero(c)) p.terms_.emplace_back(m, std::move(c));
    return p;
  }

  // Builds canonical form from an arbitrary term list (sorts, merges, drops zeros).
  static Poly from_terms(const Ring<K>& ring, std::vector<Term> terms) {
    Poly p(ring);
    std::sort(terms.begin(), terms.end(), [&ring](const Term& a, const Term& b) {
      return ring.cmp(a.first, b.first) > 0;
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second = ring.field.add(p.terms_.back().second, t.second);
        if (ring.field.is_zero(p.terms_.back().second)) p.terms_.pop_back();
      } else if (!ring.field.is_zero(t.second)) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const Ring<K>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t nterms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Elem& leading_coeff() const { return terms_.front().second; }

  uint32_t degree() const {  // total degree; 0 for the zero polynomial
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.deg);
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.first.deg != terms_.front().first.deg) return false;
    return true;
  }

  Poly homogeneous_component(uint32_t d) const {
    Poly p(ring_);
    for (const auto& t : terms_)
      if (t.first.deg == d) p.terms_.push_back(t);
    return p;
  }

  // Nonzero homogeneous component of lowest degree (zero poly -> zero).
  Poly lowest_homogeneous_part() const {
    if (is_zero()) return *this;
    uint32_t d = terms_.front().first.deg;
    for (const auto& t : terms_) d = std::min(d, t.first.deg);
    return homogeneous_component(d);
  }

  bool operator==(const Poly& o) const {
    if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].first != o.terms_[i].first ||
          !ring_.field.eq(terms_[i].second, o.terms_[i].second))
        return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.second = ring_.field.neg(t.second);
    return p;
  }

  Poly operator+(const Poly& o) const { return merged(o, false); }
  Poly operator-(const Poly& o) const { return merged(o, true); }

  Poly operator*(const Poly& o) const {
    check_ring(o);
    Poly r(ring_);
    if (is_zero() || o.is_zero()) return r;
    if (o.nterms() == 1) return mul_term(o.terms_[0].first, o.terms_[0].second);
    if (nterms() == 1) return o.mul_term(terms_[0].first, terms_[0].second);
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_)
        prods.emplace_back(a.first * b.first, ring_.field.mul(a.second, b.second));
    return from_terms(ring_, std::move(prods));
  }

  // Multiplication by a single term preserves the order, so no re-sort.
  Poly mul_term(const Monomial& m, const Elem& c) const {
    Poly r(ring_);
    if (ring_.field.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.emplace_back(t.first * m, ring_.field.mul(t.second, c));
    return r;
  }

  Poly mul_scalar(const Elem& c) const { return mul_term(Monomial::one(), c); }

  // this / c, leading coefficient made 1 when c = leading_coeff().
  Poly div_scalar(const Elem& c) const { return mul_scalar(ring_.field.inv(c)); }

  Poly monic() const { return is_zero() ? *this : div_scalar(leading_coeff()); }

  Poly pow(unsigned e) const {
    Poly r = constant(ring_, ring_.field.one());
    Poly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      if (e >>= 1) b = b * b;
    }
    return r;
  }

  Poly derivative(int var) const {
    Poly r(ring_);
    for (const auto& t : terms_) {
      const uint8_t e = t.first.e[var];
      if (e == 0) continue;
      Elem c = ring_.field.mul(t.second, ring_.field.from_int(e));
      if (ring_.field.is_zero(c)) continue;  // characteristic may kill it
      Monomial m = t.first;
      m.e[var] = static_cast<uint8_t>(e - 1);
      m.deg -= 1;
      r.terms_.emplace_back(m, std::move(c));
    }
    // dropping one exponent preserves relative order only for some orders;
    // rebuild canonically to stay safe
    return from_terms(ring_, std::move(r.terms_));
  }

  Elem evaluate(const std::vector<Elem>& point) const {
    if (static_cast<int>(point.size()) != ring_.nvars)
      throw ArityMismatch("evaluation point size");
    Elem acc = ring_.field.zero();
    for (const auto& t : terms_) {
      Elem v = t.second;
      for (int i = 0; i < ring_.nvars; ++i)
        for (uint8_t k = 0; k < t.first.e[i]; ++k) v = ring_.field.mul(v, point[i]);
      acc = ring_.field.add(acc, v);
    }
    return acc;
  }

  // Substitute images[i] for variable i; images live in their own common ring.
  Poly<K> substituted(const std::vector<Poly<K>>& images) const {
    if (static_cast<int>(images.size()) != ring_.nvars)
      throw ArityMismatch("substitution needs one image per variable");
    const Ring<K>& target = images.empty() ? ring_ : images[0].ring();
    for (const auto& im : images)
      if (im.ring() != target) throw RingMismatch();
    // cache powers of each image up to the exponent actually used
    std::vector<std::vector<Poly<K>>> powers(images.size());
    for (size_t i = 0; i < images.size(); ++i)
      powers[i].push_back(constant(target, target.field.one()));
    Poly<K> acc(target);
    for (const auto& t : terms_) {
      Poly<K> prod = constant(target, t.second);
      for (int i = 0; i < ring_.nvars; ++i) {
        const uint8_t e = t.first.e[i];
        if (e == 0) continue;
        auto& pw = powers[i];
        while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
        prod = prod * pw[e];
      }
      acc = acc + prod;
    }
    return acc;
  }

  // Map this polynomial into another ring with the same number of variables
  // (used to move between fields is not supported; this only changes order).
  Poly with_order(MonomialOrder order) const {
    Ring<K> r2(ring_.field, ring_.nvars, order);
    std::vector<Term> ts = terms_;
    return from_terms(r2, std::move(ts));
  }

 private:
  void check_ring(const Poly& o) const {
    if (ring_ != o.ring_) throw RingMismatch();
  }

  Poly merged(const Poly& o, bool negate) const {
    check_ring(o);
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    const auto& F = ring_.field;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = ring_.cmp(terms_[i].first, o.terms_[j].first);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.emplace_back(t.first, negate ? F.neg(t.second) : t.second);
      } else {
        Elem s = negate ? F.sub(terms_[i].second, o.terms_[j].second)
                        : F.add(terms_[i].second, o.terms_[j].second);
        if (!F.is_zero(s)) r.terms_.emplace_back(terms_[i].first, std::move(s));
        ++i, ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) {
      const auto& t = o.terms_[j];
      r.terms_.emplace_back(t.first, negate ? F.neg(t.second) : t.second);
    }
    return r;
  }

  Ring<K> ring_;
  std::vector<Term> terms_;
};

// A tuple of polynomials in a common source ring, used as a substitution map
// into that ring (projective morphism candidate when all coordinates are
// homogeneous of one degree).
template <class K>
struct PolyMap {
  std::vector<Poly<K>> coords;

  PolyMap() = default;
  explicit PolyMap(std::vector<Poly<K>> cs) : coords(std::move(cs)) {
    for (const auto& c : coords)
      if (c.ring() != coords[0].ring()) throw RingMismatch();
  }

  const Ring<K>& source_ring() const { return coords.at(0).ring(); }
  size_t size() const { return coords.size(); }

  bool homogeneous_of_common_degree() const {
    uint32_t d = 0;
    bool seen = false;
    for (const auto& c : coords) {
      if (c.is_zero()) continue;
      if (!c.is_homogeneous()) return false;
      if (!seen) {
        d = c.degree();
        seen = true;
      } else if (c.degree() != d) {
        return false;
      }
    }
    return true;
  }
};

// compose(map, f): substitute map coordinates into f; f must live in a ring
// with exactly map.size() variables.
template <class K>
Poly<K> compose(const PolyMap<K>& map, const Poly<K>& f) {
  if (static_cast<size_t>(f.ring().nvars) != map.size())
    throw ArityMismatch("map has " + std::to_string(map.size()) + " coordinates, f expects " +
                        std::to_string(f.ring().nvars));
  return f.substituted(map.coords);
}

template <class K>
PolyMap<K> identity_map(const Ring<K>& ring) {
  std::vector<Poly<K>> cs;
  for (int i = 0; i < ring.nvars; ++i) cs.push_back(Poly<K>::variable(ring, i));
  return PolyMap<K>(std::move(cs));
}

}  // namespace certalg
