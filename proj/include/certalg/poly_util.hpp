#pragma once

#include <optional>
#include <vector>

#include "certalg/poly.hpp"

namespace certalg {

// Dehomogenize on the chart (chart coordinate set to 1), translate the point
// to the origin, and return the nonzero homogeneous component of lowest
// degree. This is the local equation's initial form; the lowest forms of an
// ideal's generators cut out (a superset of) the tangent cone.
//
// Pre: point[chart] == 1 and f(point) == 0.
template <class K>
Poly<K> lowest_form_at_point(const Poly<K>& f, int chart,
                             const std::vector<typename K::Elem>& point) {
  const Ring<K>& R = f.ring();
  const K& F = R.field;
  if (chart < 0 || chart >= R.nvars) throw ArityMismatch("chart index");
  if (static_cast<int>(point.size()) != R.nvars) throw ArityMismatch("point size");
  if (!F.is_one(point[chart])) throw ArityMismatch("chart coordinate of the point must be 1");
  if (!F.is_zero(f.evaluate(point))) throw PointNotOnVariety();

  std::vector<Poly<K>> images;
  images.reserve(R.nvars);
  for (int i = 0; i < R.nvars; ++i) {
    if (i == chart) {
      images.push_back(Poly<K>::constant(R, F.one()));
    } else {
      images.push_back(Poly<K>::variable(R, i) + Poly<K>::constant(R, point[i]));
    }
  }
  return f.substituted(images).lowest_homogeneous_part();
}

// --- univariate utilities -------------------------------------------------
//
// A polynomial counts as univariate when at most one variable occurs. The
// dense coefficient vector c[0..d] represents sum c_k x^k.

template <class K>
std::optional<int> single_variable(const Poly<K>& f) {
  int var = -1;
  for (const auto& [m, c] : f.terms()) {
    for (int i = 0; i < f.ring().nvars; ++i) {
      if (m.e[i] == 0) continue;
      if (var == -1) var = i;
      if (var != i) return std::nullopt;
    }
  }
  return var == -1 ? 0 : var;  // constants count as univariate in x0
}

template <class K>
std::vector<typename K::Elem> univariate_coeffs(const Poly<K>& f, int* var_out = nullptr) {
  auto var = single_variable(f);
  if (!var) throw NotUnivariate();
  if (var_out) *var_out = *var;
  std::vector<typename K::Elem> c;
  const K& F = f.ring().field;
  for (const auto& [m, coeff] : f.terms()) {
    const size_t e = m.e[*var];
    if (c.size() <= e) c.resize(e + 1, F.zero());
    c[e] = coeff;
  }
  return c;
}

template <class K>
std::vector<typename K::Elem> uv_trim(const K& F, std::vector<typename K::Elem> c) {
  while (!c.empty() && F.is_zero(c.back())) c.pop_back();
  return c;
}

template <class K>
std::vector<typename K::Elem> uv_derivative(const K& F, const std::vector<typename K::Elem>& c) {
  std::vector<typename K::Elem> d;
  for (size_t k = 1; k < c.size(); ++k)
    d.push_back(F.mul(c[k], F.from_int(static_cast<long long>(k))));
  return uv_trim(F, std::move(d));
}

// Remainder of a by b, both dense, b nonzero.
template <class K>
std::vector<typename K::Elem> uv_mod(const K& F, std::vector<typename K::Elem> a,
                                     const std::vector<typename K::Elem>& b) {
  a = uv_trim(F, std::move(a));
  while (a.size() >= b.size() && !a.empty()) {
    const auto q = F.div(a.back(), b.back());
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(q, b[i]));
    a = uv_trim(F, std::move(a));
  }
  return a;
}

// Monic gcd of dense univariate polynomials.
template <class K>
std::vector<typename K::Elem> uv_gcd(const K& F, std::vector<typename K::Elem> a,
                                     std::vector<typename K::Elem> b) {
  a = uv_trim(F, std::move(a));
  b = uv_trim(F, std::move(b));
  while (!b.empty()) {
    auto r = uv_mod(F, std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const auto lead = a.back();
    for (auto& c : a) c = F.div(c, lead);
  }
  return a;
}

// Monic gcd of two univariate Poly values (same single variable).
template <class K>
Poly<K> univariate_gcd(const Poly<K>& f, const Poly<K>& g) {
  int vf = 0, vg = 0;
  auto cf = univariate_coeffs(f, &vf);
  auto cg = univariate_coeffs(g, &vg);
  if (!f.is_zero() && !g.is_zero() && f.degree() > 0 && g.degree() > 0 && vf != vg)
    throw NotUnivariate();
  const int var = f.degree() > 0 ? vf : vg;
  const K& F = f.ring().field;
  auto c = uv_gcd(F, std::move(cf), std::move(cg));
  std::vector<typename Poly<K>::Term> terms;
  for (size_t k = 0; k < c.size(); ++k)
    if (!F.is_zero(c[k])) terms.emplace_back(Monomial::var(var, static_cast<uint8_t>(k)), c[k]);
  return Poly<K>::from_terms(f.ring(), std::move(terms));
}

// f squarefree <=> gcd(f, f') is a nonzero constant.
template <class K>
bool univariate_squarefree(const Poly<K>& f) {
  const K& F = f.ring().field;
  auto c = uv_trim(F, univariate_coeffs(f));
  if (c.size() <= 1) return !c.empty();
  auto g = uv_gcd(F, c, uv_derivative(F, c));
  return g.size() == 1;
}

// All roots in F_p by exhaustive scan; sorted by canonical representative.
inline std::vector<uint64_t> univariate_roots_fp(const Poly<PrimeField>& f) {
  const PrimeField& F = f.ring().field;
  auto c = uv_trim(F, univariate_coeffs(f));
  std::vector<uint64_t> roots;
  if (c.empty()) throw Error("root scan of the zero polynomial");
  for (uint64_t a = 0; a < F.p(); ++a) {
    uint64_t acc = 0;
    for (size_t k = c.size(); k-- > 0;) acc = F.add(F.mul(acc, a), c[k]);
    if (acc == 0) roots.push_back(a);
  }
  return roots;
}

// Euler identity helper: sum x_i df/dx_i for homogeneous f equals deg(f)*f
// when the characteristic does not divide the degree.
template <class K>
Poly<K> euler_combination(const Poly<K>& f) {
  Poly<K> acc = Poly<K>::zero(f.ring());
  for (int i = 0; i < f.ring().nvars; ++i)
    acc = acc + Poly<K>::variable(f.ring(), i) * f.derivative(i);
  return acc;
}

}  // namespace certalg
