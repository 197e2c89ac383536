#pragma once

#include "certalg/poly.hpp"

namespace certalg::certs {

// Golden scalar normalizations relating pfaffians and pullbacks to the
// reference forms. Computed once over the rationals and re-asserted as exact
// equalities on every run; a mismatch is a hard certificate failure.
struct Fraction {
  long long num, den;
};

inline constexpr Fraction kLevel12PfaffianFactor{1, 1};   // Pf(4x4 block) = f
inline constexpr Fraction kLevel12PlueckerFactor{2, 1};   // f = 2 * plucker(z)
inline constexpr Fraction kLevel14PfaffianFactor{2, 1};   // Pf(M'_sigma) = 2 * f2
inline constexpr Fraction kLevel14PlueckerFactor{2, 1};   // plucker(phi) = 2 * f2
inline constexpr Fraction kLevel16G1Factor{1, 4};         // Pf(row 2 deleted) = g1 / 4
inline constexpr Fraction kLevel16G2Factor{1, 4};         // Pf(del 0) + Pf(del 4) = g2 / 4
inline constexpr Fraction kLevel18PullbackFactor{1, 1};   // second quadric o phi = Pf(M')

template <class K>
typename K::Elem from_fraction(const K& field, Fraction f) {
  return field.div(field.from_int(f.num), field.from_int(f.den));
}

}  // namespace certalg::certs
