#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "certalg/field.hpp"
#include "certalg/matrix.hpp"
#include "certalg/poly.hpp"

namespace certalg {

// The finite Heisenberg group H_d in its Schroedinger representation on the
// coordinate functions x_0..x_{d-1}:
//
//     sigma(x_i) = x_{i-1},   tau(x_i) = zeta^{-i} x_i,   iota(x_i) = x_{-i},
//
// together with the extension by iota. Elements are kept in the normal form
// scalar * sigma^a tau^b iota^e; composition bookkeeping follows from
// tau sigma = zeta sigma tau and iota g iota = g^{-1} on sigma, tau.
//
// Group elements act on coordinate FUNCTIONS as quoted; the induced action
// on points uses the transformed coordinates evaluated at the point
// (point_act below), which is the inverse transformation.
template <class K>
class HeisenbergContext {
 public:
  using Elem = typename K::Elem;

  HeisenbergContext(int level, FieldSpec<K> fs, MonomialOrder order = {})
      : d_(level), fs_(std::move(fs)), ring_(fs_.field, level, order) {
    try {
      zeta_ = fs_.zeta(static_cast<uint64_t>(level));
    } catch (const NoSuchRoot&) {
      // contexts over fields without zeta_d can still act with elements
      // whose scalar powers stay in {1, -1}
    }
  }

  int level() const { return d_; }
  const Ring<K>& ring() const { return ring_; }
  const K& field() const { return ring_.field; }
  const FieldSpec<K>& field_spec() const { return fs_; }
  bool has_root() const { return zeta_.has_value(); }
  const Elem& zeta() const {
    if (!zeta_) throw NoSuchRoot(static_cast<uint64_t>(d_), fs_.field.token());
    return *zeta_;
  }

  // zeta^k, defined whenever the power itself exists in the field.
  Elem zeta_pow(long long k) const {
    long long r = ((k % d_) + d_) % d_;
    if (r == 0) return field().one();
    if (2 * r == d_) return field().neg(field().one());
    return field().pow(zeta(), r);
  }

  int wrap(long long i) const { return static_cast<int>(((i % d_) + d_) % d_); }

 private:
  int d_;
  FieldSpec<K> fs_;
  Ring<K> ring_;
  std::optional<Elem> zeta_;
};

// scalar * sigma^shift * tau^twist * iota^flip
template <class K>
struct GroupElement {
  int shift = 0;
  int twist = 0;
  typename K::Elem scalar;
  bool flip = false;
};

template <class K>
GroupElement<K> group_element(const HeisenbergContext<K>& ctx, long long shift, long long twist,
                              bool flip = false) {
  return GroupElement<K>{ctx.wrap(shift), ctx.wrap(twist), ctx.field().one(), flip};
}

template <class K>
GroupElement<K> sigma_elem(const HeisenbergContext<K>& ctx) { return group_element(ctx, 1, 0); }
template <class K>
GroupElement<K> tau_elem(const HeisenbergContext<K>& ctx) { return group_element(ctx, 0, 1); }
template <class K>
GroupElement<K> iota_elem(const HeisenbergContext<K>& ctx) { return group_element(ctx, 0, 0, true); }

template <class K>
GroupElement<K> compose(const HeisenbergContext<K>& ctx, const GroupElement<K>& g,
                        const GroupElement<K>& h) {
  const int s = g.flip ? -1 : 1;
  GroupElement<K> r;
  r.shift = ctx.wrap(g.shift + s * h.shift);
  r.twist = ctx.wrap(g.twist + s * h.twist);
  r.flip = g.flip != h.flip;
  r.scalar = ctx.field().mul(ctx.field().mul(g.scalar, h.scalar),
                             ctx.zeta_pow(static_cast<long long>(g.twist) * s * h.shift));
  return r;
}

template <class K>
GroupElement<K> group_pow(const HeisenbergContext<K>& ctx, const GroupElement<K>& g, int e) {
  GroupElement<K> r = group_element(ctx, 0, 0);
  for (int i = 0; i < e; ++i) r = compose(ctx, r, g);
  return r;
}

// Image of the coordinate x_i under g, as (coefficient, index).
template <class K>
std::pair<typename K::Elem, int> coordinate_image(const HeisenbergContext<K>& ctx,
                                                  const GroupElement<K>& g, int i) {
  const int ei = g.flip ? ctx.wrap(-i) : i;
  const int target = ctx.wrap(static_cast<long long>(ei) - g.shift);
  auto c = ctx.field().mul(g.scalar, ctx.zeta_pow(-static_cast<long long>(g.twist) * ei));
  return {c, target};
}

// Substitution of the g-transformed coordinates into f.
template <class K>
Poly<K> act_on_poly(const HeisenbergContext<K>& ctx, const GroupElement<K>& g, const Poly<K>& f) {
  if (f.ring() != ctx.ring()) throw RingMismatch();
  const Ring<K>& R = ctx.ring();
  std::vector<typename Poly<K>::Term> out;
  out.reserve(f.nterms());
  for (const auto& [m, c] : f.terms()) {
    Monomial im;
    typename K::Elem coeff = c;
    for (int i = 0; i < ctx.level(); ++i) {
      if (m.e[i] == 0) continue;
      auto [ci, j] = coordinate_image(ctx, g, i);
      im.e[j] = static_cast<uint8_t>(im.e[j] + m.e[i]);
      im.deg += m.e[i];
      for (uint8_t k = 0; k < m.e[i]; ++k) coeff = R.field.mul(coeff, ci);
    }
    out.emplace_back(im, std::move(coeff));
  }
  return Poly<K>::from_terms(R, std::move(out));
}

// Action on points: evaluate the transformed coordinates at the point, so
// that act_on_poly(g, f)(p) = f(point_act(g, p)).
template <class K>
std::vector<typename K::Elem> point_act(const HeisenbergContext<K>& ctx, const GroupElement<K>& g,
                                        const std::vector<typename K::Elem>& p) {
  std::vector<typename K::Elem> q(p.size());
  for (int i = 0; i < ctx.level(); ++i) {
    auto [c, j] = coordinate_image(ctx, g, i);
    q[static_cast<size_t>(i)] = ctx.field().mul(c, p[static_cast<size_t>(j)]);
  }
  return q;
}

// Same action applied to a tuple of polynomials (e.g. a parametrized line).
template <class K>
std::vector<Poly<K>> point_act(const HeisenbergContext<K>& ctx, const GroupElement<K>& g,
                               const std::vector<Poly<K>>& p) {
  std::vector<Poly<K>> q(p.size(), Poly<K>::zero(p.at(0).ring()));
  for (int i = 0; i < ctx.level(); ++i) {
    auto [c, j] = coordinate_image(ctx, g, i);
    q[static_cast<size_t>(i)] = p[static_cast<size_t>(j)].mul_scalar(c);
  }
  return q;
}

// Matrix of g in the column convention: column i holds the image of x_i, so
// matrices compose by plain products and tau sigma = zeta sigma tau holds
// literally.
template <class K>
DenseMatrix<K> group_matrix(const HeisenbergContext<K>& ctx, const GroupElement<K>& g) {
  DenseMatrix<K> m(ctx.field(), static_cast<size_t>(ctx.level()), static_cast<size_t>(ctx.level()));
  for (int i = 0; i < ctx.level(); ++i) {
    auto [c, j] = coordinate_image(ctx, g, i);
    m.at(static_cast<size_t>(j), static_cast<size_t>(i)) = c;
  }
  return m;
}

template <class K>
struct SchrodingerMatrices {
  DenseMatrix<K> sigma, tau, iota;
};

template <class K>
SchrodingerMatrices<K> schrodinger_matrices(const HeisenbergContext<K>& ctx) {
  if (!ctx.has_root() && ctx.level() > 2)
    throw NoSuchRoot(static_cast<uint64_t>(ctx.level()), ctx.field().token());
  return {group_matrix(ctx, sigma_elem(ctx)), group_matrix(ctx, tau_elem(ctx)),
          group_matrix(ctx, iota_elem(ctx))};
}

// The standard skew pairing on Z_d x Z_d normalized by
// e((1,0),(0,1)) = zeta_d^{-1}: e(v, w) = zeta^{-(v1 w2 - v2 w1)}.
template <class K>
typename K::Elem weil_pairing(const HeisenbergContext<K>& ctx, std::pair<long long, long long> v,
                              std::pair<long long, long long> w) {
  return ctx.zeta_pow(-(v.first * w.second - v.second * w.first));
}

// Minus chart of the involution for even level d = 2m: the (-1)-eigenspace
// P^{m-1}_- embeds by
//   x_0 -> 0,  x_i -> u_{i-1},  x_m -> 0,  x_{d-i} -> -u_{i-1}  (1 <= i < m),
// where u_0..u_{m-2} are the chart ring coordinates (the classical labels
// x_1..x_{m-1} shifted down by one).
template <class K>
struct MinusChart {
  Ring<K> chart_ring;
  PolyMap<K> embedding;  // d coordinates as polynomials in the chart ring
};

template <class K>
MinusChart<K> minus_chart(const HeisenbergContext<K>& ctx, MonomialOrder order = {}) {
  const int d = ctx.level();
  if (d % 2 != 0) throw OddLevel();
  const int m = d / 2;
  Ring<K> chart(ctx.field(), m - 1, order);
  std::vector<Poly<K>> coords(static_cast<size_t>(d), Poly<K>::zero(chart));
  for (int i = 1; i < m; ++i) {
    coords[static_cast<size_t>(i)] = Poly<K>::variable(chart, i - 1);
    coords[static_cast<size_t>(d - i)] = -Poly<K>::variable(chart, i - 1);
  }
  return {chart, PolyMap<K>(std::move(coords))};
}

// ---- GL_H families ---------------------------------------------------------

enum class LevelSubgroup {
  SigmaSqTau,  // generated by sigma^2 and tau
  TwoK,        // 2K(D): generated by sigma^2 and tau^2
  FullK,       // all of K(D)
};

inline const char* level_subgroup_name(LevelSubgroup h) {
  switch (h) {
    case LevelSubgroup::SigmaSqTau: return "<sigma^2,tau>";
    case LevelSubgroup::TwoK: return "2K";
    case LevelSubgroup::FullK: return "K";
  }
  return "?";
}

// Generators of the lift H' in the Schroedinger representation.
template <class K>
std::vector<GroupElement<K>> level_subgroup_generators(const HeisenbergContext<K>& ctx,
                                                       LevelSubgroup h) {
  switch (h) {
    case LevelSubgroup::SigmaSqTau:
      return {group_element(ctx, 2, 0), group_element(ctx, 0, 1)};
    case LevelSubgroup::TwoK:
      return {group_element(ctx, 2, 0), group_element(ctx, 0, 2)};
    case LevelSubgroup::FullK:
      return {group_element(ctx, 1, 0), group_element(ctx, 0, 1)};
  }
  throw Error("unknown subgroup tag");
}

// Case H = <sigma^2, tau>, level 2d: T = diag(a,b,a,b,...) or
// sigma^d composed with that diagonal.
template <class K>
DenseMatrix<K> glh_case_diag(const HeisenbergContext<K>& ctx, const typename K::Elem& a,
                             const typename K::Elem& b, bool with_half_shift) {
  const int n = ctx.level();
  DenseMatrix<K> t(ctx.field(), static_cast<size_t>(n), static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    t.at(static_cast<size_t>(i), static_cast<size_t>(i)) = (i % 2 == 0) ? a : b;
  if (with_half_shift)
    t = group_matrix(ctx, group_element(ctx, n / 2, 0)) * t;
  return t;
}

// Case H = 2K(D), level 2d: entries vanish unless i = j or i = j + d, with
// a_{i+2,j+2} = a_{ij}; free parameters are the even/odd diagonal values and
// the even/odd off-diagonal values.
template <class K>
DenseMatrix<K> glh_case_twok(const HeisenbergContext<K>& ctx, const typename K::Elem& alpha,
                             const typename K::Elem& beta, const typename K::Elem& gamma,
                             const typename K::Elem& delta) {
  const int n = ctx.level();
  const int d = n / 2;
  DenseMatrix<K> t(ctx.field(), static_cast<size_t>(n), static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    t.at(static_cast<size_t>(j), static_cast<size_t>(j)) = (j % 2 == 0) ? alpha : beta;
    t.at(static_cast<size_t>(ctx.wrap(j + d)), static_cast<size_t>(j)) =
        (j % 2 == 0) ? gamma : delta;
  }
  return t;
}

// T alpha T^{-1} alpha^{-1}; caller checks scalarity.
template <class K>
DenseMatrix<K> commutator(const DenseMatrix<K>& t, const DenseMatrix<K>& a) {
  return t * a * t.inverse() * a.inverse();
}

template <class K>
bool glh_member(const HeisenbergContext<K>& ctx, const DenseMatrix<K>& t, LevelSubgroup h) {
  const auto iota = group_matrix(ctx, iota_elem(ctx));
  if (t * iota != iota * t) return false;
  try {
    for (const auto& g : level_subgroup_generators(ctx, h)) {
      typename K::Elem c;
      if (!commutator(t, group_matrix(ctx, g)).is_scalar(&c) || ctx.field().is_zero(c))
        return false;
    }
  } catch (const ZeroInverse&) {
    return false;  // singular matrices are not members
  }
  return true;
}

// Normal form of a matrix normalizing H' up to scalars: finds (a, b) with
// sigma^a tau^b T commuting with iota, per the structure of GL_H.
template <class K>
struct GlhNormalForm {
  int a = 0, b = 0;
  DenseMatrix<K> t_prime;
};

template <class K>
GlhNormalForm<K> glh_normal_form(const HeisenbergContext<K>& ctx, const DenseMatrix<K>& t,
                                 LevelSubgroup h) {
  // precondition: [T, alpha] scalar for the generators of H'
  try {
    for (const auto& g : level_subgroup_generators(ctx, h)) {
      typename K::Elem c;
      if (!commutator(t, group_matrix(ctx, g)).is_scalar(&c) || ctx.field().is_zero(c))
        throw NotInNormalizerClass();
    }
  } catch (const ZeroInverse&) {
    throw NotInNormalizerClass();
  }
  const auto iota = group_matrix(ctx, iota_elem(ctx));
  const int n = ctx.level();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto tp = group_matrix(ctx, group_element(ctx, a, b)) * t;
      if (tp * iota == iota * tp) return {a, b, tp};
    }
  }
  throw NotInNormalizerClass();
}

// ---- level stabilizer count ------------------------------------------------

// #( (GL_H intersect N(H(1,2d))) / scalars ): enumerates SL_2(Z_{2d})
// exhaustively ((2d)^4 candidates filtered by determinant 1) for the
// elements fixing H pointwise, times the number of iota-centralizing
// Heisenberg cosets in GL_H, computed from the Schroedinger matrices over a
// small prime field containing zeta_{2d}.
inline long long count_level_stabilizer(int d, LevelSubgroup h) {
  const long long n = 2 * d;
  std::vector<std::pair<long long, long long>> h_gens;
  switch (h) {
    case LevelSubgroup::SigmaSqTau: h_gens = {{2, 0}, {0, 1}}; break;
    case LevelSubgroup::TwoK: h_gens = {{2, 0}, {0, 2}}; break;
    case LevelSubgroup::FullK: h_gens = {{1, 0}, {0, 1}}; break;
  }
  long long sl2_fixing = 0;
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      for (long long c = 0; c < n; ++c)
        for (long long e = 0; e < n; ++e) {
          if (((a * e - b * c) % n + n) % n != 1) continue;
          bool fixes = true;
          for (auto [h1, h2] : h_gens) {
            if (((a * h1 + b * h2) % n + n) % n != h1 ||
                ((c * h1 + e * h2) % n + n) % n != h2) {
              fixes = false;
              break;
            }
          }
          if (fixes) ++sl2_fixing;
        }

  // Heisenberg part, modulo scalars
  uint64_t p = static_cast<uint64_t>(n) + 1;
  while (!(is_prime_u64(p) && p % 2 == 1 && (p - 1) % static_cast<uint64_t>(n) == 0)) p += 2;
  FieldSpec<PrimeField> fs{PrimeField(p)};
  HeisenbergContext<PrimeField> ctx(static_cast<int>(n), fs);
  long long heis = 0;
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      if (glh_member(ctx, group_matrix(ctx, group_element(ctx, a, b)), h)) ++heis;
  return sl2_fixing * heis;
}

}  // namespace certalg
