#pragma once

#include "certalg/cert/common.hpp"
#include "certalg/cert/constants.hpp"
#include "certalg/moore.hpp"
#include "certalg/poly_util.hpp"

namespace certalg::certs {

// Level 16. On P^6_- the Moore matrix M_8(x,x) carries a 5x5 block which,
// in the symmetrized coordinates (y0,y1,z0,z1,t0,t1,u), becomes one half of
// an integral skew matrix. Its 4x4 pfaffians cut out the threefold traced by
// odd 2-torsion points; the certificate checks its degree, the tangent cone
// at the distinguished point, the projected complete intersection with its
// six singular points, the kernel-orbit count at the characteristic-7 point,
// and the level-stabilizer count.
template <class K>
struct Level16 {
  HeisenbergContext<K> ctx;
  MinusChart<K> chart;
  Ring<K> tring;                 // y0, y1, z0, z1, t0, t1, u
  PolyMatrix<K> m_display;       // the displayed 5x5 matrix (with the 1/2)
  std::vector<Poly<K>> zgens;    // the five 4x4 sub-pfaffians
  Ring<K> pring;                 // y0, y1, z0, z1, t0, t1 (projection target)
  Poly<K> g1, g2;                // displayed quartics on the projection

  explicit Level16(FieldSpec<K> fs)
      : ctx(16, std::move(fs)), chart(minus_chart(ctx)), tring(ctx.field(), 7),
        pring(ctx.field(), 6) {
    const K& F = tring.field;
    auto v = [&](int i) { return Poly<K>::variable(tring, i); };
    const auto y0 = v(0), y1 = v(1), z0 = v(2), z1 = v(3), t0 = v(4), t1 = v(5), u = v(6);
    const auto half = F.div(F.one(), F.from_int(2));
    auto mk = [&](const Poly<K>& p) { return p.mul_scalar(half); };
    std::vector<std::vector<Poly<K>>> rows = {
        {Poly<K>::zero(tring), mk(-(y0 * y0 + z0 * z0)), mk(-(t1 * t1 + u * u)),
         mk(-(y1 * y1 + z1 * z1)), mk((t0 * t0).mul_scalar(F.from_int(-4)))},
        {mk(y0 * y0 + z0 * z0), Poly<K>::zero(tring), mk(-(y0 * y1 + z0 * z1)),
         mk((t0 * t1).mul_scalar(F.from_int(-2))), mk(-(y1 * y1) + z1 * z1)},
        {mk(t1 * t1 + u * u), mk(y0 * y1 + z0 * z1), Poly<K>::zero(tring),
         mk(-(y0 * y1) + z0 * z1), mk(-(t1 * t1) + u * u)},
        {mk(y1 * y1 + z1 * z1), mk((t0 * t1).mul_scalar(F.from_int(2))), mk(y0 * y1 - z0 * z1),
         Poly<K>::zero(tring), mk(-(y0 * y0) + z0 * z0)},
        {mk((t0 * t0).mul_scalar(F.from_int(4))), mk(y1 * y1 - z1 * z1), mk(t1 * t1 - u * u),
         mk(y0 * y0 - z0 * z0), Poly<K>::zero(tring)}};
    m_display = PolyMatrix<K>(tring, 5, 5);
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = 0; j < 5; ++j) m_display.at(i, j) = rows[i][j];
    m_display.check_skew();
    for (auto& [sel, p] : sub_pfaffians(m_display, 4)) zgens.push_back(p);

    auto w = [&](int i) { return Poly<K>::variable(pring, i); };
    const auto Y0 = w(0), Y1 = w(1), Z0 = w(2), Z1 = w(3), T0 = w(4), T1 = w(5);
    g1 = Y0.pow(4) - Y1.pow(4) - Z0.pow(4) + Z1.pow(4) +
         (T0.pow(3) * T1).mul_scalar(F.from_int(8));
    g2 = (Y0.pow(3) * Y1 + Y0 * Y1.pow(3) - Z0.pow(3) * Z1 + Z0 * Z1.pow(3))
             .mul_scalar(F.from_int(2)) -
         (T0 * T1.pow(3)).mul_scalar(F.from_int(4));
  }

  // x1..x7 -> (y0,y1,z0,z1,t0,t1,u): the symmetrizing substitution expressing
  // the chart coordinates through the new ones.
  std::vector<Poly<K>> chart_to_transformed() const {
    const K& F = tring.field;
    auto v = [&](int i) { return Poly<K>::variable(tring, i); };
    const auto y0 = v(0), y1 = v(1), z0 = v(2), z1 = v(3), t0 = v(4), t1 = v(5), u = v(6);
    const auto half = F.div(F.one(), F.from_int(2));
    return {(y0 + z0).mul_scalar(half), (t1 + u).mul_scalar(half), (y1 + z1).mul_scalar(half),
            t0,                          (y1 - z1).mul_scalar(half), (t1 - u).mul_scalar(half),
            (y0 - z0).mul_scalar(half)};
  }
};

// N_x: the 3x7 matrix whose kernel spans the orbit closure through x; the
// columns correspond to the chart coordinates x1..x7.
template <class K>
DenseMatrix<K> orbit_kernel_matrix(const K& field, const std::vector<typename K::Elem>& yztu) {
  const auto& y0 = yztu[0];
  const auto& y1 = yztu[1];
  const auto& z0 = yztu[2];
  const auto& z1 = yztu[3];
  const auto& t0 = yztu[4];
  const auto& t1 = yztu[5];
  DenseMatrix<K> n(field, 3, 7);
  auto neg = [&](const typename K::Elem& v) { return field.neg(v); };
  typename K::Elem row0[7] = {neg(z1), field.zero(), z0, field.zero(), neg(z0), field.zero(), z1};
  typename K::Elem row1[7] = {field.zero(), t0, field.zero(), neg(t1), field.zero(), t0, field.zero()};
  typename K::Elem row2[7] = {y1, field.zero(), neg(y0), field.zero(), neg(y0), field.zero(), y1};
  for (size_t j = 0; j < 7; ++j) {
    n.at(0, j) = row0[j];
    n.at(1, j) = row1[j];
    n.at(2, j) = row2[j];
  }
  return n;
}

template <class K>
void level16_field_checks(Runner& r, FieldSpec<K> fs, const std::string& tag,
                          const GBOptions& opts, const RunConfig& cfg) {
  Level16<K> L(std::move(fs));
  const K& F = L.tring.field;

  r.check("block-display" + tag, [&](std::string& detail) {
    auto M = moore_even(8, L.chart.embedding.coords, L.chart.embedding.coords);
    auto blk = M.submatrix({0, 1, 2, 3, 4});
    auto transformed = blk.substituted(L.chart_to_transformed());
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = 0; j < 5; ++j)
        require(transformed.at(i, j) == L.m_display.at(i, j),
                "entry (" + std::to_string(i) + "," + std::to_string(j) +
                    ") differs from the display");
    detail = "5x5 block in symmetrized coordinates matches the display (global 1/2)";
  });

  Ideal<K> Z(L.tring, L.zgens);

  r.check("threefold-degree-40" + tag, [&](std::string& detail) {
    auto gb = buchberger_cached(Z, opts, cfg.cache_dir);
    auto h = dimension_and_degree(gb);
    require(h.proj_dim == 3, "dim " + std::to_string(h.proj_dim) + " != 3");
    require(h.degree == 40, "degree " + std::to_string(h.degree) + " != 40");
    detail = "pfaffian ideal: dim 3, degree 40; generators " + embed_ideal(Z);
  });

  r.check("tangent-cone-at-u" + tag, [&](std::string& detail) {
    std::vector<typename K::Elem> p(7, F.zero());
    p[6] = F.one();
    std::vector<Poly<K>> lows;
    for (const auto& g : L.zgens) {
      auto lf = lowest_form_at_point(g, 6, p);
      if (!lf.is_zero()) lows.push_back(lf);
    }
    auto v = [&](int i) { return Poly<K>::variable(L.tring, i); };
    Ideal<K> tc(L.tring, lows);
    Ideal<K> ref(L.tring, {v(4) * v(5), v(0) * v(0) + v(1) * v(1), v(2) * v(2) - v(3) * v(3)});
    require(ideal_equal(tc, ref, opts), "lowest-form ideal differs from (t0 t1, y0^2+y1^2, z0^2-z1^2)");
    detail = "ideal of lowest forms equals (t0 t1, y0^2+y1^2, z0^2-z1^2)";
  });

  r.check("projected-quartics" + tag, [&](std::string& detail) {
    // Pf with row/col 2 deleted is u-free and recovers g1; deleting rows 0
    // and 4 gives the two pfaffians whose sum recovers g2.
    auto pf_del = [&](size_t k) {
      std::vector<size_t> idx;
      for (size_t i = 0; i < 5; ++i)
        if (i != k) idx.push_back(i);
      auto sm = L.m_display.submatrix(idx);
      return pfaffian(sm);
    };
    auto embed = [&](const Poly<K>& q) {  // pring -> tring (u-free)
      std::vector<Poly<K>> im;
      for (int i = 0; i < 6; ++i) im.push_back(Poly<K>::variable(L.tring, i));
      return q.substituted(im);
    };
    auto d2 = pf_del(2);
    for (const auto& [m, c] : d2.terms())
      require(m.e[6] == 0, "pfaffian with row 2 deleted involves u");
    require(d2 == embed(L.g1).mul_scalar(from_fraction(F, kLevel16G1Factor)),
            "g1 does not match the recorded pfaffian multiple");
    require(pf_del(0) + pf_del(4) == embed(L.g2).mul_scalar(from_fraction(F, kLevel16G2Factor)),
            "g2 does not match the recorded pfaffian sum");
    auto gb = buchberger_cached(Z, opts, cfg.cache_dir);
    require(gb.contains(embed(L.g1), opts), "g1 does not vanish on the threefold");
    require(gb.contains(embed(L.g2), opts), "g2 does not vanish on the threefold");
    detail = "g1, g2 match the displayed formulas (factor 1/4) and vanish on the threefold";
  });

  r.check("projection-singular-dim0" + tag, [&](std::string& detail) {
    auto J = jacobian_ideal(Ideal<K>(L.pring, {L.g1, L.g2}), 2);
    auto h = dimension_and_degree(buchberger_cached(J, opts, cfg.cache_dir));
    require(h.proj_dim == 0, "jacobian scheme of the (4,4) intersection has dim " +
                                 std::to_string(h.proj_dim));
    detail = "jacobian scheme of {g1=g2=0}: dim 0, degree " + std::to_string(h.degree);
  });
}

// The six displayed singular points need a square root of -1.
inline void level16_singular_points(Runner& r, uint64_t sing_prime, const GBOptions& opts) {
  r.check("six-singular-points[F" + std::to_string(sing_prime) + "]", [&](std::string& detail) {
    FieldSpec<PrimeField> fs{PrimeField(sing_prime)};
    PrimeField F = fs.field;
    require((F.p() - 1) % 4 == 0, "prime must be 1 mod 4 so that i exists");
    const auto i_unit = fs.zeta(4);
    Level16<PrimeField> L(fs);
    auto J = jacobian_ideal(Ideal<PrimeField>(L.pring, {L.g1, L.g2}), 2);
    auto pt = [&](std::initializer_list<uint64_t> v) {
      return std::vector<uint64_t>(v.begin(), v.end());
    };
    std::vector<std::vector<uint64_t>> pts = {
        pt({1, i_unit, 0, 0, 0, 0}),       pt({1, F.neg(i_unit), 0, 0, 0, 0}),
        pt({0, 0, 1, 1, 0, 0}),            pt({0, 0, 1, F.neg(1), 0, 0}),
        pt({0, 0, 0, 0, 1, 0}),            pt({0, 0, 0, 0, 0, 1})};
    for (const auto& p : pts)
      for (const auto& g : J.gens)
        require(F.is_zero(g.evaluate(p)), "a jacobian generator fails to vanish at a listed point");
    (void)opts;
    detail = "all 6 displayed points lie in the singular scheme (i = " + std::to_string(i_unit) +
             " mod " + std::to_string(sing_prime) + ")";
  });
}

// Orbit count at the characteristic-7 witness point.
inline void level16_orbit_check(Runner& r, const GBOptions& opts, const RunConfig& cfg) {
  r.check("orbit-degree-32[F7]", [&](std::string& detail) {
    FieldSpec<PrimeField> fs{PrimeField(7)};
    PrimeField F = fs.field;
    Level16<PrimeField> L(fs);
    // y0=4, y1=-1, z0=-2, z1=-1, t0=2, t1=-2, u=1
    std::vector<uint64_t> x = {4,        F.neg(1), F.neg(2), F.neg(1),
                               2,        F.neg(2), 1};
    auto n = orbit_kernel_matrix(F, x);
    auto ker = n.kernel();
    require(ker.size() == 4, "kernel dimension " + std::to_string(ker.size()) + " != 4");
    // parametrize the kernel and restrict the five quartics to it
    Ring<PrimeField> S(F, 4);
    std::vector<Poly<PrimeField>> xs(7, Poly<PrimeField>::zero(S));
    for (size_t k = 0; k < 4; ++k)
      for (size_t j = 0; j < 7; ++j)
        xs[j] = xs[j] + Poly<PrimeField>::variable(S, static_cast<int>(k)).mul_scalar(ker[k][j]);
    // transformed coordinates of the kernel point
    auto half = F.inv(2);
    std::vector<Poly<PrimeField>> im = {
        (xs[0] + xs[6]).mul_scalar(1), (xs[2] + xs[4]).mul_scalar(1),
        (xs[0] - xs[6]).mul_scalar(1), (xs[2] - xs[4]).mul_scalar(1),
        xs[3],                          (xs[1] + xs[5]).mul_scalar(1),
        (xs[1] - xs[5]).mul_scalar(1)};
    (void)half;
    std::vector<Poly<PrimeField>> restricted;
    for (const auto& g : L.zgens) {
      auto q = g.substituted(im);
      if (!q.is_zero()) restricted.push_back(q);
    }
    auto gb = buchberger_cached(Ideal<PrimeField>(S, restricted), opts, cfg.cache_dir);
    auto h = dimension_and_degree(gb);
    require(h.proj_dim == 0, "orbit scheme has dim " + std::to_string(h.proj_dim));
    require(h.degree == 32, "orbit scheme degree " + std::to_string(h.degree) + " != 32");
    require(h.degree % 32 == 0 && h.degree <= 40, "degree outside the squeeze 32 | deg <= 40");
    detail = "kernel dim 4; restricted pfaffian scheme: dim 0, degree 32";
  });
}

// Optional: at each singular point the pencil member with cancelled linear
// part has a cubic lowest form.
inline void level16_triple_point_check(Runner& r, uint64_t sing_prime) {
  r.check("tangent-cone-cubic-order[F" + std::to_string(sing_prime) + "]",
          [&](std::string& detail) {
    FieldSpec<PrimeField> fs{PrimeField(sing_prime)};
    PrimeField F = fs.field;
    const auto i_unit = fs.zeta(4);
    Level16<PrimeField> L(fs);
    struct Pt {
      std::vector<uint64_t> coords;
      int chart;
    };
    std::vector<Pt> pts = {{{1, i_unit, 0, 0, 0, 0}, 0},      {{1, F.neg(i_unit), 0, 0, 0, 0}, 0},
                           {{0, 0, 1, 1, 0, 0}, 2},           {{0, 0, 1, F.neg(1), 0, 0}, 2},
                           {{0, 0, 0, 0, 1, 0}, 4},           {{0, 0, 0, 0, 0, 1}, 5}};
    for (const auto& [p, chart] : pts) {
      // local equations: dehomogenize on the chart and translate
      std::vector<Poly<PrimeField>> images;
      for (int i = 0; i < 6; ++i) {
        if (i == chart)
          images.push_back(Poly<PrimeField>::constant(L.pring, F.one()));
        else
          images.push_back(Poly<PrimeField>::variable(L.pring, i) +
                           Poly<PrimeField>::constant(L.pring, p[static_cast<size_t>(i)]));
      }
      auto h1 = L.g1.substituted(images);
      auto h2 = L.g2.substituted(images);
      auto l1 = h1.homogeneous_component(1);
      auto l2 = h2.homogeneous_component(1);
      Poly<PrimeField> special = Poly<PrimeField>::zero(L.pring);
      if (l1.is_zero()) {
        special = h1;
      } else if (l2.is_zero()) {
        special = h2;
      } else {
        require(l2 == l1.mul_scalar(F.div(l2.leading_coeff(), l1.leading_coeff())),
                "independent linear parts: the point is not singular");
        special = h2 - h1.mul_scalar(F.div(l2.leading_coeff(), l1.leading_coeff()));
      }
      auto low = special.lowest_homogeneous_part();
      require(!low.is_zero() && low.degree() == 3,
              "special pencil member has order " + std::to_string(low.degree()) + " != 3");
    }
    detail = "at all 6 points the pencil member with cancelled linear part has order exactly 3";
  });
}

inline CertificateReport run_d16(const RunConfig& cfg) {
  auto rep = init_report("d16", cfg);
  auto plan = field_plan(cfg, {{false, 7}, {false, 13}});
  rep.set_param("fields", fields_summary(plan));
  note_char0_wording(rep, plan);
  // the singular points need i in the field
  uint64_t sing_prime = 13;
  for (const auto& fc : plan)
    if (!fc.rational && (fc.p - 1) % 4 == 0) {
      sing_prime = fc.p;
      break;
    }
  rep.set_param("orbit-prime", "7");
  rep.set_param("sing-prime", std::to_string(sing_prime));

  Runner r(rep);
  const auto t0 = std::chrono::steady_clock::now();
  auto opts = gb_options(cfg, 5.0, "d16");
  bool noted = false;
  for (const auto& fc : plan) {
    const std::string tag = "[" + fc.label() + "]";
    if (fc.rational) {
      FieldSpec<RationalField> fs{RationalField{}};
      if (!noted) note_field(rep, fs), noted = true;
      level16_field_checks(r, fs, tag, opts, cfg);
    } else {
      FieldSpec<PrimeField> fs{PrimeField(fc.p)};
      if (!noted) note_field(rep, fs), noted = true;
      level16_field_checks(r, fs, tag, opts, cfg);
    }
  }
  level16_singular_points(r, sing_prime, opts);
  level16_orbit_check(r, opts, cfg);
  r.check("level-stabilizer-32", [&](std::string& detail) {
    auto n = count_level_stabilizer(8, LevelSubgroup::TwoK);
    require(n == 32, "count " + std::to_string(n) + " != 32");
    detail = "#(GL_H \\cap N(H(1,16)))/scalars = 32";
  });
  if (cfg.extended)
    level16_triple_point_check(r, sing_prime);
  else
    r.skip("tangent-cone-cubic-order", "extended checks disabled (pass --extended)");

  rep.elapsed_millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  return rep;
}

}  // namespace certalg::certs
