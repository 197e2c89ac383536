#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "certalg/poly.hpp"
#include "certalg/poly_io.hpp"
#include "certalg/poly_util.hpp"

using namespace certalg;

namespace {

template <class K>
Poly<K> rnd_poly(const Ring<K>& R, std::mt19937_64& rng, int maxdeg = 3, int maxterms = 5) {
  std::vector<typename Poly<K>::Term> ts;
  int nt = 1 + rng() % maxterms;
  for (int t = 0; t < nt; ++t) {
    Monomial m;
    int d = rng() % (maxdeg + 1);
    for (int k = 0; k < d; ++k) {
      int v = rng() % R.nvars;
      m.e[v]++;
      m.deg++;
    }
    ts.emplace_back(m, R.field.from_int(static_cast<long long>(rng() % 19) - 9));
  }
  return Poly<K>::from_terms(R, std::move(ts));
}

}  // namespace

TEST_CASE("basic arithmetic and canonical form") {
  Ring<RationalField> R(RationalField{}, 2);
  auto x0 = Poly<RationalField>::variable(R, 0);
  auto x1 = Poly<RationalField>::variable(R, 1);
  auto prod = (x0 + x1) * (x0 - x1);
  REQUIRE(prod == x0 * x0 - x1 * x1);
  REQUIRE((prod * Poly<RationalField>::zero(R)).is_zero());
  REQUIRE((prod - prod).is_zero());
}

TEST_CASE("level-12 invariant quartic expands to six canonical terms") {
  // chart coordinates u1..u5 are ring variables x0..x4
  Ring<RationalField> R(RationalField{}, 5);
  auto X = [&](int paper_index) { return Poly<RationalField>::variable(R, paper_index - 1); };
  auto two = Poly<RationalField>::from_int(R, 2);
  auto f = two * X(3) * X(3) * (X(1) * X(3) + X(3) * X(5)) -
           two * (X(2) * X(2) + X(4) * X(4)) * X(2) * X(4) +
           two * X(1) * X(5) * (X(1) * X(1) + X(5) * X(5));
  REQUIRE(f.nterms() == 6);
  REQUIRE(f.is_homogeneous());
  REQUIRE(f.degree() == 4);
  auto expected = two * (X(1) * X(3).pow(3) + X(3).pow(3) * X(5) - X(2).pow(3) * X(4) -
                         X(2) * X(4).pow(3) + X(1).pow(3) * X(5) + X(1) * X(5).pow(3));
  REQUIRE(f == expected);
}

TEST_CASE("partial derivatives") {
  Ring<RationalField> Rq(RationalField{}, 3);
  auto x0 = Poly<RationalField>::variable(Rq, 0);
  auto x1 = Poly<RationalField>::variable(Rq, 1);
  REQUIRE((x0 * x0 * x1).derivative(0) == Poly<RationalField>::from_int(Rq, 2) * x0 * x1);
  REQUIRE(Poly<RationalField>::from_int(Rq, 9).derivative(2).is_zero());

  // characteristic kills the coefficient
  Ring<PrimeField> R5(PrimeField(5), 1);
  auto t = Poly<PrimeField>::variable(R5, 0);
  REQUIRE(t.pow(5).derivative(0).is_zero());
}

TEST_CASE("compose: identity map and ring algebra") {
  Ring<RationalField> R(RationalField{}, 3);
  std::mt19937_64 rng(42);
  auto id = identity_map(R);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = rnd_poly(R, rng);
    REQUIRE(compose(id, f) == f);
  }
  // compose distributes over products through a quadratic map
  Ring<RationalField> S(RationalField{}, 2);
  std::vector<Poly<RationalField>> imgs;
  for (int i = 0; i < 3; ++i) imgs.push_back(rnd_poly(S, rng, 2, 3));
  PolyMap<RationalField> phi(imgs);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = rnd_poly(R, rng, 2, 3);
    auto g = rnd_poly(R, rng, 2, 3);
    REQUIRE(compose(phi, f * g) == compose(phi, f) * compose(phi, g));
    REQUIRE(compose(phi, f + g) == compose(phi, f) + compose(phi, g));
  }
}

TEST_CASE("homogeneous components reassemble") {
  Ring<PrimeField> R(PrimeField(13), 4);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = rnd_poly(R, rng, 4, 8);
    Poly<PrimeField> sum = Poly<PrimeField>::zero(R);
    for (uint32_t d = 0; d <= f.degree(); ++d) sum = sum + f.homogeneous_component(d);
    REQUIRE(sum == f);
  }
}

TEST_CASE("euler identity for homogeneous polynomials") {
  Ring<RationalField> R(RationalField{}, 4);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = rnd_poly(R, rng, 3, 6).homogeneous_component(3);
    REQUIRE(euler_combination(f) == f.mul_scalar(mpq_class(3)));
  }
}

TEST_CASE("lowest form at a point") {
  // f = x0*x2 - x1^2, chart x2, point (0,0,1): smooth, lowest form x0
  Ring<RationalField> R(RationalField{}, 3);
  auto x0 = Poly<RationalField>::variable(R, 0);
  auto x1 = Poly<RationalField>::variable(R, 1);
  auto x2 = Poly<RationalField>::variable(R, 2);
  auto f = x0 * x2 - x1 * x1;
  RationalField Q;
  std::vector<mpq_class> pt = {Q.zero(), Q.zero(), Q.one()};
  auto lf = lowest_form_at_point(f, 2, pt);
  REQUIRE(lf == x0);
  REQUIRE(lf.is_homogeneous());
  REQUIRE(lf.degree() >= 1);

  std::vector<mpq_class> off = {Q.one(), Q.zero(), Q.one()};
  REQUIRE_THROWS_AS(lowest_form_at_point(f, 2, off), PointNotOnVariety);
}

TEST_CASE("univariate utilities") {
  Ring<PrimeField> R(PrimeField(7), 2);
  auto t = Poly<PrimeField>::variable(R, 1);
  auto one = Poly<PrimeField>::from_int(R, 1);
  auto f = (t - one) * (t - one - one);  // (t-1)(t-2)
  REQUIRE(univariate_squarefree(f));
  REQUIRE(univariate_roots_fp(f) == std::vector<uint64_t>{1, 2});
  auto sq = (t - one) * (t - one);
  REQUIRE_FALSE(univariate_squarefree(sq));
  auto g = univariate_gcd(f, sq);
  REQUIRE(g == t - one);  // monic
  auto x0 = Poly<PrimeField>::variable(R, 0);
  REQUIRE_THROWS_AS(univariate_coeffs(x0 * t), NotUnivariate);
}

TEST_CASE("canonical text round-trip is bit-exact") {
  std::mt19937_64 rng(2024);
  Ring<PrimeField> Rp(PrimeField(31), 4);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = rnd_poly(Rp, rng, 5, 10);
    auto text = poly_to_text(f);
    auto back = parse_poly(Rp, text, 1);
    REQUIRE(back == f);
    REQUIRE(poly_to_text(back) == text);
  }
  Ring<RationalField> Rq(RationalField{}, 3);
  for (int trial = 0; trial < 100; ++trial) {
    auto f0 = rnd_poly(Rq, rng, 4, 6);
    auto f = f0.is_zero() ? f0 : f0.div_scalar(mpq_class(3));
    auto text = poly_to_text(f);
    REQUIRE(parse_poly(Rq, text, 1) == f);
  }
}

TEST_CASE("ring mismatch is detected") {
  Ring<PrimeField> A(PrimeField(7), 2), B(PrimeField(11), 2);
  auto fa = Poly<PrimeField>::variable(A, 0);
  auto fb = Poly<PrimeField>::variable(B, 0);
  REQUIRE_THROWS_AS(fa + fb, RingMismatch);
  REQUIRE_THROWS_AS(fa * fb, RingMismatch);
}

TEST_CASE("monomial orders are total and multiplicative") {
  std::mt19937_64 rng(77);
  for (auto kind : {OrderKind::Grevlex, OrderKind::Lex}) {
    Ring<PrimeField> R(PrimeField(7), 5, MonomialOrder{kind, 0});
    for (int trial = 0; trial < 300; ++trial) {
      Monomial a, b, c;
      for (int i = 0; i < 5; ++i) {
        a.e[i] = rng() % 4; b.e[i] = rng() % 4; c.e[i] = rng() % 4;
        a.deg += a.e[i]; b.deg += b.e[i]; c.deg += c.e[i];
      }
      int ab = R.cmp(a, b);
      REQUIRE(R.cmp(b, a) == -ab);
      if (ab == 0) REQUIRE(a == b);
      // compatibility with multiplication
      REQUIRE(R.cmp(a * c, b * c) == ab);
    }
  }
}
