#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "certalg/heisenberg.hpp"
#include "certalg/poly_io.hpp"

using namespace certalg;

namespace {

HeisenbergContext<PrimeField> make_ctx(int d, uint64_t p) {
  FieldSpec<PrimeField> fs{PrimeField(p)};
  return HeisenbergContext<PrimeField>(d, fs);
}

}  // namespace

TEST_CASE("schrodinger matrices at level 2") {
  auto ctx = make_ctx(2, 7);
  auto [sigma, tau, iota] = schrodinger_matrices(ctx);
  // sigma = [[0,1],[1,0]], tau = diag(1,-1), iota = identity
  REQUIRE(sigma.at(0, 1) == 1);
  REQUIRE(sigma.at(1, 0) == 1);
  REQUIRE(sigma.at(0, 0) == 0);
  REQUIRE(tau.at(0, 0) == 1);
  REQUIRE(tau.at(1, 1) == 6);
  REQUIRE(iota == DenseMatrix<PrimeField>::identity(ctx.field(), 2));
}

TEST_CASE("commutation relation tau sigma = zeta sigma tau") {
  for (auto [d, p] : std::vector<std::pair<int, uint64_t>>{{5, 11}, {12, 13}, {16, 17}, {18, 19}}) {
    auto ctx = make_ctx(d, p);
    auto [sigma, tau, iota] = schrodinger_matrices(ctx);
    REQUIRE(tau * sigma == (sigma * tau).scaled(ctx.zeta()));
    REQUIRE(iota * sigma * iota == sigma.inverse());
    REQUIRE(iota * tau * iota == tau.inverse());
    REQUIRE(iota * iota == DenseMatrix<PrimeField>::identity(ctx.field(), static_cast<size_t>(d)));
  }
}

TEST_CASE("group law matches matrix products including scalars") {
  std::mt19937_64 rng(11);
  auto ctx = make_ctx(12, 13);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = group_element(ctx, static_cast<long long>(rng() % 12),
                           static_cast<long long>(rng() % 12), rng() % 2 == 0);
    auto h = group_element(ctx, static_cast<long long>(rng() % 12),
                           static_cast<long long>(rng() % 12), rng() % 2 == 0);
    auto gh = compose(ctx, g, h);
    REQUIRE(group_matrix(ctx, gh) == group_matrix(ctx, g) * group_matrix(ctx, h));
  }
}

TEST_CASE("actions on polynomials") {
  auto ctx = make_ctx(5, 11);
  const auto& R = ctx.ring();
  auto x = [&](int i) { return Poly<PrimeField>::variable(R, ctx.wrap(i)); };

  auto prod = x(0) * x(1) * x(2) * x(3) * x(4);
  REQUIRE(act_on_poly(ctx, sigma_elem(ctx), prod) == prod);

  // gamma_1 = sum_i x_i x_{i+2}^2 x_{i+3}^2 is tau-invariant
  Poly<PrimeField> gamma1 = Poly<PrimeField>::zero(R);
  for (int i = 0; i < 5; ++i) gamma1 = gamma1 + x(i) * x(i + 2).pow(2) * x(i + 3).pow(2);
  REQUIRE(act_on_poly(ctx, tau_elem(ctx), gamma1) == gamma1);
  REQUIRE(act_on_poly(ctx, sigma_elem(ctx), gamma1) == gamma1);

  // algebra automorphism on random samples
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = group_element(ctx, static_cast<long long>(rng() % 5),
                           static_cast<long long>(rng() % 5), rng() % 2 == 0);
    std::vector<typename Poly<PrimeField>::Term> ts;
    for (int t = 0; t < 4; ++t) {
      Monomial m;
      for (int k = 0; k < 3; ++k) {
        int v = static_cast<int>(rng() % 5);
        m.e[v]++;
        m.deg++;
      }
      ts.emplace_back(m, 1 + rng() % 10);
    }
    auto f = Poly<PrimeField>::from_terms(R, ts);
    auto h = x(static_cast<int>(rng() % 5)) + Poly<PrimeField>::from_int(R, 1 + static_cast<long long>(rng() % 7));
    REQUIRE(act_on_poly(ctx, g, f * h) ==
            act_on_poly(ctx, g, f) * act_on_poly(ctx, g, h));
  }
}

TEST_CASE("point action is dual to the function action") {
  auto ctx = make_ctx(5, 11);
  std::mt19937_64 rng(17);
  const auto& R = ctx.ring();
  for (int trial = 0; trial < 50; ++trial) {
    auto g = group_element(ctx, static_cast<long long>(rng() % 5),
                           static_cast<long long>(rng() % 5), rng() % 2 == 0);
    std::vector<uint64_t> p;
    for (int i = 0; i < 5; ++i) p.push_back(rng() % 11);
    auto f = Poly<PrimeField>::variable(R, static_cast<int>(rng() % 5)) *
             Poly<PrimeField>::variable(R, static_cast<int>(rng() % 5));
    REQUIRE(act_on_poly(ctx, g, f).evaluate(p) == f.evaluate(point_act(ctx, g, p)));
  }
}

TEST_CASE("weil pairing") {
  auto ctx = make_ctx(12, 13);
  REQUIRE(weil_pairing(ctx, {1, 0}, {0, 1}) == ctx.field().inv(ctx.zeta()));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::pair<long long, long long> v{static_cast<long long>(rng() % 12), static_cast<long long>(rng() % 12)};
    std::pair<long long, long long> w{static_cast<long long>(rng() % 12), static_cast<long long>(rng() % 12)};
    std::pair<long long, long long> v2{static_cast<long long>(rng() % 12), static_cast<long long>(rng() % 12)};
    REQUIRE(weil_pairing(ctx, v, v) == 1);
    // bilinearity
    std::pair<long long, long long> sum{v.first + v2.first, v.second + v2.second};
    REQUIRE(weil_pairing(ctx, sum, w) ==
            ctx.field().mul(weil_pairing(ctx, v, w), weil_pairing(ctx, v2, w)));
  }
}

TEST_CASE("minus chart shape and involution") {
  auto ctx12 = make_ctx(12, 13);
  auto chart12 = minus_chart(ctx12);
  REQUIRE(chart12.chart_ring.nvars == 5);
  REQUIRE(chart12.embedding.coords[0].is_zero());
  REQUIRE(chart12.embedding.coords[6].is_zero());
  for (int i = 1; i < 6; ++i)
    REQUIRE(chart12.embedding.coords[static_cast<size_t>(12 - i)] ==
            -chart12.embedding.coords[static_cast<size_t>(i)]);

  auto ctx14 = make_ctx(14, 29);
  REQUIRE(minus_chart(ctx14).chart_ring.nvars == 6);

  auto ctx5 = make_ctx(5, 11);
  REQUIRE_THROWS_AS(minus_chart(ctx5), OddLevel);

  // iota fixes the chart image up to the global sign
  auto emb = chart12.embedding.coords;
  auto flipped = point_act(ctx12, iota_elem(ctx12), emb);
  for (size_t k = 0; k < emb.size(); ++k) REQUIRE(flipped[k] == -emb[k]);
}

TEST_CASE("GL_H families satisfy the defining constraints") {
  std::mt19937_64 rng(29);
  for (auto [level, p] : std::vector<std::pair<int, uint64_t>>{{14, 29}, {16, 17}}) {
    auto ctx = make_ctx(level, p);
    auto iota = group_matrix(ctx, iota_elem(ctx));
    for (int trial = 0; trial < 40; ++trial) {
      auto rnd = [&]() { return 1 + rng() % (p - 1); };
      DenseMatrix<PrimeField> t =
          trial % 2 == 0 ? glh_case_diag(ctx, rnd(), rnd(), trial % 4 == 2)
                         : glh_case_twok(ctx, rnd(), rnd(), rnd(), rnd());
      LevelSubgroup h = trial % 2 == 0 ? LevelSubgroup::SigmaSqTau : LevelSubgroup::TwoK;
      if (t.det() == 0) continue;
      REQUIRE(t * iota == iota * t);
      for (const auto& g : level_subgroup_generators(ctx, h)) {
        typename PrimeField::Elem c = 0;
        REQUIRE(commutator(t, group_matrix(ctx, g)).is_scalar(&c));
        REQUIRE(c != 0);
      }
      REQUIRE(glh_member(ctx, t, h));
    }
  }
}

TEST_CASE("glh normal form") {
  auto ctx = make_ctx(16, 17);
  auto t = glh_case_diag(ctx, 3, 5, false);
  auto nf = glh_normal_form(ctx, t, LevelSubgroup::SigmaSqTau);
  REQUIRE(nf.a == 0);
  REQUIRE(nf.b == 0);
  REQUIRE(nf.t_prime == t);

  // tau * diag strips back to a member of GL_H
  auto tau = group_matrix(ctx, tau_elem(ctx));
  auto twisted = tau * t;
  auto nf2 = glh_normal_form(ctx, twisted, LevelSubgroup::SigmaSqTau);
  REQUIRE(glh_member(ctx, nf2.t_prime, LevelSubgroup::SigmaSqTau));

  // a generic matrix fails the normalizer precondition
  DenseMatrix<PrimeField> bad(ctx.field(), 16, 16);
  std::mt19937_64 rng(123);
  for (size_t i = 0; i < 16; ++i)
    for (size_t j = 0; j < 16; ++j) bad.at(i, j) = rng() % 17;
  REQUIRE_THROWS_AS(glh_normal_form(ctx, bad, LevelSubgroup::SigmaSqTau), NotInNormalizerClass);
}

TEST_CASE("level stabilizer counts") {
  REQUIRE(count_level_stabilizer(8, LevelSubgroup::TwoK) == 32);
  REQUIRE(count_level_stabilizer(8, LevelSubgroup::FullK) == 4);
  // frozen regression constant from exhaustive enumeration over SL_2(Z_14)
  REQUIRE(count_level_stabilizer(7, LevelSubgroup::SigmaSqTau) == 8);
}
