#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "certalg/groebner.hpp"
#include "certalg/hilbert.hpp"
#include "certalg/matrix.hpp"

using namespace certalg;

namespace {

template <class K>
Poly<K> rnd_poly(const Ring<K>& R, std::mt19937_64& rng, int deg, int maxterms) {
  std::vector<typename Poly<K>::Term> ts;
  int nt = 1 + rng() % maxterms;
  for (int t = 0; t < nt; ++t) {
    Monomial m;
    for (int k = 0; k < deg; ++k) {
      int v = rng() % R.nvars;
      m.e[v]++;
      m.deg++;
    }
    ts.emplace_back(m, R.field.from_int(1 + static_cast<long long>(rng() % 11)));
  }
  return Poly<K>::from_terms(R, std::move(ts));
}

// Independent oracle: dimension of the degree-t graded piece of R/I by plain
// linear algebra over the coefficient field (no Groebner machinery).
template <class K>
long long graded_quotient_dim(const Ideal<K>& I, int t) {
  const Ring<K>& R = I.ring;
  // enumerate monomials of degree t in nvars variables
  std::vector<Monomial> monos;
  std::vector<int> stack(R.nvars, 0);
  std::function<void(int, int)> gen = [&](int var, int left) {
    if (var == R.nvars - 1) {
      Monomial m;
      for (int i = 0; i < R.nvars - 1; ++i) {
        m.e[i] = static_cast<uint8_t>(stack[i]);
      }
      m.e[R.nvars - 1] = static_cast<uint8_t>(left);
      m.deg = static_cast<uint32_t>(t);
      monos.push_back(m);
      return;
    }
    for (int ei = 0; ei <= left; ++ei) {
      stack[var] = ei;
      gen(var + 1, left - ei);
    }
  };
  if (R.nvars == 0) return t == 0 ? 1 : 0;
  gen(0, t);
  std::map<uint64_t, size_t> index;
  for (size_t i = 0; i < monos.size(); ++i) index[monos[i].hash()] = i;

  std::vector<std::vector<typename K::Elem>> rows;
  for (const auto& g : I.gens) {
    const int gd = static_cast<int>(g.degree());
    if (!g.is_homogeneous() || gd > t) continue;
    // multiply by all monomials of degree t - gd
    std::vector<Monomial> mults;
    std::vector<int> st(R.nvars, 0);
    std::function<void(int, int)> gen2 = [&](int var, int left) {
      if (var == R.nvars - 1) {
        Monomial m;
        for (int i = 0; i < R.nvars - 1; ++i) m.e[i] = static_cast<uint8_t>(st[i]);
        m.e[R.nvars - 1] = static_cast<uint8_t>(left);
        m.deg = static_cast<uint32_t>(t - gd);
        mults.push_back(m);
        return;
      }
      for (int ei = 0; ei <= left; ++ei) {
        st[var] = ei;
        gen2(var + 1, left - ei);
      }
    };
    gen2(0, t - gd);
    for (const auto& mu : mults) {
      std::vector<typename K::Elem> row(monos.size(), R.field.zero());
      for (const auto& [m, c] : g.terms()) row[index.at((m * mu).hash())] = c;
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return static_cast<long long>(monos.size());
  DenseMatrix<K> mat(R.field, rows.size(), monos.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < monos.size(); ++j) mat.at(i, j) = rows[i][j];
  return static_cast<long long>(monos.size()) - static_cast<long long>(mat.rank());
}

}  // namespace

TEST_CASE("groebner basis of simple ideals") {
  Ring<PrimeField> R(PrimeField(7), 2);
  auto x0 = Poly<PrimeField>::variable(R, 0);
  auto x1 = Poly<PrimeField>::variable(R, 1);

  auto gb = buchberger(Ideal<PrimeField>(R, {x0, x1}));
  REQUIRE(gb.polys().size() == 2);
  REQUIRE(gb.polys()[0] == x0);
  REQUIRE(gb.polys()[1] == x1);

  auto gb2 = buchberger(Ideal<PrimeField>(R, {x0 * x0 - x1, x1}));
  REQUIRE(gb2.polys().size() == 2);
  REQUIRE(gb2.polys()[0] == x0 * x0);
  REQUIRE(gb2.polys()[1] == x1);
}

TEST_CASE("normal forms") {
  Ring<PrimeField> R(PrimeField(13), 3);
  std::mt19937_64 rng(1);
  std::vector<Poly<PrimeField>> gens;
  for (int i = 0; i < 3; ++i) gens.push_back(rnd_poly(R, rng, 2, 4));
  Ideal<PrimeField> I(R, gens);
  auto gb = buchberger(I);
  for (const auto& g : I.gens) REQUIRE(gb.normal_form(g).is_zero());

  // the irrelevant ideal contains no constants
  std::vector<Poly<PrimeField>> vars;
  for (int i = 0; i < 3; ++i) vars.push_back(Poly<PrimeField>::variable(R, i));
  auto gbv = buchberger(Ideal<PrimeField>(R, vars));
  auto one = Poly<PrimeField>::from_int(R, 1);
  REQUIRE(gbv.normal_form(one) == one);
}

TEST_CASE("ideal equality") {
  Ring<RationalField> R(RationalField{}, 2);
  auto x0 = Poly<RationalField>::variable(R, 0);
  auto x1 = Poly<RationalField>::variable(R, 1);
  REQUIRE(ideal_equal(Ideal<RationalField>(R, {x0, x1}),
                      Ideal<RationalField>(R, {x1, x0 + x1})));
  REQUIRE_FALSE(ideal_equal(Ideal<RationalField>(R, {x0 * x0}),
                            Ideal<RationalField>(R, {x0})));
}

TEST_CASE("twisted cubic: dimension, degree, hilbert polynomial") {
  Ring<PrimeField> R(PrimeField(31), 4);
  auto x = [&](int i) { return Poly<PrimeField>::variable(R, i); };
  Ideal<PrimeField> I(R, {x(0) * x(2) - x(1) * x(1), x(0) * x(3) - x(1) * x(2),
                          x(1) * x(3) - x(2) * x(2)});
  // brute-force oracle: graded dimensions 1, 4, 7, 10, 13, 16, 19 for t=0..6
  for (int t = 0; t <= 6; ++t) {
    long long expect = t == 0 ? 1 : 3 * t + 1;
    REQUIRE(graded_quotient_dim(I, t) == expect);
  }
  auto gb = buchberger(I);
  auto h = dimension_and_degree(gb);
  REQUIRE(h.proj_dim == 1);
  REQUIRE(h.degree == 3);
  REQUIRE(h.poly_str() == "3*t + 1");
  for (int t = 0; t <= 6; ++t)
    REQUIRE(h.hilbert_function(t) == mpz_class(static_cast<long>(graded_quotient_dim(I, t))));
}

TEST_CASE("full ring hilbert data") {
  auto h = hilbert_from_leading_terms({}, 4);  // P^3
  REQUIRE(h.proj_dim == 3);
  REQUIRE(h.degree == 1);
  // P(t) = C(t+3,3)
  REQUIRE(h.hilbert_poly_at(5) == mpq_class(56));
}

TEST_CASE("empty scheme reported as dimension -1, degree 0") {
  Ring<PrimeField> R(PrimeField(7), 3);
  std::vector<Poly<PrimeField>> vars;
  for (int i = 0; i < 3; ++i) vars.push_back(Poly<PrimeField>::variable(R, i));
  auto h = dimension_and_degree(buchberger(Ideal<PrimeField>(R, vars)));
  REQUIRE(h.proj_dim == -1);
  REQUIRE(h.degree == 0);
}

TEST_CASE("smooth conic has empty jacobian scheme") {
  Ring<PrimeField> R(PrimeField(101), 3);
  auto x = [&](int i) { return Poly<PrimeField>::variable(R, i); };
  auto f = x(0) * x(0) + x(1) * x(1) + x(2) * x(2);
  auto J = jacobian_ideal(f);
  auto h = dimension_and_degree(buchberger(J));
  REQUIRE(h.proj_dim == -1);
}

TEST_CASE("reduced basis is canonical under generator shuffles") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 25; ++trial) {
    Ring<PrimeField> R(PrimeField(31), 3);
    std::vector<Poly<PrimeField>> gens;
    int ng = 2 + rng() % 3;
    for (int i = 0; i < ng; ++i) gens.push_back(rnd_poly(R, rng, 2 + rng() % 2, 4));
    auto gb1 = buchberger(Ideal<PrimeField>(R, gens));
    std::shuffle(gens.begin(), gens.end(), rng);
    auto gb2 = buchberger(Ideal<PrimeField>(R, gens));
    REQUIRE(gb1.polys() == gb2.polys());
  }
}

TEST_CASE("buchberger criterion holds post-hoc") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 10; ++trial) {
    Ring<PrimeField> R(PrimeField(13), 3);
    std::vector<Poly<PrimeField>> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(rnd_poly(R, rng, 2, 3));
    auto gb = buchberger(Ideal<PrimeField>(R, gens));
    REQUIRE(all_spolys_reduce_to_zero(gb));
  }
}

TEST_CASE("membership of random combinations") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    Ring<PrimeField> R(PrimeField(31), 3);
    std::vector<Poly<PrimeField>> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(rnd_poly(R, rng, 2, 3));
    Ideal<PrimeField> I(R, gens);
    auto gb = buchberger(I);
    Poly<PrimeField> f = Poly<PrimeField>::zero(R);
    for (const auto& g : I.gens) f = f + rnd_poly(R, rng, 2, 3) * g;
    REQUIRE(gb.normal_form(f).is_zero());
  }
}

TEST_CASE("hilbert function matches brute force on random ideals") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 15; ++trial) {
    int nv = 3 + rng() % 4;  // up to 6 variables
    Ring<PrimeField> R(PrimeField(13), nv);
    std::vector<Poly<PrimeField>> gens;
    int ng = 1 + rng() % 3;
    for (int i = 0; i < ng; ++i) {
      int d = 1 + rng() % 3;
      auto g = rnd_poly(R, rng, d, 4).homogeneous_component(d);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Ideal<PrimeField> I(R, gens);
    auto h = dimension_and_degree(buchberger(I));
    for (int t = 0; t <= 5; ++t)
      REQUIRE(h.hilbert_function(t) == mpz_class(static_cast<long>(graded_quotient_dim(I, t))));
  }
}

TEST_CASE("timeout is reported, never silently truncated") {
  Ring<PrimeField> R(PrimeField(31), 5);
  std::mt19937_64 rng(5);
  std::vector<Poly<PrimeField>> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(rnd_poly(R, rng, 3, 6));
  GBOptions opts;
  opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  REQUIRE_THROWS_AS(buchberger(Ideal<PrimeField>(R, gens), opts), Timeout);
}
