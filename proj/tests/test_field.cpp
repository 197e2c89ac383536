#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "certalg/field.hpp"
#include "certalg/matrix.hpp"

using namespace certalg;

TEST_CASE("prime field inverses") {
  PrimeField F7(7);
  REQUIRE(F7.inv(3) == 5);  // 3*5 = 15 = 1 mod 7
  PrimeField F11(11);
  REQUIRE(F11.inv(1) == 1);
  REQUIRE_THROWS_AS(F7.inv(0), ZeroInverse);
}

TEST_CASE("prime field rejects bad characteristics") {
  REQUIRE_THROWS_AS(PrimeField(2), InvalidConfig);
  REQUIRE_THROWS_AS(PrimeField(9), InvalidConfig);
  REQUIRE_NOTHROW(PrimeField(101));
}

TEST_CASE("designated roots of unity") {
  PrimeField F11(11);
  REQUIRE(F11.root_of_unity(5) == 3);  // 3,9,5,4,1 cycles with period 5
  PrimeField F7(7);
  REQUIRE(F7.root_of_unity(2) == 6);
  REQUIRE_THROWS_AS(F7.root_of_unity(16), NoSuchRoot);  // 16 does not divide 6
}

TEST_CASE("stored roots have exact order") {
  for (uint64_t p : {11ull, 13ull, 31ull, 41ull, 61ull}) {
    PrimeField F(p);
    for (uint64_t n = 1; n <= p - 1; ++n) {
      if ((p - 1) % n != 0) continue;
      auto z = F.root_of_unity(n);
      REQUIRE(F.has_exact_order(z, n));
      // exponentiation over all divisors of n stays != 1 below n
      for (uint64_t m = 1; m < n; ++m)
        if (n % m == 0) REQUIRE(powmod_u64(z, m, p) != 1);
    }
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(20240811);
  PrimeField F(101);
  for (int trial = 0; trial < 500; ++trial) {
    uint64_t a = rng() % 101, b = rng() % 101, c = rng() % 101;
    REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
    REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    if (a != 0) REQUIRE(F.mul(a, F.inv(a)) == 1);
  }
  RationalField Q;
  for (int trial = 0; trial < 100; ++trial) {
    auto q = [&](long long n) {
      mpq_class v(static_cast<long>(n % 50), static_cast<long>(1 + n % 7));
      v.canonicalize();
      return v;
    };
    auto a = q(rng() % 1000), b = q(rng() % 1000), c = q(rng() % 1000);
    REQUIRE(Q.add(Q.add(a, b), c) == Q.add(a, Q.add(b, c)));
    REQUIRE(Q.mul(a, Q.add(b, c)) == Q.add(Q.mul(a, b), Q.mul(a, c)));
    if (a != 0) REQUIRE(Q.mul(a, Q.inv(a)) == 1);
  }
}

TEST_CASE("rational field canonical forms") {
  RationalField Q;
  auto v = Q.parse("6/4");
  REQUIRE(Q.str(v) == "3/2");
  REQUIRE(Q.str(Q.parse("-10/5")) == "-2");
}

TEST_CASE("kernel of the identity is empty") {
  PrimeField F(7);
  auto id = DenseMatrix<PrimeField>::identity(F, 3);
  REQUIRE(id.kernel().empty());
  REQUIRE(id.rank() == 3);
}

TEST_CASE("kernel of an all-ones specialization") {
  // the 2x3 matrix with rows (x5,x3,x1),(x2,x4,x6) at x = (1,...,1)
  PrimeField F(11);
  DenseMatrix<PrimeField> m(F, 2, 3);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 3; ++j) m.at(i, j) = 1;
  REQUIRE(m.rank() == 1);
  auto ker = m.kernel();
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    auto mv = m.apply(v);
    for (const auto& x : mv) REQUIRE(x == 0);
  }
}

TEST_CASE("rank-nullity and kernel properties on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    PrimeField F(trial % 2 ? 13 : 101);
    size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    DenseMatrix<PrimeField> m(F, r, c);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < c; ++j) m.at(i, j) = rng() % F.p();
    auto ker = m.kernel();
    REQUIRE(m.rank() + ker.size() == c);
    for (const auto& v : ker) {
      for (const auto& x : m.apply(v)) REQUIRE(x == 0);
    }
    // returned vectors are linearly independent: stack them and check rank
    if (!ker.empty()) {
      DenseMatrix<PrimeField> km(F, ker.size(), c);
      for (size_t i = 0; i < ker.size(); ++i)
        for (size_t j = 0; j < c; ++j) km.at(i, j) = ker[i][j];
      REQUIRE(km.rank() == ker.size());
    }
  }
}

TEST_CASE("determinant and inverse") {
  PrimeField F(13);
  DenseMatrix<PrimeField> m(F, 3, 3);
  uint64_t vals[3][3] = {{2, 1, 0}, {0, 3, 1}, {1, 0, 4}};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
  // det = 2*(12-0) - 1*(0-1) + 0 = 25 = 12 mod 13
  REQUIRE(m.det() == 12);
  auto prod = m * m.inverse();
  REQUIRE(prod == DenseMatrix<PrimeField>::identity(F, 3));
}
