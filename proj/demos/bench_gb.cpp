// Stress benchmark: Hilbert polynomial of the level-18 degeneration ideal
// (126 sub-pfaffian quadrics in 18 variables over F_11).
#include <chrono>
#include <iostream>

#include "certalg/groebner.hpp"
#include "certalg/hilbert.hpp"
#include "certalg/moore.hpp"

using namespace certalg;

int main() {
  using F = PrimeField;
  F field(11);
  Ring<F> R(field, 18);

  // point on the plane quartic 2*x0*x2*(x0^2+x2^2) - 2*x1^3*(x0+x2) mod 11
  const long long c0 = 5, c1 = 6, c2 = 1;
  std::vector<long long> z = {0,  c2, -c2, 0, c1, -c1, 0, c0, -c0,
                              0, c0, -c0, 0, c1, -c1, 0, c2, -c2};

  // first argument: sigma*tau^9 applied to the coordinates, x_k -> (-1)^k x_{k-1}
  std::vector<Poly<F>> xs, ys;
  for (int k = 0; k < 18; ++k) {
    auto img = Poly<F>::variable(R, ((k - 1) % 18 + 18) % 18);
    xs.push_back(k % 2 == 0 ? img : -img);
    ys.push_back(Poly<F>::from_int(R, z[static_cast<size_t>(k)]));
  }
  auto M = moore_even(9, xs, ys);
  if (!M.check_skew()) {
    std::cerr << "expected a skew matrix\n";
    return 1;
  }
  auto pfs = sub_pfaffians(M, 4);
  std::vector<Poly<F>> gens;
  for (auto& [idx, p] : pfs)
    if (!p.is_zero()) gens.push_back(p);
  std::cout << "generators: " << gens.size() << " (of " << pfs.size() << ")\n";

  auto t0 = std::chrono::steady_clock::now();
  auto gb = buchberger(Ideal<F>(R, gens));
  auto t1 = std::chrono::steady_clock::now();
  std::cout << "basis size: " << gb.polys().size() << "\n";
  std::cout << "gb millis: "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << "\n";
  auto h = dimension_and_degree(gb);
  auto t2 = std::chrono::steady_clock::now();
  std::cout << "hilbert millis: "
            << std::chrono::duration_cast<std::chrono::milliseconds>(t2 - t1).count() << "\n";
  std::cout << "proj dim: " << h.proj_dim << " degree: " << h.degree
            << " P(t) = " << h.poly_str() << "\n";
  return 0;
}
