#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "certalg/groebner.hpp"
#include "certalg/monomial.hpp"

namespace certalg {

namespace detail {

using ZPoly = std::vector<long long>;  // coefficient k = coefficient of t^k

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

inline void zp_add_shifted(ZPoly& a, const ZPoly& b, size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Keep only minimal elements under divisibility.
inline void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& kept : out) {
      if (m.divisible_by(kept)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  gens.swap(out);
}

// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of R/(gens), for a
// monomial ideal given by (not necessarily minimal) generators. Standard
// pivot-variable recursion with a pairwise-coprime base case and splitting
// into variable-disjoint blocks.
inline ZPoly hilbert_numerator(std::vector<Monomial> gens) {
  minimalize(gens);
  if (gens.empty()) return {1};
  if (gens[0].deg == 0) return {};  // unit ideal: series 0

  // split into groups with disjoint variable support
  {
    std::vector<int> comp(Monomial::kMaxVars, -1);
    int ncomp = 0;
    std::vector<int> gcomp(gens.size(), -1);
    // union-find over variables, one pass per generator
    std::vector<int> parent(Monomial::kMaxVars);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : gens) {
      int first = -1;
      for (int v = 0; v < Monomial::kMaxVars; ++v) {
        if (g.e[v] == 0) continue;
        if (first < 0) first = v;
        parent[find(v)] = find(first);
      }
    }
    for (size_t i = 0; i < gens.size(); ++i) {
      for (int v = 0; v < Monomial::kMaxVars; ++v) {
        if (gens[i].e[v]) {
          int root = find(v);
          if (comp[root] < 0) comp[root] = ncomp++;
          gcomp[i] = comp[root];
          break;
        }
      }
    }
    if (ncomp > 1) {
      ZPoly acc{1};
      for (int c = 0; c < ncomp; ++c) {
        std::vector<Monomial> part;
        for (size_t i = 0; i < gens.size(); ++i)
          if (gcomp[i] == c) part.push_back(gens[i]);
        acc = zp_mul(acc, hilbert_numerator(std::move(part)));
      }
      return acc;
    }
  }

  bool pairwise_coprime = true;
  for (size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime_with(gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    ZPoly acc{1};
    for (const auto& g : gens) {
      ZPoly f(g.deg + 1, 0);
      f[0] = 1;
      f[g.deg] = -1;
      acc = zp_mul(acc, f);
    }
    return acc;
  }

  // pivot: variable occurring in the most generators
  int pivot = -1, best = 0;
  for (int v = 0; v < Monomial::kMaxVars; ++v) {
    int cnt = 0;
    for (const auto& g : gens)
      if (g.e[v]) ++cnt;
    if (cnt > best) {
      best = cnt;
      pivot = v;
    }
  }

  // I + (x_v): generators not involving v, plus x_v itself
  std::vector<Monomial> plus;
  for (const auto& g : gens)
    if (g.e[pivot] == 0) plus.push_back(g);
  plus.push_back(Monomial::var(pivot));

  // I : x_v: divide each generator by x_v where possible
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial h = g;
    if (h.e[pivot] > 0) {
      h.e[pivot] -= 1;
      h.deg -= 1;
    }
    colon.push_back(h);
  }

  ZPoly n = hilbert_numerator(std::move(plus));
  zp_add_shifted(n, hilbert_numerator(std::move(colon)), 1);
  return n;
}

}  // namespace detail

// Hilbert series numerator, Hilbert polynomial, projective dimension and
// degree of a homogeneous ideal, all read off the leading-term ideal.
struct HilbertData {
  int nvars = 0;
  std::vector<long long> numerator;          // N(t) over (1-t)^nvars
  std::vector<long long> reduced_numerator;  // N(t)/(1-t)^strips
  int krull_dim = 0;                         // dimension of the affine cone
  int proj_dim = -1;                         // -1 for the empty scheme
  long long degree = 0;                      // 0 for the empty scheme
  std::vector<mpq_class> hilbert_poly;       // coefficient k = coeff of t^k

  // Hilbert function of R/I in degree j, exact (from the full numerator).
  mpz_class hilbert_function(long long j) const {
    mpz_class acc = 0;
    for (size_t k = 0; k < numerator.size(); ++k) {
      long long d = j - static_cast<long long>(k);
      if (d < 0) continue;
      // C(d + nvars - 1, nvars - 1)
      mpz_class b = 1;
      for (int i = 1; i <= nvars - 1; ++i) {
        b *= static_cast<long>(d + i);
        b /= i;
      }
      acc += mpz_class(static_cast<long>(numerator[k])) * b;
    }
    return acc;
  }

  mpq_class hilbert_poly_at(long long t) const {
    mpq_class acc = 0, pw = 1;
    for (const auto& c : hilbert_poly) {
      acc += c * pw;
      pw *= static_cast<long>(t);
    }
    return acc;
  }

  std::string poly_str() const {
    if (hilbert_poly.empty()) return "0";
    std::string s;
    for (size_t k = hilbert_poly.size(); k-- > 0;) {
      if (hilbert_poly[k] == 0) continue;
      if (!s.empty()) s += " + ";
      s += hilbert_poly[k].get_str();
      if (k >= 1) s += "*t";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
  }
};

inline HilbertData hilbert_from_leading_terms(std::vector<Monomial> lts, int nvars) {
  HilbertData h;
  h.nvars = nvars;
  h.numerator = detail::hilbert_numerator(std::move(lts));

  // strip factors of (1-t): numerator(1) == 0 while divisible
  h.reduced_numerator = h.numerator;
  int strips = 0;
  auto value_at_one = [](const detail::ZPoly& p) {
    long long s = 0;
    for (long long c : p) s += c;
    return s;
  };
  while (!h.reduced_numerator.empty() && value_at_one(h.reduced_numerator) == 0) {
    // divide by (1-t): if p = (1-t) q then q_k = sum_{i<=k} p_i
    detail::ZPoly q(h.reduced_numerator.size() - 1, 0);
    long long run = 0;
    for (size_t k = 0; k + 1 < h.reduced_numerator.size(); ++k) {
      run += h.reduced_numerator[k];
      q[k] = run;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    h.reduced_numerator = std::move(q);
    ++strips;
  }

  h.krull_dim = h.numerator.empty() ? 0 : nvars - strips;
  h.proj_dim = h.krull_dim - 1;
  if (h.proj_dim < 0) {
    h.degree = 0;
    return h;
  }
  h.degree = value_at_one(h.reduced_numerator);

  // P(t) = sum_k reduced_k * C(t - k + D - 1, D - 1) with D = krull_dim
  const int D = h.krull_dim;
  h.hilbert_poly.assign(static_cast<size_t>(D), mpq_class(0));
  for (size_t k = 0; k < h.reduced_numerator.size(); ++k) {
    if (h.reduced_numerator[k] == 0) continue;
    // expand C(t + a, m) with a = D - 1 - k, m = D - 1
    const int m = D - 1;
    const long long a = static_cast<long long>(D) - 1 - static_cast<long long>(k);
    std::vector<mpq_class> prod{mpq_class(1)};
    for (int i = 1; i <= m; ++i) {
      // multiply by (t + a - m + i)
      std::vector<mpq_class> next(prod.size() + 1, mpq_class(0));
      const mpq_class shift(static_cast<long>(a - m + i));
      for (size_t d = 0; d < prod.size(); ++d) {
        next[d] += prod[d] * shift;
        next[d + 1] += prod[d];
      }
      prod = std::move(next);
    }
    mpz_class mfact = 1;
    for (int i = 2; i <= m; ++i) mfact *= i;
    for (size_t d = 0; d < prod.size(); ++d)
      h.hilbert_poly[d] += prod[d] * mpq_class(static_cast<long>(h.reduced_numerator[k])) / mpq_class(mfact);
  }
  while (!h.hilbert_poly.empty() && h.hilbert_poly.back() == 0) h.hilbert_poly.pop_back();
  return h;
}

// Dimension and degree of the projective scheme cut out by a homogeneous
// ideal, via the reduced Groebner basis' leading terms.
template <class K>
HilbertData dimension_and_degree(const GroebnerBasis<K>& gb) {
  for (const auto& p : gb.polys())
    if (!p.is_homogeneous()) throw Error("hilbert data requires a homogeneous ideal");
  return hilbert_from_leading_terms(gb.leading_monomials(), gb.ring().nvars);
}

}  // namespace certalg
