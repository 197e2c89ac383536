#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <deque>
#include <set>
#include <vector>

#include "certalg/poly.hpp"

namespace certalg {

template <class K>
struct Ideal {
  Ring<K> ring;
  std::vector<Poly<K>> gens;  // nonzero, canonical form

  Ideal() = default;
  Ideal(Ring<K> r, std::vector<Poly<K>> gs) : ring(std::move(r)) {
    for (auto& g : gs) {
      if (g.is_zero()) continue;
      if (g.ring() != ring) throw RingMismatch();
      gens.push_back(std::move(g));
    }
  }

  bool homogeneous() const {
    for (const auto& g : gens)
      if (!g.is_homogeneous()) return false;
    return true;
  }
};

struct GBOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  const char* label = "buchberger";

  void check_budget() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) throw Timeout(label);
  }
};

// Geobucket accumulator: keeps the working polynomial of a long reduction as
// a stack of sorted chunks with geometrically growing capacities, so each
// axpy costs the size of the operand instead of the whole accumulator.
template <class K>
class Geobucket {
 public:
  using Elem = typename K::Elem;
  using Term = typename Poly<K>::Term;

  explicit Geobucket(const Ring<K>& ring) : ring_(&ring) {}

  void add(const std::vector<Term>& terms) {
    if (terms.empty()) return;
    size_t i = 0;
    while (capacity(i) < terms.size()) ++i;
    ensure(i);
    merge_into(i, terms, ring_->field.one(), Monomial::one(), false);
    carry(i);
  }

  // accumulator += c * m * terms
  void add_scaled(const std::vector<Term>& terms, const Elem& c, const Monomial& m) {
    if (terms.empty() || ring_->field.is_zero(c)) return;
    size_t i = 0;
    while (capacity(i) < terms.size()) ++i;
    ensure(i);
    merge_into(i, terms, c, m, true);
    carry(i);
  }

  // Extracts the leading term across all buckets; false when empty.
  bool extract_leading(Monomial& m_out, Elem& c_out) {
    for (;;) {
      int best = -1;
      for (size_t i = 0; i < buckets_.size(); ++i) {
        if (head_[i] == buckets_[i].size()) continue;
        if (best < 0 || ring_->cmp(buckets_[i][head_[i]].first,
                                   buckets_[best][head_[best]].first) > 0)
          best = static_cast<int>(i);
      }
      if (best < 0) return false;
      const Monomial m = buckets_[best][head_[best]].first;
      Elem c = ring_->field.zero();
      for (size_t i = 0; i < buckets_.size(); ++i) {
        if (head_[i] == buckets_[i].size()) continue;
        if (buckets_[i][head_[i]].first == m) {
          c = ring_->field.add(c, buckets_[i][head_[i]].second);
          ++head_[i];
        }
      }
      if (!ring_->field.is_zero(c)) {
        m_out = m;
        c_out = std::move(c);
        return true;
      }
    }
  }

  bool empty() {
    Monomial m;
    Elem c;
    if (!extract_leading(m, c)) return true;
    push_back_term(m, c);
    return false;
  }

  Poly<K> to_poly() {
    std::vector<Term> out;
    Monomial m;
    Elem c;
    while (extract_leading(m, c)) out.emplace_back(m, std::move(c));
    Poly<K> p = Poly<K>::from_terms(*ring_, std::move(out));
    clear();
    return p;
  }

  void clear() {
    buckets_.clear();
    head_.clear();
  }

 private:
  static size_t capacity(size_t i) {
    size_t c = 4;
    while (i--) c *= 4;
    return c;
  }

  void ensure(size_t i) {
    if (buckets_.size() <= i) {
      buckets_.resize(i + 1);
      head_.resize(i + 1, 0);
    }
  }

  void push_back_term(const Monomial& m, const Elem& c) {
    ensure(0);
    // smallest spot that can take one more term at the front
    std::vector<Term> single{{m, c}};
    merge_into(0, single, ring_->field.one(), Monomial::one(), false);
    carry(0);
  }

  void merge_into(size_t i, const std::vector<Term>& terms, const Elem& c, const Monomial& m,
                  bool scaled) {
    const auto& F = ring_->field;
    std::vector<Term> merged;
    merged.reserve((buckets_[i].size() - head_[i]) + terms.size());
    size_t a = head_[i], b = 0;
    const auto& bucket = buckets_[i];
    while (a < bucket.size() && b < terms.size()) {
      Monomial tb = scaled ? terms[b].first * m : terms[b].first;
      int cmp = ring_->cmp(bucket[a].first, tb);
      if (cmp > 0) {
        merged.push_back(bucket[a++]);
      } else if (cmp < 0) {
        merged.emplace_back(tb, scaled ? F.mul(terms[b].second, c) : terms[b].second);
        ++b;
      } else {
        Elem s = F.add(bucket[a].second, scaled ? F.mul(terms[b].second, c) : terms[b].second);
        if (!F.is_zero(s)) merged.emplace_back(tb, std::move(s));
        ++a, ++b;
      }
    }
    while (a < bucket.size()) merged.push_back(bucket[a++]);
    while (b < terms.size()) {
      merged.emplace_back(scaled ? terms[b].first * m : terms[b].first,
                          scaled ? F.mul(terms[b].second, c) : terms[b].second);
      ++b;
    }
    buckets_[i] = std::move(merged);
    head_[i] = 0;
  }

  void carry(size_t i) {
    while (buckets_[i].size() - head_[i] > capacity(i)) {
      ensure(i + 1);
      std::vector<Term> spill(buckets_[i].begin() + static_cast<long>(head_[i]), buckets_[i].end());
      buckets_[i].clear();
      head_[i] = 0;
      merge_into(i + 1, spill, ring_->field.one(), Monomial::one(), false);
      ++i;
    }
  }

  const Ring<K>* ring_;
  std::vector<std::vector<Term>> buckets_;
  std::vector<size_t> head_;
};

namespace detail {

// Reducer view over a basis: leading data cached for fast divisor scans.
// Holds pointers only; the referenced polynomials must outlive the view.
template <class K>
struct BasisView {
  std::vector<const Poly<K>*> polys;
  std::vector<Monomial> lm;
  std::vector<uint32_t> mask;

  void push(const Poly<K>& p) {
    polys.push_back(&p);
    lm.push_back(p.leading_monomial());
    mask.push_back(p.leading_monomial().support_mask());
  }

  int find_divisor(const Monomial& m, uint32_t m_mask, int skip = -1) const {
    for (size_t i = 0; i < lm.size(); ++i) {
      if (static_cast<int>(i) == skip) continue;
      if (lm[i].deg > m.deg) continue;
      if (mask[i] & ~m_mask) continue;
      if (m.divisible_by(lm[i])) return static_cast<int>(i);
    }
    return -1;
  }
};

}  // namespace detail

// Remainder of f on division by the (not necessarily Groebner) family in
// `view`: no term of the result is divisible by any leading term.
template <class K>
Poly<K> reduce_full(const Poly<K>& f, const detail::BasisView<K>& view, const GBOptions& opts) {
  const Ring<K>& R = f.ring();
  const K& F = R.field;
  Geobucket<K> acc(R);
  acc.add(f.terms());
  std::vector<typename Poly<K>::Term> out;
  Monomial m;
  typename K::Elem c;
  int steps = 0;
  while (acc.extract_leading(m, c)) {
    if ((++steps & 0x3ff) == 0) opts.check_budget();
    int d = view.find_divisor(m, m.support_mask());
    if (d < 0) {
      out.emplace_back(m, std::move(c));
      continue;
    }
    const Poly<K>& g = *view.polys[d];
    const auto q = F.neg(F.div(c, g.leading_coeff()));
    const Monomial shift = m / g.leading_monomial();
    // leading term already extracted; fold in the scaled tail
    if (g.nterms() > 1) {
      std::vector<typename Poly<K>::Term> tail(g.terms().begin() + 1, g.terms().end());
      acc.add_scaled(tail, q, shift);
    }
  }
  return Poly<K>::from_terms(R, std::move(out));
}

template <class K>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(Ring<K> ring, std::vector<Poly<K>> reduced)
      : ring_(std::move(ring)), polys_(std::move(reduced)) {
    view_.emplace();
    for (const auto& p : polys_) view_->push(p);
  }
  GroebnerBasis(const GroebnerBasis& o) : GroebnerBasis(o.ring_, o.polys_) {}
  GroebnerBasis& operator=(const GroebnerBasis& o) {
    if (this != &o) *this = GroebnerBasis(o);
    return *this;
  }
  GroebnerBasis(GroebnerBasis&&) = default;
  GroebnerBasis& operator=(GroebnerBasis&&) = default;

  const Ring<K>& ring() const { return ring_; }
  const std::vector<Poly<K>>& polys() const { return polys_; }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> lm;
    lm.reserve(polys_.size());
    for (const auto& p : polys_) lm.push_back(p.leading_monomial());
    return lm;
  }

  Poly<K> normal_form(const Poly<K>& f, const GBOptions& opts = {}) const {
    if (f.ring() != ring_) throw RingMismatch();
    if (polys_.empty()) return f;
    return reduce_full(f, *view_, opts);
  }

  bool contains(const Poly<K>& f, const GBOptions& opts = {}) const {
    return normal_form(f, opts).is_zero();
  }

  bool operator==(const GroebnerBasis& o) const {
    return ring_ == o.ring_ && polys_ == o.polys_;
  }

 private:
  Ring<K> ring_;
  std::vector<Poly<K>> polys_;
  std::optional<detail::BasisView<K>> view_;
};

// Buchberger with Gebauer-Moeller pair pruning and normal (lowest
// lcm-degree first) selection. Deterministic; the returned basis is the
// unique reduced Groebner basis for the ring's order.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal, const GBOptions& opts = {}) {
  const Ring<K>& R = ideal.ring;
  const K& F = R.field;

  std::deque<Poly<K>> G;  // deque: stable references for the reducer view
  std::vector<bool> alive;  // still a candidate for new pairs / minimal basis
  detail::BasisView<K> view;

  struct Pair {
    Monomial lcm;
    uint32_t i, j;
  };
  struct PairLess {
    const Ring<K>* ring;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
      int c = ring->cmp(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    }
  };
  std::multiset<Pair, PairLess> pairs(PairLess{&R});

  auto lm = [&](uint32_t i) -> const Monomial& { return G[i].leading_monomial(); };

  auto update = [&](const Poly<K>& h) {
    const Monomial& hm = h.leading_monomial();
    const uint32_t r = static_cast<uint32_t>(G.size());

    // candidate pairs with the new element
    struct Cand {
      Monomial lcm;
      uint32_t i;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (uint32_t i = 0; i < r; ++i) {
      if (!alive[i]) continue;
      cands.push_back({Monomial::lcm(lm(i), hm), i, lm(i).coprime_with(hm)});
    }
    // Gebauer-Moeller M: drop candidates whose lcm is a proper multiple of
    // another candidate's lcm.
    for (auto& a : cands) {
      for (const auto& b : cands) {
        if (&a == &b || !b.keep) continue;
        if (a.lcm != b.lcm && a.lcm.divisible_by(b.lcm)) {
          a.keep = false;
          break;
        }
      }
    }
    // F: among equal lcms keep one, preferring to drop them all when some
    // sharer is a coprime pair. B: coprime survivors go too.
    for (size_t x = 0; x < cands.size(); ++x) {
      if (!cands[x].keep) continue;
      bool any_coprime = cands[x].coprime;
      for (size_t y = x + 1; y < cands.size(); ++y) {
        if (!cands[y].keep || cands[y].lcm != cands[x].lcm) continue;
        any_coprime = any_coprime || cands[y].coprime;
        cands[y].keep = false;
      }
      if (any_coprime) cands[x].keep = false;
    }
    // chain criterion on old pairs
    for (auto it = pairs.begin(); it != pairs.end();) {
      const Pair& p = *it;
      if (p.lcm.divisible_by(hm) && Monomial::lcm(lm(p.i), hm) != p.lcm &&
          Monomial::lcm(lm(p.j), hm) != p.lcm) {
        it = pairs.erase(it);
      } else {
        ++it;
      }
    }
    for (const auto& c : cands)
      if (c.keep) pairs.insert(Pair{c.lcm, c.i, r});
    // supersede basis elements whose leading term the new one divides
    for (uint32_t i = 0; i < r; ++i)
      if (alive[i] && lm(i).divisible_by(hm)) alive[i] = false;
    G.push_back(h);
    alive.push_back(true);
    view.push(G.back());
  };

  // seed with the generators, smallest leading terms first (deterministic)
  {
    std::vector<Poly<K>> seeds = ideal.gens;
    std::sort(seeds.begin(), seeds.end(), [&R](const Poly<K>& a, const Poly<K>& b) {
      int c = R.cmp(a.leading_monomial(), b.leading_monomial());
      if (c != 0) return c < 0;
      return a.nterms() < b.nterms();
    });
    for (auto& s : seeds) {
      Poly<K> h = G.empty() ? s : reduce_full(s, view, opts);
      if (!h.is_zero()) update(h.monic());
    }
  }

  while (!pairs.empty()) {
    opts.check_budget();
    Pair p = *pairs.begin();
    pairs.erase(pairs.begin());
    const Poly<K>& f = G[p.i];
    const Poly<K>& g = G[p.j];
    const Monomial uf = p.lcm / f.leading_monomial();
    const Monomial ug = p.lcm / g.leading_monomial();
    // S-polynomial via the bucket: uf*f/lc(f) - ug*g/lc(g)
    Geobucket<K> acc(R);
    acc.add_scaled(f.terms(), F.inv(f.leading_coeff()), uf);
    acc.add_scaled(g.terms(), F.neg(F.inv(g.leading_coeff())), ug);
    Poly<K> s = acc.to_poly();
    if (s.is_zero()) continue;
    Poly<K> h = reduce_full(s, view, opts);
    if (!h.is_zero()) update(h.monic());
  }

  // minimal basis: among the survivors, leading terms are pairwise
  // non-divisible by construction of `alive`
  std::vector<Poly<K>> minimal;
  for (size_t i = 0; i < G.size(); ++i)
    if (alive[i]) minimal.push_back(G[i]);

  // inter-reduce tails: leading terms cannot drop (they are minimal), so one
  // pass yields the reduced basis
  std::vector<Poly<K>> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    detail::BasisView<K> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push(minimal[j]);
    Poly<K> h = minimal.size() == 1 ? minimal[i] : reduce_full(minimal[i], others, opts);
    reduced.push_back(h.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&R](const Poly<K>& a, const Poly<K>& b) {
    return R.cmp(a.leading_monomial(), b.leading_monomial()) > 0;
  });
  return GroebnerBasis<K>(R, std::move(reduced));
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& gb, const GBOptions& opts = {}) {
  return gb.normal_form(f, opts);
}

// Mutual containment of generators decides ideal equality.
template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J, const GBOptions& opts = {}) {
  if (I.ring != J.ring) throw RingMismatch();
  auto gi = buchberger(I, opts);
  auto gj = buchberger(J, opts);
  for (const auto& g : I.gens)
    if (!gj.contains(g, opts)) return false;
  for (const auto& g : J.gens)
    if (!gi.contains(g, opts)) return false;
  return true;
}

// Post-hoc Buchberger criterion, used as an independent correctness check in
// the test batteries: every S-polynomial of basis pairs reduces to zero.
template <class K>
bool all_spolys_reduce_to_zero(const GroebnerBasis<K>& gb, const GBOptions& opts = {}) {
  const auto& G = gb.polys();
  const Ring<K>& R = gb.ring();
  const K& F = R.field;
  for (size_t i = 0; i < G.size(); ++i) {
    for (size_t j = i + 1; j < G.size(); ++j) {
      const Monomial l = Monomial::lcm(G[i].leading_monomial(), G[j].leading_monomial());
      Geobucket<K> acc(R);
      acc.add_scaled(G[i].terms(), F.inv(G[i].leading_coeff()), l / G[i].leading_monomial());
      acc.add_scaled(G[j].terms(), F.neg(F.inv(G[j].leading_coeff())), l / G[j].leading_monomial());
      if (!gb.normal_form(acc.to_poly(), opts).is_zero()) return false;
    }
  }
  return true;
}

// Determinant of a small polynomial matrix by cofactor expansion.
template <class K>
Poly<K> poly_det(const std::vector<std::vector<Poly<K>>>& m) {
  const size_t n = m.size();
  if (n == 0) throw ArityMismatch("empty determinant");
  const Ring<K>& R = m[0][0].ring();
  if (n == 1) return m[0][0];
  Poly<K> acc = Poly<K>::zero(R);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly<K>>> sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Poly<K>> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    Poly<K> c = m[0][j] * poly_det(sub);
    acc = (j % 2 == 0) ? acc + c : acc - c;
  }
  return acc;
}

// Jacobian ideal of a hypersurface: the polynomial plus all its partials.
template <class K>
Ideal<K> jacobian_ideal(const Poly<K>& f) {
  std::vector<Poly<K>> gens;
  gens.push_back(f);
  for (int i = 0; i < f.ring().nvars; ++i) gens.push_back(f.derivative(i));
  return Ideal<K>(f.ring(), std::move(gens));
}

// Jacobian ideal of an ideal of expected codimension c: the generators plus
// the c x c minors of the Jacobian matrix.
template <class K>
Ideal<K> jacobian_ideal(const Ideal<K>& I, int codim) {
  const Ring<K>& R = I.ring;
  const int n = R.nvars;
  const int m = static_cast<int>(I.gens.size());
  if (codim < 1 || codim > std::min(n, m))
    throw ArityMismatch("codimension out of range for the Jacobian matrix");
  std::vector<std::vector<Poly<K>>> jac(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) jac[i].push_back(I.gens[i].derivative(j));

  std::vector<Poly<K>> gens = I.gens;
  std::vector<int> rows(codim), cols(codim);
  // iterate over all row and column subsets of size codim
  std::vector<int> rsel(codim), csel(codim);
  for (int i = 0; i < codim; ++i) rsel[i] = i;
  auto next_subset = [](std::vector<int>& s, int limit) {
    int k = static_cast<int>(s.size());
    int i = k - 1;
    while (i >= 0 && s[i] == limit - k + i) --i;
    if (i < 0) return false;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    return true;
  };
  do {
    for (int i = 0; i < codim; ++i) csel[i] = i;
    do {
      std::vector<std::vector<Poly<K>>> sub(codim);
      for (int i = 0; i < codim; ++i)
        for (int j = 0; j < codim; ++j) sub[i].push_back(jac[rsel[i]][csel[j]]);
      Poly<K> d = poly_det(sub);
      if (!d.is_zero()) gens.push_back(std::move(d));
    } while (next_subset(csel, n));
  } while (next_subset(rsel, m));
  return Ideal<K>(R, std::move(gens));
}

}  // namespace certalg
