#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "certalg/poly.hpp"

namespace certalg {

// Rectangular matrix of polynomials. The skew flag is only ever set by
// check_skew(), so a set flag is a verified property.
template <class K>
struct PolyMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Poly<K>> entries;  // row-major
  bool skew = false;

  PolyMatrix() = default;
  PolyMatrix(const Ring<K>& ring, size_t r, size_t c)
      : rows(r), cols(c), entries(r * c, Poly<K>::zero(ring)) {}

  Poly<K>& at(size_t i, size_t j) { return entries[i * cols + j]; }
  const Poly<K>& at(size_t i, size_t j) const { return entries[i * cols + j]; }

  const Ring<K>& ring() const { return entries.at(0).ring(); }

  bool check_skew() {
    skew = false;
    if (rows != cols) return false;
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = i; j < cols; ++j)
        if (!(at(i, j) + at(j, i)).is_zero()) return false;
    skew = true;
    return true;
  }

  PolyMatrix transposed() const {
    PolyMatrix t(ring(), cols, rows);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    t.skew = skew;
    return t;
  }

  // Principal submatrix on the given sorted index set.
  PolyMatrix submatrix(const std::vector<size_t>& idx) const {
    PolyMatrix s(ring(), idx.size(), idx.size());
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) s.at(i, j) = at(idx[i], idx[j]);
    s.skew = skew;
    return s;
  }

  PolyMatrix block(size_t r0, size_t c0, size_t r1, size_t c1) const {
    PolyMatrix s(ring(), r1 - r0, c1 - c0);
    for (size_t i = r0; i < r1; ++i)
      for (size_t j = c0; j < c1; ++j) s.at(i - r0, j - c0) = at(i, j);
    return s;
  }

  // Entrywise substitution of variable images (e.g. a chart embedding).
  PolyMatrix substituted(const std::vector<Poly<K>>& images) const {
    const Ring<K>& target = images.at(0).ring();
    PolyMatrix s(target, rows, cols);
    for (size_t i = 0; i < entries.size(); ++i) s.entries[i] = entries[i].substituted(images);
    return s;
  }

  PolyMatrix scaled(const typename K::Elem& c) const {
    PolyMatrix s = *this;
    for (auto& e : s.entries) e = e.mul_scalar(c);
    return s;
  }

  bool operator==(const PolyMatrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
};

// M_d(x,y) = (x_{i+j} y_{i-j} + x_{i+j+d} y_{i-j+d}), 0 <= i,j <= d-1, all
// indices mod 2d. Drops to rank <= 2 on Heisenberg-invariant abelian
// surfaces of type (1,2d).
template <class K>
PolyMatrix<K> moore_even(int d, const std::vector<Poly<K>>& xs, const std::vector<Poly<K>>& ys) {
  if (static_cast<int>(xs.size()) != 2 * d || static_cast<int>(ys.size()) != 2 * d)
    throw ArityMismatch("moore_even needs 2d coordinates for each argument");
  const int n = 2 * d;
  auto wrap = [n](int k) { return ((k % n) + n) % n; };
  PolyMatrix<K> m(xs[0].ring(), static_cast<size_t>(d), static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      m.at(i, j) = xs[wrap(i + j)] * ys[wrap(i - j)] + xs[wrap(i + j + d)] * ys[wrap(i - j + d)];
  return m;
}

// M'_n(x,y) = (x_{d(i+j)} y_{d(i-j)}) for odd n = 2d+1, indices mod n. Rank
// <= 4 on Heisenberg-invariant abelian surfaces of type (1,n).
template <class K>
PolyMatrix<K> moore_odd(int n, const std::vector<Poly<K>>& xs, const std::vector<Poly<K>>& ys) {
  if (n % 2 == 0) throw ArityMismatch("moore_odd needs an odd size");
  if (static_cast<int>(xs.size()) != n || static_cast<int>(ys.size()) != n)
    throw ArityMismatch("moore_odd needs n coordinates for each argument");
  const int d = (n - 1) / 2;
  auto wrap = [n](int k) { return ((k % n) + n) % n; };
  PolyMatrix<K> m(xs[0].ring(), static_cast<size_t>(n), static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = xs[wrap(d * (i + j))] * ys[wrap(d * (i - j))];
  return m;
}

namespace detail {

template <class K>
Poly<K> pfaffian_masked(const PolyMatrix<K>& a, uint32_t mask,
                        std::map<uint32_t, Poly<K>>& memo) {
  if (mask == 0) return Poly<K>::from_int(a.ring(), 1);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::vector<int> idx;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) idx.push_back(i);
  const int first = idx[0];
  Poly<K> acc = Poly<K>::zero(a.ring());
  // expansion along the first remaining row: alternating signs over partners
  for (size_t k = 1; k < idx.size(); ++k) {
    const Poly<K>& e = a.at(static_cast<size_t>(first), static_cast<size_t>(idx[k]));
    if (e.is_zero()) continue;
    uint32_t sub = mask & ~(1u << first) & ~(1u << idx[k]);
    Poly<K> term = e * pfaffian_masked(a, sub, memo);
    acc = (k % 2 == 1) ? acc + term : acc - term;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace detail

// Pfaffian by first-row expansion; Pf of the empty matrix is 1 and
// Pf([[0,a],[-a,0]]) = a. Requires a verified skew matrix of even size.
template <class K>
Poly<K> pfaffian(PolyMatrix<K>& a) {
  if (a.rows != a.cols) throw ArityMismatch("pfaffian of a non-square matrix");
  if (a.rows % 2 != 0) throw OddSize();
  if (!a.skew && !a.check_skew()) throw NotSkew();
  std::map<uint32_t, Poly<K>> memo;
  uint32_t mask = a.rows >= 32 ? 0 : ((1u << a.rows) - 1);
  if (a.rows >= 32) throw ArityMismatch("pfaffian limited to 31 rows");
  return detail::pfaffian_masked(a, mask, memo);
}

// Pfaffians of all principal 2r x 2r submatrices, indexed by sorted row
// subsets in lexicographic order.
template <class K>
std::vector<std::pair<std::vector<size_t>, Poly<K>>> sub_pfaffians(PolyMatrix<K>& a, int size) {
  if (a.rows != a.cols) throw ArityMismatch("sub-pfaffians of a non-square matrix");
  if (size % 2 != 0) throw OddSize();
  if (!a.skew && !a.check_skew()) throw NotSkew();
  std::vector<std::pair<std::vector<size_t>, Poly<K>>> out;
  std::vector<size_t> sel(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) sel[static_cast<size_t>(i)] = static_cast<size_t>(i);
  std::map<uint32_t, Poly<K>> memo;
  for (;;) {
    uint32_t mask = 0;
    for (size_t s : sel) mask |= 1u << s;
    out.emplace_back(sel, detail::pfaffian_masked(a, mask, memo));
    // next lexicographic subset of {0..rows-1}
    int k = size;
    int i = k - 1;
    while (i >= 0 && sel[static_cast<size_t>(i)] == a.rows - static_cast<size_t>(k - i)) --i;
    if (i < 0) break;
    ++sel[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) sel[static_cast<size_t>(j)] = sel[static_cast<size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace certalg
