#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "certalg/error.hpp"

namespace certalg {

// Coefficient fields. Both satisfy the same informal concept:
//
//   using Elem = ...;                     value type, canonical form unique
//   Elem zero(), one(), from_int(long);
//   Elem add/sub/mul/div/neg/inv(...);    exact, never rounds
//   bool is_zero/is_one/eq(...);
//   Elem root_of_unity(unsigned n);       designated primitive n-th root
//   std::string str(Elem), Elem parse(string);
//   std::string token();                  "Q" or the prime, for file headers
//
// All elements are immutable values; fields are trivially copyable descriptors.

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// F_p for an odd prime p < 2^62. Elements are canonical representatives 0..p-1.
class PrimeField {
 public:
  using Elem = uint64_t;

  PrimeField() : p_(3) {}
  explicit PrimeField(uint64_t p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
      throw InvalidConfig("characteristic must be an odd prime, got " + std::to_string(p));
  }

  uint64_t p() const { return p_; }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return mulmod_u64(a, b, p_); }
  Elem inv(Elem a) const {
    if (a == 0) throw ZeroInverse();
    return powmod_u64(a, p_ - 2, p_);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const {
    if (e >= 0) return powmod_u64(a, static_cast<uint64_t>(e), p_);
    return powmod_u64(inv(a), static_cast<uint64_t>(-e), p_);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }

  // a has multiplicative order exactly n: a^n = 1 and a^{n/q} != 1 for every
  // prime q dividing n.
  bool has_exact_order(Elem a, uint64_t n) const {
    if (a == 0 || n == 0 || powmod_u64(a, n, p_) != 1) return false;
    uint64_t m = n;
    for (uint64_t q = 2; q * q <= m; ++q) {
      if (m % q == 0) {
        if (powmod_u64(a, n / q, p_) == 1) return false;
        while (m % q == 0) m /= q;
      }
    }
    if (m > 1 && powmod_u64(a, n / m, p_) == 1) return false;
    return true;
  }

  // Smallest representative of exact multiplicative order n.
  Elem root_of_unity(uint64_t n) const {
    if (n == 0 || (p_ - 1) % n != 0) throw NoSuchRoot(n, "F_" + std::to_string(p_));
    for (Elem a = 1; a < p_; ++a) {
      if (has_exact_order(a, n)) return a;
    }
    throw NoSuchRoot(n, "F_" + std::to_string(p_));  // unreachable for prime p
  }

  std::string str(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw Error("bad F_p scalar: " + s);
    return from_int(v);
  }
  std::string token() const { return std::to_string(p_); }
  static constexpr const char* kind() { return "prime-field"; }

 private:
  uint64_t p_;
};

// Exact rationals over arbitrary-precision integers.
class RationalField {
 public:
  using Elem = mpq_class;

  bool operator==(const RationalField&) const { return true; }
  bool operator!=(const RationalField&) const { return false; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw ZeroInverse();
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw ZeroInverse();
    return a / b;
  }
  Elem pow(const Elem& a, long long e) const {
    Elem base = e >= 0 ? a : inv(a);
    unsigned long long k = static_cast<unsigned long long>(e >= 0 ? e : -e);
    Elem r(1);
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem root_of_unity(uint64_t n) const {
    if (n == 1) return Elem(1);
    if (n == 2) return Elem(-1);
    throw NoSuchRoot(n, "Q");
  }

  std::string str(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const {
    Elem v;
    if (v.set_str(s, 10) != 0) throw Error("bad rational scalar: " + s);
    v.canonicalize();
    return v;
  }
  std::string token() const { return "Q"; }
  static constexpr const char* kind() { return "rationals"; }
};

// A field together with its designated roots of unity. Orders are recorded so
// every consumer of zeta_n agrees on the same element.
template <class K>
struct FieldSpec {
  K field;
  std::map<uint64_t, typename K::Elem> roots;

  FieldSpec() = default;
  explicit FieldSpec(K f) : field(std::move(f)) {}

  const typename K::Elem& zeta(uint64_t n) {
    auto it = roots.find(n);
    if (it == roots.end()) it = roots.emplace(n, field.root_of_unity(n)).first;
    return it->second;
  }
};

}  // namespace certalg
