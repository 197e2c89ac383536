#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>

#include "certalg/error.hpp"

namespace certalg {

// Exponent vectors are dense and fixed-size: the largest ring needed is 18
// coordinates plus a few parameters, so 24 bytes cover everything and keep
// comparisons branch-light. Individual exponents stay far below 128, which
// the packed divisibility test relies on.
struct Monomial {
  static constexpr int kMaxVars = 24;
  static constexpr uint64_t kHighBits = 0x8080808080808080ull;

  union {
    std::array<uint8_t, kMaxVars> e;
    std::array<uint64_t, kMaxVars / 8> lanes;
  };
  uint32_t deg = 0;

  Monomial() : lanes{0, 0, 0} {}

  static Monomial one() { return Monomial(); }

  static Monomial var(int i, uint8_t exp = 1) {
    Monomial m;
    m.e[i] = exp;
    m.deg = exp;
    return m;
  }

  bool is_one() const { return deg == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int k = 0; k < kMaxVars / 8; ++k) r.lanes[k] = lanes[k] + o.lanes[k];
    r.deg = deg + o.deg;
    return r;
  }

  // this / o, assuming o divides this.
  Monomial operator/(const Monomial& o) const {
    Monomial r;
    for (int k = 0; k < kMaxVars / 8; ++k) r.lanes[k] = lanes[k] - o.lanes[k];
    r.deg = deg - o.deg;
    return r;
  }

  // o | this, i.e. every exponent of o is <= the one here. Exponents < 128.
  bool divisible_by(const Monomial& o) const {
    if (deg < o.deg) return false;
    for (int k = 0; k < kMaxVars / 8; ++k)
      if ((((lanes[k] | kHighBits) - o.lanes[k]) & kHighBits) != kHighBits) return false;
    return true;
  }

  bool coprime_with(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    uint32_t d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
      d += r.e[i];
    }
    r.deg = d;
    return r;
  }

  bool operator==(const Monomial& o) const {
    return deg == o.deg && lanes[0] == o.lanes[0] && lanes[1] == o.lanes[1] &&
           lanes[2] == o.lanes[2];
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  // Bitmask of variables with nonzero exponent; cheap divisor pre-filter.
  uint32_t support_mask() const {
    uint32_t m = 0;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i]) m |= 1u << i;
    return m;
  }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (int k = 0; k < kMaxVars / 8; ++k) {
      h ^= lanes[k];
      h *= 1099511628211ull;
    }
    return h;
  }
};

enum class OrderKind : uint8_t { Grevlex, Lex, Block };

// Monomial order descriptor. Block is an elimination order: grevlex on the
// first `block_split` variables, ties broken by grevlex on the rest.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  uint8_t block_split = 0;

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && (kind != OrderKind::Block || block_split == o.block_split);
  }
  bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

  std::string name() const {
    switch (kind) {
      case OrderKind::Grevlex: return "grevlex";
      case OrderKind::Lex: return "lex";
      case OrderKind::Block: return "block" + std::to_string(block_split);
    }
    return "?";
  }

  static MonomialOrder parse(const std::string& s) {
    if (s == "grevlex") return {OrderKind::Grevlex, 0};
    if (s == "lex") return {OrderKind::Lex, 0};
    if (s.rfind("block", 0) == 0) {
      int k = std::stoi(s.substr(5));
      return {OrderKind::Block, static_cast<uint8_t>(k)};
    }
    throw Error("unknown monomial order: " + s);
  }

  // <0, 0, >0 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b, int nvars) const {
    switch (kind) {
      case OrderKind::Grevlex:
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        for (int i = nvars - 1; i >= 0; --i)
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
        return 0;
      case OrderKind::Lex:
        for (int i = 0; i < nvars; ++i)
          if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
      case OrderKind::Block: {
        int c = grevlex_range(a, b, 0, block_split);
        if (c != 0) return c;
        return grevlex_range(a, b, block_split, nvars);
      }
    }
    return 0;
  }

 private:
  static int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    uint32_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    return 0;
  }
};

}  // namespace certalg
