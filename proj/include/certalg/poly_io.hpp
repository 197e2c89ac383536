#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "certalg/poly.hpp"

namespace certalg {

// Canonical text format. Header line:
//     ring <p|Q> <nvars> <order>
// then one polynomial per line, terms sorted descending, each term written
// as c*x0^e0*x1^e1*... with zero exponents omitted and terms joined by " + ".
// Coefficients are canonical representatives, so the round-trip is bit-exact.
// Matrices add a "matrix <rows> <cols> <skew|general>" line after the header,
// followed by rows*cols polynomial lines in row-major order.

template <class K>
std::string poly_to_text(const Poly<K>& p) {
  if (p.is_zero()) return "0";
  const K& F = p.ring().field;
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    out += F.str(c);
    for (int i = 0; i < p.ring().nvars; ++i) {
      if (m.e[i] == 0) continue;
      out += "*x" + std::to_string(i) + "^" + std::to_string(static_cast<int>(m.e[i]));
    }
  }
  return out;
}

template <class K>
std::string ring_header(const Ring<K>& ring) {
  return "ring " + ring.field.token() + " " + std::to_string(ring.nvars) + " " +
         ring.order.name();
}

struct RingHeader {
  std::string field_token;
  int nvars = 0;
  MonomialOrder order;
};

inline RingHeader parse_ring_header(const std::string& line, int lineno) {
  std::istringstream ss(line);
  std::string tag;
  RingHeader h;
  std::string order;
  if (!(ss >> tag >> h.field_token >> h.nvars >> order) || tag != "ring")
    throw ParseError(lineno, "expected 'ring <p|Q> <nvars> <order>'");
  if (h.nvars < 0 || h.nvars > Monomial::kMaxVars)
    throw ParseError(lineno, "variable count out of range");
  try {
    h.order = MonomialOrder::parse(order);
  } catch (const Error& e) {
    throw ParseError(lineno, e.what());
  }
  return h;
}

template <class K>
Poly<K> parse_poly(const Ring<K>& ring, const std::string& line, int lineno) {
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.empty()) throw ParseError(lineno, "empty polynomial line");
  if (s == "0") return Poly<K>::zero(ring);
  std::vector<typename Poly<K>::Term> terms;
  size_t pos = 0;
  while (pos != std::string::npos && pos < s.size()) {
    size_t next = s.find(" + ", pos);
    std::string tstr = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? std::string::npos : next + 3;

    Monomial m;
    typename K::Elem coeff = ring.field.one();
    bool have_coeff = false;
    size_t tp = 0;
    while (tp < tstr.size()) {
      size_t star = tstr.find('*', tp);
      std::string factor = tstr.substr(tp, star == std::string::npos ? std::string::npos : star - tp);
      tp = star == std::string::npos ? tstr.size() : star + 1;
      if (factor.empty()) throw ParseError(lineno, "empty factor in term '" + tstr + "'");
      if (factor[0] == 'x') {
        size_t caret = factor.find('^');
        int idx, exp = 1;
        try {
          idx = std::stoi(factor.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
          if (caret != std::string::npos) exp = std::stoi(factor.substr(caret + 1));
        } catch (...) {
          throw ParseError(lineno, "bad variable factor '" + factor + "'");
        }
        if (idx < 0 || idx >= ring.nvars) throw ParseError(lineno, "variable index out of range in '" + factor + "'");
        if (exp < 0 || exp > 127) throw ParseError(lineno, "exponent out of range in '" + factor + "'");
        m.e[idx] = static_cast<uint8_t>(m.e[idx] + exp);
        m.deg += static_cast<uint32_t>(exp);
      } else {
        try {
          coeff = ring.field.parse(factor);
        } catch (...) {
          throw ParseError(lineno, "bad coefficient '" + factor + "'");
        }
        have_coeff = true;
      }
    }
    if (!have_coeff && m.is_one()) throw ParseError(lineno, "term without content: '" + tstr + "'");
    terms.emplace_back(m, coeff);
  }
  return Poly<K>::from_terms(ring, std::move(terms));
}

template <class K>
void write_polys(std::ostream& os, const Ring<K>& ring, const std::vector<Poly<K>>& polys) {
  os << ring_header(ring) << "\n";
  for (const auto& p : polys) os << poly_to_text(p) << "\n";
}

template <class K>
std::vector<Poly<K>> parse_polys(const Ring<K>& ring, std::istream& is, int first_lineno) {
  std::vector<Poly<K>> out;
  std::string line;
  int lineno = first_lineno;
  while (std::getline(is, line)) {
    std::string t = line;
    while (!t.empty() && (t.back() == '\r' || t.back() == ' ')) t.pop_back();
    if (!t.empty()) out.push_back(parse_poly(ring, t, lineno));
    ++lineno;
  }
  return out;
}

// 64-bit FNV-1a over the canonical serialization; used for cache keys and the
// hash-stable report section.
inline uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace certalg
