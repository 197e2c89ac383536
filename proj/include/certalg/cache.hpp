#pragma once

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "certalg/groebner.hpp"
#include "certalg/poly_io.hpp"

namespace certalg {

// Reduced-basis cache: one file per ideal, keyed by a hash of the canonical
// generator serialization (which pins field, variable count and order). The
// payload is the canonical polynomial text format; writes are atomic
// (write-then-rename) so concurrent runs can share a directory.
template <class K>
std::string gb_cache_key(const Ideal<K>& I) {
  std::ostringstream ss;
  write_polys(ss, I.ring, I.gens);
  const std::string payload = ss.str();
  const uint64_t h1 = fnv1a(payload);
  const uint64_t h2 = fnv1a(payload, 0x9e3779b97f4a7c15ull);
  return hex64(h1) + hex64(h2);
}

template <class K>
GroebnerBasis<K> buchberger_cached(const Ideal<K>& I, const GBOptions& opts,
                                   const std::string& cache_dir, bool* cache_hit = nullptr) {
  if (cache_hit) *cache_hit = false;
  if (cache_dir.empty()) return buchberger(I, opts);
  namespace fs = std::filesystem;
  const fs::path dir(cache_dir);
  const fs::path file = dir / (gb_cache_key(I) + ".gb");

  if (fs::exists(file)) {
    std::ifstream in(file);
    std::string header;
    if (std::getline(in, header)) {
      auto h = parse_ring_header(header, 1);
      if (h.field_token == I.ring.field.token() && h.nvars == I.ring.nvars &&
          h.order == I.ring.order) {
        auto polys = parse_polys(I.ring, in, 2);
        if (cache_hit) *cache_hit = true;
        return GroebnerBasis<K>(I.ring, std::move(polys));
      }
    }
  }

  auto gb = buchberger(I, opts);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!ec) {
    const fs::path tmp = dir / (gb_cache_key(I) + ".tmp." + std::to_string(::getpid()));
    {
      std::ofstream out(tmp);
      write_polys(out, I.ring, gb.polys());
    }
    fs::rename(tmp, file, ec);
    if (ec) fs::remove(tmp, ec);
  }
  return gb;
}

}  // namespace certalg
