#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "certalg/cache.hpp"
#include "certalg/config.hpp"
#include "certalg/groebner.hpp"
#include "certalg/heisenberg.hpp"
#include "certalg/hilbert.hpp"
#include "certalg/report.hpp"

namespace certalg::certs {

// One coefficient field a certificate runs over.
struct FieldChoice {
  bool rational = false;
  uint64_t p = 0;

  std::string label() const { return rational ? "Q" : "F" + std::to_string(p); }
};

// Field plan: explicit --prime list when given, otherwise the certificate's
// defaults. Identity checks are field-independent, so a certificate simply
// reruns its whole battery per field.
inline std::vector<FieldChoice> field_plan(const RunConfig& cfg,
                                           const std::vector<FieldChoice>& defaults) {
  if (cfg.primes.empty() && !cfg.include_rationals) return defaults;
  std::vector<FieldChoice> plan;
  if (cfg.include_rationals) plan.push_back({true, 0});
  for (uint64_t p : cfg.primes) plan.push_back({false, p});
  return plan;
}

inline std::string fields_summary(const std::vector<FieldChoice>& plan) {
  std::string s;
  for (const auto& f : plan) s += (s.empty() ? "" : ",") + f.label();
  return s;
}

inline GBOptions gb_options(const RunConfig& cfg, double default_minutes, const char* label) {
  GBOptions opts;
  const double minutes = cfg.timeout_min > 0 ? cfg.timeout_min : default_minutes;
  opts.deadline = std::chrono::steady_clock::now() +
                  std::chrono::milliseconds(static_cast<long long>(minutes * 60000.0));
  opts.label = label;
  return opts;
}

inline CertificateReport init_report(const std::string& id, const RunConfig& cfg) {
  CertificateReport rep;
  rep.id = id;
  rep.started = iso_timestamp_now();
  std::istringstream kv(cfg.to_kv());
  std::string line;
  while (std::getline(kv, line)) {
    auto eq = line.find('=');
    if (eq != std::string::npos) rep.set_param("config." + line.substr(0, eq), line.substr(eq + 1));
  }
  return rep;
}

template <class K>
void note_field(CertificateReport& rep, const FieldSpec<K>& fs) {
  rep.field_kind = K::kind();
  if constexpr (std::is_same_v<K, PrimeField>) {
    rep.field_p = fs.field.p();
    rep.field_roots.clear();
    for (const auto& [n, z] : fs.roots) rep.field_roots.emplace_back(n, z);
  }
}

// "Probabilistic char-0 certificate" wording applies when dimension or
// degree facts were verified over k >= 2 distinct primes.
inline void note_char0_wording(CertificateReport& rep, const std::vector<FieldChoice>& plan) {
  int nprimes = 0;
  for (const auto& f : plan)
    if (!f.rational) ++nprimes;
  if (nprimes >= 2)
    rep.set_param("certificate-kind",
                  "probabilistic char-0 certificate over " + std::to_string(nprimes) + " primes");
}

template <class K>
std::string embed_ideal(const Ideal<K>& I) {
  std::ostringstream ss;
  write_polys(ss, I.ring, I.gens);
  return embed_or_hash(ss.str());
}

}  // namespace certalg::certs
