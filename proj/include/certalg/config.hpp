#pragma once

#include <array>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "certalg/error.hpp"
#include "certalg/field.hpp"

namespace certalg {

// Runtime configuration for a verification run. Serializes to/from plain
// key=value text and is echoed into every report. Environment variables named
// after the flags, upper-cased with hyphens as underscores (PRIME, SEED,
// PARAM, TIMEOUT_MIN, EXTENDED, CACHE_DIR, OUT), override file values and are
// themselves overridden by explicit command-line flags.
struct RunConfig {
  std::string cert;                 // d12|d14|d16|d18|d20|group|props|all
  std::vector<uint64_t> primes;     // empty: per-certificate defaults
  bool include_rationals = false;   // set when "Q" appears in --prime
  uint64_t seed = 1;
  std::optional<std::array<long long, 3>> param_a;
  double timeout_min = 0;           // 0: per-certificate default
  bool extended = false;
  std::string cache_dir = ".gbcache";
  std::string out_path;

  static RunConfig from_kv(std::istream& is) {
    RunConfig c;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      auto eq = line.find('=');
      if (eq == std::string::npos) throw InvalidConfig("expected key=value at line " + std::to_string(lineno));
      c.set(line.substr(0, eq), line.substr(eq + 1));
    }
    return c;
  }

  void set(const std::string& key, const std::string& value) {
    if (key == "cert") {
      cert = value;
    } else if (key == "prime") {
      primes.clear();
      include_rationals = false;
      std::stringstream ss(value);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "Q" || tok == "q") {
          include_rationals = true;
          continue;
        }
        primes.push_back(std::stoull(tok));
      }
    } else if (key == "seed") {
      seed = std::stoull(value);
    } else if (key == "param") {
      std::stringstream ss(value);
      std::string tok;
      std::array<long long, 3> a{};
      int i = 0;
      while (std::getline(ss, tok, ',') && i < 3) a[static_cast<size_t>(i++)] = std::stoll(tok);
      if (i != 3) throw InvalidConfig("param expects a0,a1,a2");
      param_a = a;
    } else if (key == "timeout-min" || key == "timeout_min") {
      timeout_min = std::stod(value);
    } else if (key == "extended") {
      extended = value == "1" || value == "true";
    } else if (key == "cache-dir" || key == "cache_dir") {
      cache_dir = value;
    } else if (key == "out") {
      out_path = value;
    } else {
      throw InvalidConfig("unknown key '" + key + "'");
    }
  }

  void apply_env() {
    auto get = [](const char* name) -> std::optional<std::string> {
      const char* v = std::getenv(name);
      if (v && *v) return std::string(v);
      return std::nullopt;
    };
    if (auto v = get("PRIME")) set("prime", *v);
    if (auto v = get("SEED")) set("seed", *v);
    if (auto v = get("PARAM")) set("param", *v);
    if (auto v = get("TIMEOUT_MIN")) set("timeout-min", *v);
    if (auto v = get("EXTENDED")) set("extended", *v);
    if (auto v = get("CACHE_DIR")) set("cache-dir", *v);
    if (auto v = get("OUT")) set("out", *v);
  }

  void validate() const {
    for (uint64_t p : primes) {
      if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw InvalidConfig("primes must be odd primes, got " + std::to_string(p));
    }
    if (timeout_min < 0) throw InvalidConfig("timeout must be positive");
  }

  std::string to_kv() const {
    std::string s;
    if (!cert.empty()) s += "cert=" + cert + "\n";
    if (!primes.empty() || include_rationals) {
      s += "prime=";
      bool first = true;
      if (include_rationals) {
        s += "Q";
        first = false;
      }
      for (uint64_t p : primes) {
        if (!first) s += ",";
        s += std::to_string(p);
        first = false;
      }
      s += "\n";
    }
    s += "seed=" + std::to_string(seed) + "\n";
    if (param_a)
      s += "param=" + std::to_string((*param_a)[0]) + "," + std::to_string((*param_a)[1]) + "," +
           std::to_string((*param_a)[2]) + "\n";
    if (timeout_min > 0) s += "timeout-min=" + std::to_string(timeout_min) + "\n";
    s += std::string("extended=") + (extended ? "1" : "0") + "\n";
    if (!cache_dir.empty()) s += "cache-dir=" + cache_dir + "\n";
    if (!out_path.empty()) s += "out=" + out_path + "\n";
    return s;
  }
};

}  // namespace certalg
