#pragma once

#include <chrono>
#include <ctime>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "certalg/error.hpp"
#include "certalg/poly_io.hpp"

namespace certalg {

inline const char* kVersion = "1.0.0";

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
  long long millis = 0;
};

// Thrown by check bodies to report a clean failure with context.
struct CheckFailed : Error {
  explicit CheckFailed(const std::string& msg) : Error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw CheckFailed(msg);
}

// Structured pass/fail record for one verification run. Overall status is
// pass exactly when every non-skipped check passes; the stable section
// excludes wall-clock data so reruns with the same config hash identically.
struct CertificateReport {
  std::string id;
  std::string version = kVersion;
  std::string field_kind;                                  // "prime-field" | "rationals"
  uint64_t field_p = 0;                                    // 0 for rationals
  std::vector<std::pair<uint64_t, uint64_t>> field_roots;  // (order, representative)
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckResult> checks;
  std::string started;
  long long elapsed_millis = 0;
  bool timed_out = false;

  void set_param(const std::string& key, const std::string& value) {
    for (auto& kv : params)
      if (kv.first == key) {
        kv.second = value;
        return;
      }
    params.emplace_back(key, value);
  }

  bool overall_pass() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }

  // Canonical serialization of everything except timestamps and timings.
  std::string stable_section() const {
    std::string s = "id=" + id + "\nversion=" + version + "\nfield=" + field_kind + " " +
                    std::to_string(field_p) + "\n";
    for (auto [n, z] : field_roots)
      s += "root " + std::to_string(n) + "=" + std::to_string(z) + "\n";
    for (const auto& [k, v] : params) s += "param " + k + "=" + v + "\n";
    for (const auto& c : checks)
      s += "check " + c.name + " " + status_name(c.status) + " " + c.detail + "\n";
    s += std::string("status=") + (overall_pass() ? "pass" : "fail") + "\n";
    return s;
  }

  std::string stable_hash() const { return hex64(fnv1a(stable_section())); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["id"] = id;
    j["version"] = version;
    nlohmann::json f;
    f["kind"] = field_kind;
    if (field_kind == "prime-field") f["p"] = field_p;
    nlohmann::json roots = nlohmann::json::object();
    for (auto [n, z] : field_roots) roots[std::to_string(n)] = z;
    f["roots"] = roots;
    j["field"] = f;
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json cj;
      cj["name"] = c.name;
      cj["status"] = status_name(c.status);
      cj["detail"] = c.detail;
      cj["millis"] = c.millis;
      cs.push_back(cj);
    }
    j["checks"] = cs;
    j["status"] = overall_pass() ? "pass" : "fail";
    j["started"] = started;
    j["elapsed_millis"] = elapsed_millis;
    return j;
  }
};

inline std::string iso_timestamp_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// Runs named checks, records status/detail/elapsed, captures failures.
class Runner {
 public:
  explicit Runner(CertificateReport& rep) : rep_(rep) {}

  // fn appends human-readable evidence to `detail` and throws CheckFailed
  // (or any library error) to fail the check.
  void check(const std::string& name, const std::function<void(std::string&)>& fn) {
    CheckResult r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      fn(r.detail);
      r.status = CheckStatus::Pass;
    } catch (const Timeout& e) {
      r.status = CheckStatus::Fail;
      r.detail = append_detail(r.detail, std::string("timeout: ") + e.what());
      rep_.timed_out = true;
    } catch (const Error& e) {
      r.status = CheckStatus::Fail;
      r.detail = append_detail(r.detail, e.what());
    }
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
    rep_.checks.push_back(std::move(r));
  }

  void skip(const std::string& name, const std::string& why) {
    rep_.checks.push_back({name, CheckStatus::Skipped, why, 0});
  }

 private:
  static std::string append_detail(const std::string& base, const std::string& extra) {
    return base.empty() ? extra : base + "; " + extra;
  }

  CertificateReport& rep_;
};

// Large payloads are embedded by hash only, so reports stay readable while a
// third party can still confirm the exact generators.
inline std::string embed_or_hash(const std::string& payload, size_t threshold = 4096) {
  if (payload.size() <= threshold) return payload;
  return "fnv1a:" + hex64(fnv1a(payload)) + " (" + std::to_string(payload.size()) + " bytes)";
}

}  // namespace certalg
