#pragma once

// Machine-readable verification reports, shared by all verify_* operations.

#include <json.hpp>

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace pq {

struct VerificationReport {
  std::string check;
  std::map<std::string, std::string> params;
  bool pass = true;
  std::vector<std::string> details;
  long long elapsed_ms = 0;

  void record(bool ok, const std::string& what) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
  }

  void note(const std::string& what) { details.push_back("note: " + what); }

  // Timing is suppressed in deterministic output so reports are
  // byte-for-byte reproducible.
  nlohmann::ordered_json to_json(bool include_timing = false) const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["pass"] = pass;
    j["details"] = details;
    j["elapsed_ms"] = include_timing ? elapsed_ms : 0;
    return j;
  }
};

class ReportTimer {
public:
  explicit ReportTimer(VerificationReport& r)
      : report_(r), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
  }

private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace pq
