#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace lconvex {

struct VerifyOptions {
  std::vector<std::string> checks;  // ids from registered_checks()
  int max_m = 5;                    // L-convex and box-Ferrer bounds
  int max_n = 5;
  int max_q = 10;                   // width + height bound for poset checks
  unsigned threads = 0;             // 0: hardware concurrency
};

struct VerifyRecord {
  std::string instance;
  std::string check;
  bool pass = false;
  nlohmann::json detail;
};

struct VerifyReport {
  std::vector<VerifyRecord> records;  // sorted by (instance, check)
  bool all_pass() const;
  std::size_t failures() const;
  // One JSON object per line: instance, check, pass, detail.
  std::string to_jsonl() const;
};

struct CheckInfo {
  std::string id;
  std::string family;  // "l-convex", "ferrer-box" or "ferrer-semiperimeter"
  std::string description;
};

const std::vector<CheckInfo>& registered_checks();

// Throws ParseError on an unknown check id.
VerifyReport verify_all(const VerifyOptions& options);

}  // namespace lconvex
