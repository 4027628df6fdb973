#pragma once

#include <cstdint>
#include <string>

#include "tabletrie/stats.hpp"
#include "tabletrie/table_space.hpp"
#include "tabletrie/workload.hpp"

namespace tabletrie {

enum class LoadMode : uint8_t { BottomUp, Compiled, Both };
enum class ReportFormat : uint8_t { Json, Csv };

LoadMode parse_load_mode(const std::string& s);
ReportFormat parse_report_format(const std::string& s);

struct RunOptions {
  Design design = Design::Original;
  WorkloadSpec spec;
  int runs = 1;
  LoadMode load = LoadMode::Both;
  uint32_t word_bytes = 8;
  bool force_verify_oracle = false;
  size_t hash_threshold = 8;
};

/// Oracle verification runs automatically below this many stored answers;
/// larger runs need --verify-oracle.
inline constexpr uint64_t kOracleAutoVerifyLimit = 150'000;

struct RunReport {
  std::string design;
  std::string workload;
  uint64_t n = 0;
  int runs = 0;
  MemoryReport mem;
  uint64_t answers_total = 0;
  double store_ms = 0.0;          // medians over runs; NaN when the pass was skipped
  double load_bottomup_ms = 0.0;
  double load_compiled_ms = 0.0;
  bool oracle_verified = false;
};

/// Stores the workload, snapshots memory, runs the requested load passes and
/// validates the loaders against the insertion log. An oracle or loader
/// mismatch aborts with a diagnostic.
RunReport run(const RunOptions& opt);
RunReport run(const RunOptions& opt, const Workload& workload);

std::string report_json(const RunReport& r);
std::string report_csv_header();
std::string report_csv_row(const RunReport& r);

/// Writes to the path, or stdout for "-"/"".
void write_report(const RunReport& r, const std::string& out_path, ReportFormat fmt);

}  // namespace tabletrie
