#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricmld/lattice.hpp"

namespace toricmld {

enum class ScanMode { blowup, fibration };

/// Identity of a scan. Two runs with equal parameters produce byte-identical
/// reports regardless of worker count, checkpoint cadence or interruptions.
struct ScanParams {
  ScanMode mode = ScanMode::blowup;
  std::size_t dim = 2;
  Rational eps;
  Int weight_bound;  // blowup: 1 <= n_1 <= ... <= n_d <= weight_bound
  Int n1_bound;      // fibration: 1 <= n_1 <= n1_bound
  Int coeff_bound;   // fibration: |n_i| <= coeff_bound for i >= 2

  friend bool operator==(const ScanParams&, const ScanParams&) = default;
};

/// One enumerated weight vector. key_statistic is the probed quantity:
/// min weight for blowup scans, n_1 for fibration scans.
struct ScanRecord {
  std::vector<Int> weights;  // canonical form
  Rational mld_value;
  bool qualifying = false;  // mld_value >= eps
  Int key_statistic;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

/// Full scan output: every record in canonical order plus the derived
/// frontier summary over the qualifying ones.
struct ScanReport {
  ScanParams params;
  bool complete = true;  // false when stopped early by a record budget
  std::uint64_t records_total = 0;
  std::vector<ScanRecord> records;
  std::optional<Int> frontier_max;            // max key statistic among qualifying
  std::map<Int, std::uint64_t> qualifying_counts;  // per key statistic
};

/// Resumable scan state: parameters, the canonical index of the next record
/// to evaluate, and every record produced so far.
struct Checkpoint {
  ScanParams params;
  std::uint64_t next_index = 0;
  std::vector<ScanRecord> records;
};

struct ScanOptions {
  unsigned workers = 1;
  std::optional<std::string> checkpoint_path;
  std::uint64_t checkpoint_every = 10000;
  /// Evaluate at most this many records in this run, write a checkpoint and
  /// return a partial report (complete = false). Used for budgeted runs.
  std::optional<std::uint64_t> max_records;
};

/// Enumerate all primitive weight vectors with 1 <= n_1 <= ... <= n_d <=
/// weight_bound (the sorted representative of each permutation orbit),
/// compute mld for each and report the qualifying set.
ScanReport scan_blowup(const ScanParams& params, const ScanOptions& options = {},
                       const std::optional<Checkpoint>& resume = {});

/// Enumerate primitive fibration weights with 1 <= n_1 <= n1_bound and
/// |n_i| <= coeff_bound for i >= 2, canonicalized by sorting coordinates
/// 2..d, compute mld' for each and report the qualifying set.
ScanReport scan_fibration(const ScanParams& params, const ScanOptions& options = {},
                          const std::optional<Checkpoint>& resume = {});

/// Continue a scan from checkpoint state (dispatches on its mode).
ScanReport resume_scan(const Checkpoint& checkpoint, const ScanOptions& options = {});

// Serialization. All output is deterministic; reports carry no timestamps,
// worker counts or cadence so that equal parameters give equal bytes.

/// JSON summary: parameters, totals, qualifying records, frontier.
std::string report_json(const ScanReport& report);

/// CSV of every record: d,weights,mld_num,mld_den,qualifying,key_statistic
/// with weights joined by ';'.
std::string report_csv(const ScanReport& report);

/// Human-readable summary.
std::string report_text(const ScanReport& report);

/// Checkpoint file payload: a single JSON document with an embedded content
/// hash; parse_checkpoint rejects any mismatch with CorruptCheckpointError.
std::string checkpoint_json(const Checkpoint& checkpoint);
Checkpoint parse_checkpoint(const std::string& text);

void save_checkpoint(const Checkpoint& checkpoint, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace toricmld
