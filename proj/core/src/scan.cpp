#include "toricmld/scan.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "toricmld/fibration.hpp"
#include "toricmld/weighted_blowup.hpp"

namespace toricmld {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::int64_t kI64Min = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kI64Max = std::numeric_limits<std::int64_t>::max();

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that, so output stays lossless.
ordered_json int_json(const Int& v) {
  if (v >= kI64Min && v <= kI64Max) return ordered_json(v.convert_to<std::int64_t>());
  return ordered_json(v.str());
}

Int int_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw CorruptCheckpointError("expected an integer value");
}

ordered_json rational_json(const Rational& q) {
  return ordered_json{{"num", int_json(numerator(q))}, {"den", int_json(denominator(q))}};
}

Rational rational_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw CorruptCheckpointError("expected a num/den pair");
  return make_rational(int_from_json(j.at("num")), int_from_json(j.at("den")));
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::string_view payload) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a(payload)));
  return buf;
}

void validate_params(const ScanParams& p) {
  if (p.dim < 2) throw InvalidBoundError("scan dimension must be ≥ 2");
  if (p.eps <= 0) throw NonpositiveEpsilonError("eps must be > 0");
  if (p.mode == ScanMode::blowup) {
    if (p.weight_bound < 1) throw InvalidBoundError("weight bound must be ≥ 1");
  } else {
    if (p.n1_bound < 1) throw InvalidBoundError("n1 bound must be ≥ 1");
    if (p.coeff_bound < 1) throw InvalidBoundError("coefficient bound must be ≥ 1");
  }
}

// Odometer over nondecreasing tuples v with lo <= v_i <= hi, lexicographic.
bool advance_sorted(std::vector<Int>& v, const Int& hi) {
  for (std::size_t p = v.size(); p-- > 0;) {
    if (v[p] < hi) {
      ++v[p];
      for (std::size_t q = p + 1; q < v.size(); ++q) v[q] = v[p];
      return true;
    }
  }
  return false;
}

bool primitive_entries(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) return true;
  }
  return g == 1;
}

// Canonical enumeration of the scan space: yields primitive weight vectors
// in canonical form, in a fixed deterministic order.
class Enumerator {
 public:
  explicit Enumerator(const ScanParams& p) : params_(p) {
    if (params_.mode == ScanMode::blowup) {
      state_.assign(params_.dim, Int(1));
      // (1,...,1) is primitive and is the first element.
      pending_ = true;
    } else {
      state_.assign(params_.dim, -params_.coeff_bound);
      state_[0] = 1;
      pending_ = primitive_entries(state_);
      if (!pending_) pending_ = step();
    }
  }

  bool next(std::vector<Int>& out) {
    if (!pending_) return false;
    out = state_;
    pending_ = step();
    return true;
  }

  bool has_pending() const { return pending_; }

 private:
  // Move to the next primitive candidate; false when exhausted.
  bool step() {
    while (raw_step()) {
      if (primitive_entries(state_)) return true;
    }
    return false;
  }

  bool raw_step() {
    if (params_.mode == ScanMode::blowup)
      return advance_sorted(state_, params_.weight_bound);
    // Fibration: tail coordinates 2..d run over nondecreasing tuples in
    // [-coeff_bound, coeff_bound]; n_1 is the slow axis.
    for (std::size_t p = state_.size(); p-- > 1;) {
      if (state_[p] < params_.coeff_bound) {
        ++state_[p];
        for (std::size_t q = p + 1; q < state_.size(); ++q) state_[q] = state_[p];
        return true;
      }
    }
    if (state_[0] < params_.n1_bound) {
      ++state_[0];
      for (std::size_t q = 1; q < state_.size(); ++q) state_[q] = -params_.coeff_bound;
      return true;
    }
    return false;
  }

  ScanParams params_;
  std::vector<Int> state_;
  bool pending_ = false;
};

ScanRecord evaluate(const ScanParams& params, std::vector<Int> weights) {
  ScanRecord rec;
  if (params.mode == ScanMode::blowup) {
    rec.key_statistic = weights[0];  // sorted, so the first entry is the min
    rec.mld_value = mld(WeightVector(LatticeVector(weights), WeightMode::blowup)).value;
  } else {
    rec.key_statistic = weights[0];
    rec.mld_value = mld_prime(WeightVector(LatticeVector(weights), WeightMode::fibration)).value;
  }
  rec.qualifying = rec.mld_value >= params.eps;
  rec.weights = std::move(weights);
  return rec;
}

ordered_json params_json(const ScanParams& p) {
  ordered_json j;
  j["mode"] = p.mode == ScanMode::blowup ? "blowup" : "fibration";
  j["d"] = p.dim;
  j["eps"] = rational_json(p.eps);
  if (p.mode == ScanMode::blowup) {
    j["weight_bound"] = int_json(p.weight_bound);
  } else {
    j["n1_bound"] = int_json(p.n1_bound);
    j["coeff_bound"] = int_json(p.coeff_bound);
  }
  return j;
}

ScanParams params_from_json(const ordered_json& j) {
  ScanParams p;
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "blowup") p.mode = ScanMode::blowup;
  else if (mode == "fibration") p.mode = ScanMode::fibration;
  else throw CorruptCheckpointError("unknown scan mode '" + mode + "'");
  p.dim = j.at("d").get<std::size_t>();
  p.eps = rational_from_json(j.at("eps"));
  if (p.mode == ScanMode::blowup) {
    p.weight_bound = int_from_json(j.at("weight_bound"));
  } else {
    p.n1_bound = int_from_json(j.at("n1_bound"));
    p.coeff_bound = int_from_json(j.at("coeff_bound"));
  }
  return p;
}

ordered_json record_json(const ScanRecord& r) {
  ordered_json j;
  ordered_json w = ordered_json::array();
  for (const Int& x : r.weights) w.push_back(int_json(x));
  j["weights"] = std::move(w);
  j["mld"] = rational_json(r.mld_value);
  j["qualifying"] = r.qualifying;
  j["key_statistic"] = int_json(r.key_statistic);
  return j;
}

ScanRecord record_from_json(const ordered_json& j) {
  ScanRecord r;
  for (const auto& x : j.at("weights")) r.weights.push_back(int_from_json(x));
  r.mld_value = rational_from_json(j.at("mld"));
  r.qualifying = j.at("qualifying").get<bool>();
  r.key_statistic = int_from_json(j.at("key_statistic"));
  return r;
}

void fill_summary(ScanReport& report) {
  report.records_total = report.records.size();
  report.frontier_max.reset();
  report.qualifying_counts.clear();
  for (const ScanRecord& r : report.records) {
    if (!r.qualifying) continue;
    ++report.qualifying_counts[r.key_statistic];
    if (!report.frontier_max || r.key_statistic > *report.frontier_max)
      report.frontier_max = r.key_statistic;
  }
}

ScanReport run_scan(const ScanParams& params, const ScanOptions& options,
                    const std::optional<Checkpoint>& resume) {
  validate_params(params);
  if (resume) {
    if (!(resume->params == params))
      throw CorruptCheckpointError("checkpoint parameters do not match the requested scan");
    if (resume->records.size() != resume->next_index)
      throw CorruptCheckpointError("checkpoint record count does not match its index");
  }

  ScanReport report;
  report.params = params;
  if (resume) report.records = resume->records;
  std::uint64_t next_index = resume ? resume->next_index : 0;

  Enumerator enumerator(params);
  {
    // Fast-forward over already-processed records; their results are in the
    // checkpoint, so only the enumeration is replayed.
    std::vector<Int> skip;
    for (std::uint64_t i = 0; i < next_index; ++i) {
      if (!enumerator.next(skip))
        throw CorruptCheckpointError("checkpoint index is past the end of the scan space");
    }
  }

  const unsigned workers = std::max(1u, options.workers);
  const std::uint64_t cadence = std::max<std::uint64_t>(1, options.checkpoint_every);
  const std::size_t batch_size = workers == 1 ? 64 : workers * 64;

  std::uint64_t processed_this_run = 0;
  bool budget_exhausted = options.max_records && *options.max_records == 0;

  const auto write_checkpoint = [&] {
    if (!options.checkpoint_path) return;
    save_checkpoint(Checkpoint{params, next_index, report.records},
                    *options.checkpoint_path);
  };

  while (!budget_exhausted && enumerator.has_pending()) {
    std::size_t take = batch_size;
    if (options.max_records) {
      const std::uint64_t left = *options.max_records - processed_this_run;
      take = static_cast<std::size_t>(std::min<std::uint64_t>(take, left));
    }
    std::vector<std::vector<Int>> batch;
    batch.reserve(take);
    std::vector<Int> candidate;
    while (batch.size() < take && enumerator.next(candidate)) batch.push_back(candidate);
    if (batch.empty()) break;

    std::vector<ScanRecord> results(batch.size());
    if (workers == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i)
        results[i] = evaluate(params, std::move(batch[i]));
    } else {
      // Workers fill disjoint slices; the fold below stays in canonical
      // order, so the report is independent of the worker count.
      std::vector<std::thread> pool;
      const std::size_t chunk = (batch.size() + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(batch.size(), w * chunk);
        const std::size_t end = std::min(batch.size(), begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
          for (std::size_t i = begin; i < end; ++i)
            results[i] = evaluate(params, std::move(batch[i]));
        });
      }
      for (std::thread& t : pool) t.join();
    }

    for (ScanRecord& rec : results) {
      report.records.push_back(std::move(rec));
      ++next_index;
      ++processed_this_run;
      if (next_index % cadence == 0) write_checkpoint();
    }
    if (options.max_records && processed_this_run >= *options.max_records)
      budget_exhausted = true;
  }

  // Complete iff the enumeration ran dry, regardless of how the budget
  // interacted with the final batch. Persist the stop boundary either way.
  report.complete = !enumerator.has_pending();
  write_checkpoint();

  fill_summary(report);
  return report;
}

}  // namespace

ScanReport scan_blowup(const ScanParams& params, const ScanOptions& options,
                       const std::optional<Checkpoint>& resume) {
  if (params.mode != ScanMode::blowup)
    throw InvalidBoundError("scan_blowup requires blowup-mode parameters");
  return run_scan(params, options, resume);
}

ScanReport scan_fibration(const ScanParams& params, const ScanOptions& options,
                          const std::optional<Checkpoint>& resume) {
  if (params.mode != ScanMode::fibration)
    throw InvalidBoundError("scan_fibration requires fibration-mode parameters");
  return run_scan(params, options, resume);
}

ScanReport resume_scan(const Checkpoint& checkpoint, const ScanOptions& options) {
  return run_scan(checkpoint.params, options, checkpoint);
}

std::string report_json(const ScanReport& report) {
  ordered_json j;
  j["scan"] = params_json(report.params);
  j["complete"] = report.complete;
  j["records_total"] = report.records_total;
  ordered_json qualifying = ordered_json::array();
  for (const ScanRecord& r : report.records) {
    if (!r.qualifying) continue;
    ordered_json q;
    ordered_json w = ordered_json::array();
    for (const Int& x : r.weights) w.push_back(int_json(x));
    q["weights"] = std::move(w);
    q["mld"] = rational_json(r.mld_value);
    q["key_statistic"] = int_json(r.key_statistic);
    qualifying.push_back(std::move(q));
  }
  j["qualifying"] = std::move(qualifying);
  ordered_json frontier;
  frontier["max_key_statistic"] =
      report.frontier_max ? int_json(*report.frontier_max) : ordered_json(nullptr);
  ordered_json counts = ordered_json::object();
  for (const auto& [key, count] : report.qualifying_counts) counts[key.str()] = count;
  frontier["counts"] = std::move(counts);
  j["frontier"] = std::move(frontier);
  return j.dump();
}

std::string report_csv(const ScanReport& report) {
  std::string out = "d,weights,mld_num,mld_den,qualifying,key_statistic\n";
  for (const ScanRecord& r : report.records) {
    out += std::to_string(report.params.dim);
    out += ',';
    for (std::size_t i = 0; i < r.weights.size(); ++i) {
      if (i) out += ';';
      out += r.weights[i].str();
    }
    out += ',';
    out += numerator(r.mld_value).str();
    out += ',';
    out += denominator(r.mld_value).str();
    out += ',';
    out += r.qualifying ? "true" : "false";
    out += ',';
    out += r.key_statistic.str();
    out += '\n';
  }
  return out;
}

std::string report_text(const ScanReport& report) {
  std::ostringstream out;
  const bool blowup = report.params.mode == ScanMode::blowup;
  out << "scan " << (blowup ? "blowup" : "fibration") << " d=" << report.params.dim
      << " eps=" << to_string(report.params.eps);
  if (blowup) out << " bound=" << report.params.weight_bound;
  else out << " n1_bound=" << report.params.n1_bound
           << " coeff_bound=" << report.params.coeff_bound;
  out << (report.complete ? "" : " (partial)") << "\n";
  std::uint64_t qualifying = 0;
  for (const auto& [key, count] : report.qualifying_counts) qualifying += count;
  out << "records: " << report.records_total << ", qualifying: " << qualifying << "\n";
  if (report.frontier_max) {
    out << "frontier max " << (blowup ? "min-weight" : "n_1") << ": "
        << *report.frontier_max << "\n";
    for (const auto& [key, count] : report.qualifying_counts)
      out << "  " << (blowup ? "min-weight " : "n_1 ") << key << ": " << count
          << " qualifying\n";
  } else {
    out << "no qualifying vectors\n";
  }
  return out.str();
}

std::string checkpoint_json(const Checkpoint& checkpoint) {
  ordered_json payload;
  payload["params"] = params_json(checkpoint.params);
  payload["next_index"] = checkpoint.next_index;
  ordered_json records = ordered_json::array();
  for (const ScanRecord& r : checkpoint.records) records.push_back(record_json(r));
  payload["records"] = std::move(records);

  ordered_json doc;
  const std::string body = payload.dump();
  doc["payload"] = std::move(payload);
  doc["hash"] = hash_hex(body);
  return doc.dump();
}

Checkpoint parse_checkpoint(const std::string& text) {
  ordered_json doc = ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("payload") ||
      !doc.contains("hash"))
    throw CorruptCheckpointError("checkpoint file is not a valid checkpoint document");
  try {
    const std::string body = doc.at("payload").dump();
    if (hash_hex(body) != doc.at("hash").get<std::string>())
      throw CorruptCheckpointError("checkpoint content hash mismatch");
    const ordered_json& payload = doc.at("payload");
    Checkpoint cp;
    cp.params = params_from_json(payload.at("params"));
    cp.next_index = payload.at("next_index").get<std::uint64_t>();
    for (const auto& r : payload.at("records")) cp.records.push_back(record_from_json(r));
    if (cp.records.size() != cp.next_index)
      throw CorruptCheckpointError("checkpoint record count does not match its index");
    return cp;
  } catch (const CorruptCheckpointError&) {
    throw;
  } catch (const std::exception& e) {
    throw CorruptCheckpointError(std::string("malformed checkpoint: ") + e.what());
  }
}

void save_checkpoint(const Checkpoint& checkpoint, const std::string& path) {
  // Write-then-rename so an interrupted run never leaves a torn file.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write checkpoint file '" + tmp + "'");
    out << checkpoint_json(checkpoint);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw InputError("cannot move checkpoint into place at '" + path + "'");
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read checkpoint file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_checkpoint(buf.str());
}

}  // namespace toricmld
