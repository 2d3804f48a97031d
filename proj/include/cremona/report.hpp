#pragma once

// Check reports: one entry per check with a status and witness data.

#include "cremona/json_io.hpp"

#include <chrono>
#include <cstdint>
#include <exception>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

enum class Status { Pass, Fail, Skip };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

struct Outcome {
  Status status = Status::Fail;
  io::Json witness = io::Json::object();

  static Outcome of(bool ok, io::Json w = io::Json::object()) { return {ok ? Status::Pass : Status::Fail, std::move(w)}; }
  static Outcome skip(const std::string& reason) { return {Status::Skip, io::Json{{"reason", reason}}}; }
};

struct CheckRecord {
  std::string id;
  Status status = Status::Fail;
  io::Json witness;
  double seconds = 0;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  io::Json info = io::Json::object();  // suite-level parameters echoed back
  std::vector<CheckRecord> checks;
  std::vector<std::string> table_header;  // optional TSV side table
  std::vector<std::vector<std::string>> table;

  /// Runs fn, records its outcome and elapsed time; exceptions become failures.
  template <class F>
  const CheckRecord& run(const std::string& id, F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    CheckRecord rec;
    rec.id = id;
    try {
      Outcome o = fn();
      rec.status = o.status;
      rec.witness = std::move(o.witness);
    } catch (const std::exception& e) {
      rec.status = Status::Fail;
      rec.witness = io::Json{{"error", e.what()}};
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    checks.push_back(std::move(rec));
    return checks.back();
  }

  void record(const std::string& id, Outcome o) {
    checks.push_back({id, o.status, std::move(o.witness), 0});
  }

  bool all_passed() const {
    for (const auto& c : checks)
      if (c.status == Status::Fail) return false;
    return true;
  }
  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.status == s;
    return n;
  }
  const CheckRecord* find(const std::string& id) const {
    for (const auto& c : checks)
      if (c.id == id) return &c;
    return nullptr;
  }
  double total_seconds() const {
    double t = 0;
    for (const auto& c : checks) t += c.seconds;
    return t;
  }

  /// Deterministic unless timing is requested.
  io::Json to_json(bool timing = false) const {
    io::Json cs = io::Json::array();
    for (const auto& c : checks) {
      io::Json e{{"id", c.id}, {"status", cremona::to_string(c.status)}, {"witness", c.witness}};
      if (timing) e["seconds"] = c.seconds;
      cs.push_back(e);
    }
    io::Json j{{"suite", suite}, {"seed", seed}};
    if (!info.empty()) j["info"] = info;
    j["checks"] = cs;
    j["summary"] = {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skip", count(Status::Skip)},
                    {"all_passed", all_passed()}};
    if (timing) j["seconds"] = total_seconds();
    return j;
  }

  /// The side table if present, else one row per check.
  std::string to_tsv() const {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "\t" : "") + cells[i];
      out += "\n";
    };
    if (!table_header.empty()) {
      line(table_header);
      for (const auto& r : table) line(r);
      return out;
    }
    line({"id", "status", "witness"});
    for (const auto& c : checks) line({c.id, cremona::to_string(c.status), c.witness.dump()});
    return out;
  }
};

}  // namespace cremona
