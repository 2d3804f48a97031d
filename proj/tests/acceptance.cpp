// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "cremona/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

using namespace cremona;

namespace {

const std::string kConfigDir = CREMONA_CONFIG_DIR;

PointConfig fixture(const std::string& name) { return io::load_config(kConfigDir + "/" + name + ".json"); }

struct Selection {
  const Report* report;
  std::vector<std::string> prefixes;  // empty means every check of the report
};

bool selected(const CheckRecord& c, const std::vector<std::string>& prefixes) {
  if (prefixes.empty()) return true;
  for (const auto& p : prefixes)
    if (c.id.rfind(p, 0) == 0) return true;
  return false;
}

struct Verdict {
  std::vector<std::string> problems;
  double check_seconds = 0;  // time spent in the selected checks
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  bool timed_by_checks;  // shared reports: charge only the selected checks
  std::function<bool(Verdict&)> body;
};

// Selected checks must all pass; a skip counts against the criterion.
bool require(const std::vector<Selection>& sel, Verdict& out) {
  auto& problems = out.problems;
  std::size_t seen = 0;
  for (const auto& s : sel)
    for (const auto& c : s.report->checks) {
      if (!selected(c, s.prefixes)) continue;
      ++seen;
      out.check_seconds += c.seconds;
      if (c.status != Status::Pass)
        problems.push_back(s.report->suite + ":" + c.id + " " + to_string(c.status) + " " + c.witness.dump());
    }
  if (seen == 0) problems.push_back("no checks selected");
  return problems.empty();
}

bool lattice_part(const std::vector<std::string>& prefixes, Verdict& out) {
  static const Report rep = suites::verify_lattice();
  return require({{&rep, prefixes}}, out);
}

}  // namespace

int main() {
  const suites::PolyOptions sampled{1, CheckMode::Sample, 40};

  std::vector<Criterion> criteria = {
      {1, "finite geometry of A[2] and Weber hexads", 1.0, false,
       [](Verdict& pr) {
         Report rep = suites::hexads();
         return require({{&rep, {"flats.", "hexads.weber_count", "hexads.reference_members", "hexads.translation_permutes",
                                 "pairing."}}},
                        pr);
       }},
      {2, "NS lattice product identities", 1.0, true,
       [](Verdict& pr) { return lattice_part({"gram."}, pr); }},
      {3, "half-class scan over all subsets of A[2]", 5.0, true,
       [](Verdict& pr) { return lattice_part({"lattice.half_subset_scan"}, pr); }},
      {4, "isometry suite for kappa and eta", 1.0, true,
       [](Verdict& pr) { return lattice_part({"isometry."}, pr); }},
      {5, "infinite family F_k up to k = 500", 30.0, false,
       [](Verdict& pr) {
         Report rep = suites::iterate(500, 100);
         bool ok = require({{&rep, {"family.matrix_powers", "family.closed_form", "family.degrees",
                                    "family.pairwise_nonproportional", "family.infinite_order"}}},
                           pr);
         if (rep.table.empty() || rep.table[0].size() < 2 || rep.table[0][0] != "1" || rep.table[0][1] != "0") {
           pr.problems.push_back("first table row is not k = 1 with degree 0");
           ok = false;
         }
         return ok;
       }},
      {6, "linear system dimensions on fixture configs", 600.0, false,
       [&](Verdict& pr) {
         Report a = suites::run_poly("quartics", fixture("A"), sampled);
         Report b = suites::run_poly("quartics", fixture("B"), sampled);
         Report c = suites::run_poly("quartics", fixture("C"), sampled);
         Report e = suites::run_poly("systems", fixture("E"), sampled);
         return require({{&a, {"anticanonical.unique_section", "quartics.Q"}},
                         {&b, {"quartics.Q", "quartics.f0_reference"}},
                         {&c, {"quartics.Q", "quartics.f12_reference", "quartics.f24_reference"}},
                         {&e, {"systems."}}},
                        pr);
       }},
      {7, "Cremona identities, sampled and once expanded", 2100.0, false,
       [&](Verdict& pr) {
         PointConfig cfg = fixture("E");
         auto t0 = std::chrono::steady_clock::now();
         Report sec = suites::run_poly("sections", cfg, sampled);
         Report fus = suites::run_poly("fusion", cfg, sampled);
         Report jac = suites::run_poly("jacobian", cfg, sampled);
         double sampled_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
         auto t1 = std::chrono::steady_clock::now();
         Report expanded = suites::run_poly("jacobian", cfg, {1, CheckMode::Expand, 40});
         double expand_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
         bool ok = require({{&sec, {"sections.normalization"}},
                            {&fus, {"fusion.", "planefusion.", "composite.linear"}},
                            {&jac, {"jacobian.factorization.sample"}},
                            {&expanded, {"jacobian.factorization.expand"}}},
                           pr);
         if (sampled_secs > 300) pr.problems.push_back("sampled part took " + std::to_string(sampled_secs) + " s");
         if (expand_secs > 1800) pr.problems.push_back("expand part took " + std::to_string(expand_secs) + " s");
         return ok && sampled_secs <= 300 && expand_secs <= 1800;
       }},
      {8, "dual configuration and projective equivalence", 120.0, false,
       [&](Verdict& pr) {
         Report rep = suites::run_poly("dual", fixture("D"), sampled);
         return require({{&rep, {"dual.contracted_points", "dual.concurrency", "dual.projective_equivalence"}}}, pr);
       }},
      {9, "rational normal curve restrictions", 60.0, false,
       [&](Verdict& pr) {
         Report rep = suites::run_poly("rnc", fixture("D"), sampled);
         return require({{&rep, {}}}, pr);
       }},
      {10, "property suites and the E4 plane", 120.0, false,
       [&](Verdict& pr) {
         Report props = suites::properties(1, 100);
         Report e4 = suites::run_poly("e4", fixture("C"), sampled);
         return require({{&props, {}}, {&e4, {"e4.h12", "e4.h24", "e4.common_point", "del3."}}}, pr);
       }},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    Verdict out;
    auto& problems = out.problems;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(out);
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = c.timed_by_checks ? out.check_seconds
                                    : std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      problems.push_back("runtime " + std::to_string(secs) + " s exceeds budget " + std::to_string(c.budget_seconds) + " s");
      ok = false;
    }
    all_ok = all_ok && ok;
    std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs);
    for (const auto& p : problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
