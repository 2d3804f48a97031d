#pragma once

// Entry point for every suite by name.

#include "cremona/suites_lattice.hpp"
#include "cremona/suites_poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cremona::suites {

inline const std::vector<std::string>& poly_subcommands() {
  static const std::vector<std::string> v = {"quartics", "systems", "sections", "jacobian",
                                             "fusion",   "dual",    "rnc",      "e4"};
  return v;
}

inline Report run_poly(const std::string& sub, const PointConfig& cfg, const PolyOptions& opt) {
  auto bad = config_violations(cfg);
  if (!bad.empty()) throw std::invalid_argument("config " + cfg.name + " is degenerate: " + bad.front());
  if (sub == "quartics") return poly_quartics(cfg, opt);
  if (sub == "systems") return poly_systems(cfg, opt);
  if (sub == "sections") return poly_sections(cfg, opt);
  if (sub == "jacobian") return poly_jacobian(cfg, opt);
  if (sub == "fusion") return poly_fusion(cfg, opt);
  if (sub == "dual") return poly_dual(cfg, opt);
  if (sub == "rnc") return poly_rnc(cfg, opt);
  if (sub == "e4") return poly_e4(cfg, opt);
  throw std::invalid_argument("unknown poly suite " + sub);
}

}  // namespace cremona::suites
