// Batch driver: runs one verification suite and writes its report.
//
// exit status: 0 all checks passed, 1 some check failed, 3 bad config or I/O,
// other nonzero values are usage errors from the argument parser.

#include "cremona/suites.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

using namespace cremona;

namespace {

struct Options {
  std::string config_path;
  std::uint64_t seed = 1;
  std::string mode = "sample";
  std::size_t samples = 40;
  std::size_t count = 100;
  int k_max = 500;
  int order_n = 100;
  std::string out;
  std::string format = "json";
  bool timing = false;
};

void emit(const Report& rep, const Options& opt) {
  std::string text = opt.format == "tsv" ? rep.to_tsv() : rep.to_json(opt.timing).dump(2) + "\n";
  if (opt.out.empty())
    std::cout << text;
  else
    io::write_text_file(opt.out, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for a Cremona transformation of P^3 and its Kummer lattice"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--seed", opt.seed, "seed for every randomized check");
  app.add_option("--out", opt.out, "write the report here instead of stdout");
  app.add_option("--format", opt.format, "report format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--timing", opt.timing, "include per-check seconds in JSON (reports are no longer reproducible)");

  auto* lattice = app.add_subcommand("verify-lattice", "Gram identities, half-class scan and isometry checks");
  auto* hexads = app.add_subcommand("hexads", "flats of A[2] and Weber hexads");

  auto* iterate = app.add_subcommand("iterate", "the classes F_k: closed form, degrees, non-proportionality");
  iterate->add_option("--k-max", opt.k_max, "largest k")->check(CLI::PositiveNumber);
  iterate->add_option("--order-bound", opt.order_n, "powers checked against the identity")->check(CLI::PositiveNumber);

  auto* props = app.add_subcommand("properties", "randomized property suites");
  props->add_option("--count", opt.count, "instances per property")->check(CLI::PositiveNumber);

  auto* poly = app.add_subcommand("poly", "polynomial suites on a point configuration");
  poly->require_subcommand(1);
  poly->add_option("--config", opt.config_path, "config JSON")->required()->check(CLI::ExistingFile);
  poly->add_option("--mode", opt.mode, "identity check mode")->check(CLI::IsMember({"sample", "expand"}));
  poly->add_option("--samples", opt.samples, "sample points per identity")->check(CLI::PositiveNumber);
  for (const auto& name : suites::poly_subcommands()) poly->add_subcommand(name, "poly suite " + name);
  poly->fallthrough();

  CLI11_PARSE(app, argc, argv);

  Report rep;
  try {
    if (*lattice) {
      rep = suites::verify_lattice();
    } else if (*hexads) {
      rep = suites::hexads();
    } else if (*iterate) {
      rep = suites::iterate(opt.k_max, opt.order_n);
    } else if (*props) {
      rep = suites::properties(opt.seed, opt.count);
    } else {
      std::string sub = poly->get_subcommands().front()->get_name();
      PointConfig cfg = io::load_config(opt.config_path);
      suites::PolyOptions po{opt.seed, parse_mode(opt.mode), opt.samples};
      rep = suites::run_poly(sub, cfg, po);
    }
    emit(rep, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rep.all_passed() ? 0 : 1;
}
