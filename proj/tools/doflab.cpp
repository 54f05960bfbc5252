// doflab: DoF regions, blind interference-alignment scheme verification and
// Monte Carlo achievability for two-user MIMO Z / full interference channels.
//
// Exit codes: 0 success (and scheme/sweep pass), 1 verification or property
// failure (or internal error), 2 usage error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "doflab/biascheme.hpp"
#include "doflab/dofregion.hpp"
#include "doflab/json_io.hpp"
#include "doflab/parallel.hpp"
#include "doflab/rng.hpp"
#include "doflab/simulate.hpp"

namespace {

using namespace doflab;
using ordered_json = nlohmann::ordered_json;

struct AntennaFlags {
  int m1 = 0, n1 = 0, m2 = 0, n2 = 0;

  AntennaConfig to_config() const { return {m1, n1, m2, n2}; }
};

void add_antenna_flags(CLI::App* cmd, AntennaFlags& flags) {
  cmd->add_option("--m1", flags.m1, "transmit antennas, user 1")
      ->required()
      ->check(CLI::Range(1, kMaxAntennas));
  cmd->add_option("--n1", flags.n1, "receive antennas, user 1")
      ->required()
      ->check(CLI::Range(1, kMaxAntennas));
  cmd->add_option("--m2", flags.m2, "transmit antennas, user 2")
      ->required()
      ->check(CLI::Range(1, kMaxAntennas));
  cmd->add_option("--n2", flags.n2, "receive antennas, user 2")
      ->required()
      ->check(CLI::Range(1, kMaxAntennas));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << text;
}

ordered_json config_json(const AntennaConfig& cfg) {
  return {{"m1", cfg.m1}, {"n1", cfg.n1}, {"m2", cfg.m2}, {"n2", cfg.n2}};
}

// ---- region ---------------------------------------------------------------

struct RegionArgs {
  AntennaFlags antennas;
  std::string channel;  // zic|fic
  std::string csit;     // yes|no
  std::string format = "json";
  std::string out;
};

int run_region(const RegionArgs& args) {
  const AntennaConfig cfg = args.antennas.to_config();
  DofRegion region;
  if (args.channel == "zic")
    region = args.csit == "yes" ? zic_csit_region(cfg) : zic_nocsit_region(cfg);
  else
    region = args.csit == "yes" ? fic_csit_region(cfg) : fic_nocsit_region(cfg);
  std::string text =
      args.format == "csv" ? region_to_csv(region) : region_to_json(region) + "\n";
  emit(text, args.out);
  return 0;
}

// ---- scheme ---------------------------------------------------------------

struct SchemeArgs {
  AntennaFlags antennas;
  bool special = false;
  bool random = false;
  std::uint64_t seed = 0;
  double rank_tol = kDefaultRankTol;
  double null_tol = kDefaultNullTol;
  std::string out;
  std::string dump_dir;
};

int run_scheme(const SchemeArgs& args) {
  const AntennaConfig cfg = args.antennas.to_config();
  validate_scheme_config(cfg);

  const bool use_random = args.random;  // --special is the default
  const ComplexMatrix q = build_q(cfg.m1, cfg.n1);
  const ComplexMatrix p = build_p(cfg.m1, cfg.n1);

  std::vector<ComplexMatrix> h11_slots;
  ComplexMatrix h12;
  if (use_random) {
    const ChannelDraw draw = sample_channels(cfg, args.seed, 0);
    h11_slots = draw.h11_slots;
    h12 = draw.h12;
  } else {
    h11_slots = special_h11_slots(cfg.m1, cfg.n1);
    // the nulling condition is channel-independent; draw a seeded H12
    h12 = Rng::substream(args.seed, 0).complex_gaussian(cfg.n1, cfg.m2_active());
  }

  const VerificationReport report =
      verify(cfg, q, p, h11_slots, h12, args.rank_tol, args.null_tol);

  ordered_json j = ordered_json::parse(report_to_json(report));
  j["config"] = config_json(cfg);
  j["mode"] = use_random ? "random" : "special";
  j["seed"] = args.seed;
  emit(j.dump() + "\n", args.out);

  if (!args.dump_dir.empty()) {
    std::filesystem::create_directories(args.dump_dir);
    const auto dump = [&](const char* name, const ComplexMatrix& m) {
      std::ofstream f(std::filesystem::path(args.dump_dir) / name);
      f << matrix_to_csv(m);
    };
    dump("q.csv", q);
    dump("p.csv", p);
    dump("u.csv", build_u(q, h11_slots));
    dump("v.csv", build_v(q, p, h12));
    dump("h12.csv", h12);
  }
  return report.pass ? 0 : 1;
}

// ---- simulate ---------------------------------------------------------------

struct SimulateArgs {
  AntennaFlags antennas;
  std::vector<double> powers_db;
  int trials = 50;
  std::uint64_t seed = 0;
  std::string out;
};

int run_simulate(const SimulateArgs& args) {
  const AntennaConfig cfg = args.antennas.to_config();
  validate_scheme_config(cfg);
  if (args.powers_db.size() < 2)
    throw std::domain_error("simulate: need at least two --powers-db values");

  const RateSweepResult result =
      rate_sweep(cfg, args.powers_db, args.trials, args.seed);
  std::string text = sweep_rows_to_csv(result.rows);
  text += estimate_to_json(result, args.seed) + "\n";
  emit(text, args.out);
  return 0;
}

// ---- sweep ---------------------------------------------------------------

struct SweepArgs {
  int max_antennas = 4;
  std::string property = "all";
  std::uint64_t seed = 0;
};

struct PropertyCount {
  long checked = 0;
  long passed = 0;
  std::string first_failure;

  void record(bool ok, const AntennaConfig& cfg) {
    ++checked;
    if (ok)
      ++passed;
    else if (first_failure.empty())
      first_failure = to_string(cfg);
  }
};

int run_sweep(const SweepArgs& args) {
  const bool all = args.property == "all";
  PropertyCount lemma3, csit_dom, zic_dom, zf;

  for (int m1 = 1; m1 <= args.max_antennas; ++m1)
    for (int n1 = 1; n1 <= args.max_antennas; ++n1)
      for (int m2 = 1; m2 <= args.max_antennas; ++m2)
        for (int n2 = 1; n2 <= args.max_antennas; ++n2) {
          const AntennaConfig cfg{m1, n1, m2, n2};
          const DofRegion zn = zic_nocsit_region(cfg);
          const DofRegion fn = fic_nocsit_region(cfg);

          if ((all || args.property == "lemma3") && n1 <= n2)
            lemma3.record(regions_equal(zn, fn), cfg);

          if (all || args.property == "csit-dominance") {
            const bool ok = region_contains_region(zic_csit_region(cfg), zn) &&
                            region_contains_region(fic_csit_region(cfg), fn);
            csit_dom.record(ok, cfg);
          }

          if (all || args.property == "zic-dominance") {
            const bool ok =
                region_contains_region(zic_csit_region(cfg),
                                       fic_csit_region(cfg)) &&
                region_contains_region(zn, fn);
            zic_dom.record(ok, cfg);
          }

          if ((all || args.property == "zf") && n1 >= n2) {
            bool ok = true;
            for (const auto& [d1, d2] : integer_points(zn)) {
              const std::uint64_t stream =
                  ((((std::uint64_t(m1) * 65 + n1) * 65 + m2) * 65 + n2) * 65 +
                   d1) * 65 + d2;
              if (!zf_feasibility(cfg, d1, d2, Rng::mix(args.seed, stream))) {
                ok = false;
                break;
              }
            }
            zf.record(ok, cfg);
          }
        }

  bool all_pass = true;
  if (zf.checked > 0)
    std::cout << "seed: " << args.seed << "\n";  // zf draws are randomized
  const auto print = [&](const char* name, const PropertyCount& c) {
    if (c.checked == 0) return;
    std::cout << name << ": " << c.passed << "/" << c.checked
              << " configs pass\n";
    if (c.passed != c.checked) {
      std::cout << name << ": first counterexample " << c.first_failure << "\n";
      all_pass = false;
    }
  };
  print("lemma3", lemma3);
  print("csit-dominance", csit_dom);
  print("zic-dominance", zic_dom);
  print("zf-feasibility", zf);
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DoF regions and blind interference alignment for two-user "
               "MIMO Z / full interference channels"};
  app.require_subcommand(1);

  RegionArgs region_args;
  CLI::App* region = app.add_subcommand(
      "region", "compute a DoF region as an exact rational polytope");
  add_antenna_flags(region, region_args.antennas);
  region->add_option("--channel", region_args.channel, "zic or fic")
      ->required()
      ->check(CLI::IsMember({"zic", "fic"}));
  region->add_option("--csit", region_args.csit, "transmitter CSI: yes or no")
      ->required()
      ->check(CLI::IsMember({"yes", "no"}));
  region->add_option("--format", region_args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  region->add_option("--out", region_args.out, "write output to a file");

  SchemeArgs scheme_args;
  CLI::App* scheme = app.add_subcommand(
      "scheme", "construct and verify the blind alignment scheme");
  add_antenna_flags(scheme, scheme_args.antennas);
  CLI::Option* special = scheme->add_flag(
      "--special", scheme_args.special,
      "use the deterministic full-rank channel realizations (default)");
  scheme
      ->add_flag("--random", scheme_args.random,
                 "use i.i.d. Gaussian channel realizations")
      ->excludes(special);
  scheme->add_option("--seed", scheme_args.seed, "RNG seed (default 0)");
  scheme->add_option("--rank-tol", scheme_args.rank_tol,
                     "relative singular-value threshold for ranks")
      ->check(CLI::Range(1e-300, 0.999999));
  scheme->add_option("--null-tol", scheme_args.null_tol,
                     "base tolerance for the nulling residual")
      ->check(CLI::Range(1e-300, 1e6));
  scheme->add_option("--out", scheme_args.out, "write output to a file");
  scheme->add_option("--dump-dir", scheme_args.dump_dir,
                     "also export Q/P/U/V matrices as CSV into this directory");

  SimulateArgs sim_args;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo rate sweep and DoF slope estimate");
  add_antenna_flags(simulate, sim_args.antennas);
  simulate
      ->add_option("--powers-db", sim_args.powers_db,
                   "comma-separated per-transmitter powers in dB (>= 2 values)")
      ->required()
      ->delimiter(',');
  simulate->add_option("--trials", sim_args.trials, "Monte Carlo trials")
      ->check(CLI::Range(1, 1000000));
  simulate->add_option("--seed", sim_args.seed, "RNG seed (default 0)");
  simulate->add_option("--out", sim_args.out, "write output to a file");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "property sweep over all configs up to --max-antennas");
  sweep
      ->add_option("--max-antennas", sweep_args.max_antennas,
                   "upper bound on every antenna count (1..6)")
      ->required()
      ->check(CLI::Range(1, 6));
  sweep
      ->add_option("--property", sweep_args.property,
                   "restrict to one property")
      ->check(CLI::IsMember(
          {"all", "lemma3", "csit-dominance", "zic-dominance", "zf"}));
  sweep->add_option("--seed", sweep_args.seed,
                    "RNG seed for zero-forcing draws (default 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
  }

  try {
    if (*region) return run_region(region_args);
    if (*scheme) return run_scheme(scheme_args);
    if (*simulate) return run_simulate(sim_args);
    return run_sweep(sweep_args);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;  // precondition/usage level
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
