// diagonalis: expansion, diagonals, recurrences, identities and geometry
// reports for rational functions 1 / sum_k c_k e_k(x).

#include "options.hpp"

#include "diagonalis/family.hpp"
#include "diagonalis/identities.hpp"
#include "diagonalis/seriesbox.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace diagonalis;
using namespace diagonalis::cli;

namespace {

void add_family_options(CLI::App* cmd, FamilyOptions& f) {
  cmd->add_option("--family", f.family, "catalog name (AG3, Szego3, LewyAskey, KZ-D, Kauers, GRZ, Koornwinder, "
                                        "Szego4, h2, hab, habc, h0b, StraubLambda)");
  cmd->add_option("--coeffs", f.coeffs, "inline coefficients c_0,...,c_d");
  cmd->add_option("--d", f.d, "dimension (with --coeffs, or for GRZ)");
  cmd->add_option("--a", f.a, "parameter a");
  cmd->add_option("--b", f.b, "parameter b");
  cmd->add_option("--c", f.c, "parameter c");
  cmd->add_option("--lambda", f.lambda, "specialize StraubLambda at this value");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diagonalis: Taylor coefficients, diagonals and positivity checks for 1/p with p symmetric"};
  app.set_config("--config", "", "read options from a TOML/INI file (command-line flags win)");
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions common;
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", common.cache_dir, "box cache directory (default $DIAGONALIS_CACHE or .diagonalis-cache)");
  app.add_flag("--no-cache", common.no_cache, "neither read nor write cached boxes");
  app.add_option("--workers", common.workers, "worker threads for box layers and grids");
  app.add_option("--mem-limit", common.mem_limit, "maximum number of stored box coefficients");

  int status = 0;

  ExpandOptions ex;
  auto* expand = app.add_subcommand("expand", "expand 1/p on the box [0..N]^d and write it to the cache");
  add_family_options(expand, ex.fam);
  expand->add_option("--N", ex.N, "box bound")->required();
  expand->add_flag("--check-positive", ex.check_positive, "fail on the first coefficient <= 0");
  expand->add_flag("--print", ex.print, "list the stored coefficients");
  expand->add_option("--symmetry", ex.symmetry, "storage: auto, on or off");
  expand->callback([&] { status = run_expand(common, ex); });

  DiagOptions dg;
  auto* diag = app.add_subcommand("diag", "diagonal coefficients u_{n,...,n}, n = 0..N");
  add_family_options(diag, dg.fam);
  diag->add_option("--N", dg.N, "last index")->required();
  diag->add_option("--oracle", dg.oracle, "compare with a closed form (franel, kzd, koornwinder, szego3-binomial, "
                                          "2var, lewy-askey)");
  diag->add_option("--scale", dg.scale, "s: substitute x -> s x first; k-power: multiply term n by k^n");
  diag->add_flag("--sign-scan", dg.sign_scan, "fail if some term is <= 0");
  diag->callback([&] { status = run_diag(common, dg); });

  RecurOptions rc;
  auto* recur = app.add_subcommand("recur", "guess, check or extend P-recurrences");
  recur->add_option("mode", rc.mode, "guess, check, extend or charpoly")
      ->required()
      ->check(CLI::IsMember({"guess", "check", "extend", "charpoly"}));
  add_family_options(recur, rc.src.fam);
  recur->add_option("--N", rc.src.N, "diagonal bound when the terms come from --family");
  recur->add_option("--scale", rc.src.scale, "as for diag");
  recur->add_option("--terms", rc.src.terms, "explicit terms u_0,u_1,...");
  recur->add_option("--oracle", rc.src.oracle, "take the terms from a closed form");
  recur->add_option("--count", rc.src.count, "number of oracle terms");
  recur->add_option("--builtin", rc.builtin, "franel, szego3, lewy-askey, kzd or 2var (with --a)");
  recur->add_option("--max-order", rc.max_order, "guessing: largest order");
  recur->add_option("--max-degree", rc.max_degree, "guessing: largest coefficient degree");
  recur->add_option("--upto", rc.upto, "extend: last index");
  recur->callback([&] { status = run_recur(common, rc); });

  IdentityOptions id;
  auto* identity = app.add_subcommand("identity", "verify a generating-function identity to order M");
  identity->add_option("name", id.name, "identity name")->required()->check(CLI::IsMember(identity_names()));
  identity->add_option("--M", id.M, "order")->required()->check(CLI::NonNegativeNumber);
  identity->callback([&] { status = run_identity(common, id); });

  GeometryOptions geo;
  auto* geometry = app.add_subcommand("geometry", "critical points, locus scans and positivity thresholds");
  geometry->add_option("mode", geo.mode, "point, grid or bisect")
      ->required()
      ->check(CLI::IsMember({"point", "grid", "bisect"}));
  geometry->add_option("--family", geo.fam.family, "family (point, bisect)");
  geometry->add_option("--coeffs", geo.fam.coeffs, "inline coefficients (point)");
  geometry->add_option("--d", geo.fam.d, "dimension");
  geometry->add_option("--a", geo.fam.a, "point: value of a; grid: range lo:hi:step");
  geometry->add_option("--b", geo.fam.b, "point: value of b; grid: range lo:hi:step");
  geometry->add_option("--c", geo.fam.c, "parameter c");
  geometry->add_option("--param", geo.param, "bisect: parameter to vary (default b)");
  geometry->add_option("--lo", geo.lo, "bisect: value where the box is positive");
  geometry->add_option("--hi", geo.hi, "bisect: value where it is not");
  geometry->add_option("--prec", geo.prec, "bisect: final interval width");
  geometry->add_option("--N", geo.N, "bisect: box bound");
  geometry->callback([&] {
    if (geo.mode == "grid") {
      geo.a_range = geo.fam.a;
      geo.b_range = geo.fam.b;
    }
    status = run_geometry(common, geo);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
