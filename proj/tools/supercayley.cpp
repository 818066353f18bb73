// supercayley: spectra, verification suites and catalog runs from the shell.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 parse or usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include <supercayley/app/catalog.hpp>
#include <supercayley/app/verify.hpp>

namespace app = supercayley::app;

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw supercayley::ParseError("cannot write '" + path + "'");
  f << text;
}

int print_runs(const app::CatalogRun& run, std::ostream& os) {
  for (std::size_t i = 0; i < run.results.size(); ++i) {
    const auto& r = run.results[i];
    os << (r.ok ? "pass  " : "FAIL  ") << r.name;
    if (!run.errors[i].empty()) os << "  (" << run.errors[i] << ")";
    os << '\n';
    if (!r.ok)
      for (const auto& [name, c] : r.checks)
        if (c.status == "fail")
          for (const auto& d : c.details) os << "      " << name << ": " << d << '\n';
  }
  const auto& summary = run.report["summary"];
  os << summary["passed"].get<std::size_t>() << "/" << summary["total"].get<std::size_t>() << " instances passed\n";
  return run.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Exact spectra of unitary Cayley graphs over finite Frobenius rings"};
  cli.require_subcommand(1);

  app::InstanceConfig cfg;
  cfg.name = "spectrum";
  std::string checks = "oracles,reconstruction,identities,rationality";
  std::string out, format = "json";
  std::int64_t max_ring = 4096;
  std::uint64_t seed = 1;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());

  auto* sp = cli.add_subcommand("spectrum", "Compute and cross-check the spectrum of one graph");
  sp->add_option("--ring", cfg.ring, "Ring, e.g. \"Z/4 x GF(2)[x]/(x^2+x+1)\"")->required();
  sp->add_option("--unit-group", cfg.unit_group, "full | squares | pth-powers:<p> | involutions | jacobi | gen:<elements>")
      ->capture_default_str();
  sp->add_option("--set", cfg.set, "U | all-nonzero | classes:<reps> | elements:<list> | complement:<set> | empty")
      ->capture_default_str();
  sp->add_option("--checks", checks, "Comma-separated check names, or 'all'")->capture_default_str();
  sp->add_option("--family", cfg.family, "gcd | prime-to-p | jacobi | p-unitary");
  sp->add_option("--psi-scale", cfg.psi_scale, "Unit scaling the generating functional");
  sp->add_option("--out", out, "Output file (default stdout)");
  sp->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sp->add_option("--max-ring", max_ring, "Largest ring accepted")->capture_default_str();

  std::string suite;
  auto* vf = cli.add_subcommand("verify", "Run a verification suite over the built-in catalog");
  vf->add_option("suite", suite, "axioms | duality | fourier | oracles | reconstruction | rationality | primeness | sums | all")
      ->required();
  vf->add_option("--max-ring", max_ring, "Skip rings larger than this")->capture_default_str();
  vf->add_option("--seed", seed, "Seed for the random connection sets")->capture_default_str();
  vf->add_option("--out", out, "Write the JSON report here");
  vf->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

  std::string catalog_path;
  bool dump = false;
  auto* ct = cli.add_subcommand("catalog", "Run a catalog file (default: the built-in catalog)");
  ct->add_option("path", catalog_path, "Catalog file");
  ct->add_option("--out", out, "Write the JSON report here");
  ct->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  ct->add_option("--max-ring", max_ring, "Largest ring accepted")->capture_default_str();
  ct->add_flag("--print-default", dump, "Print the built-in catalog and exit");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sp) {
      cfg.checks = app::parse_checks(checks);
      app::Bounds bounds;
      bounds.max_ring = max_ring;
      const app::InstanceResult r = app::run_instance(cfg, bounds);
      emit(format == "json" ? r.record.dump(2) + "\n" : app::spectrum_csv(r.record), out);
      if (!r.ok)
        for (const auto& [name, c] : r.checks)
          for (const auto& d : c.details)
            if (c.status == "fail") std::cerr << name << ": " << d << '\n';
      return r.ok ? 0 : 1;
    }
    if (*vf) {
      const app::Catalog cat = app::suite_catalog(suite, max_ring, seed);
      const app::CatalogRun run = app::run_catalog(cat, jobs);
      if (!out.empty()) emit(run.report.dump(2) + "\n", out);
      return print_runs(run, std::cout);
    }
    if (dump) {
      std::cout << app::default_catalog_text();
      return 0;
    }
    app::Catalog cat = catalog_path.empty() ? app::default_catalog() : app::load_catalog(catalog_path);
    cat.bounds.max_ring = std::min(cat.bounds.max_ring, max_ring);
    const app::CatalogRun run = app::run_catalog(cat, jobs);
    if (out.empty()) {
      std::cout << run.report.dump(2) << '\n';
      return print_runs(run, std::cerr);
    }
    emit(run.report.dump(2) + "\n", out);
    return print_runs(run, std::cout);
  } catch (const supercayley::CheckFailure& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
