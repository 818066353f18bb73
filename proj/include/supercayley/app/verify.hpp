#pragma once

// Verification suites. A suite is a group of checks run over the built-in
// catalog, restricted to rings of at most --max-ring elements. The oracles and
// reconstruction suites also try the empty set, all nonzero elements and a
// random union of classes for every distinct (ring, unit group) pair.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"

namespace supercayley::app {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"axioms",      "duality",   "fourier",   "oracles",
                                              "reconstruction", "rationality", "primeness", "sums"};
  return names;
}

inline std::vector<std::string> suite_checks(const std::string& suite) {
  if (suite == "primeness") return {"primeness", "zero", "connectivity", "family"};
  if (suite == "axioms") return {"axioms", "functional"};
  if (suite == "oracles") return {"oracles", "identities"};
  for (const auto& s : suite_names())
    if (s == suite) return {suite};
  throw ParseError("unknown suite '" + suite + "' (expected one of axioms, duality, fourier, oracles, "
                   "reconstruction, rationality, primeness, sums, all)");
}

inline Catalog suite_catalog(const std::string& suite, std::int64_t max_ring, std::uint64_t seed) {
  const Catalog base = default_catalog();
  Catalog cat;
  cat.bounds = base.bounds;
  cat.bounds.max_ring = max_ring;
  std::vector<std::string> checks;
  if (suite == "all") {
    checks = check_names();
  } else {
    checks = suite_checks(suite);
  }
  const bool extra_sets = suite == "all" || suite == "oracles" || suite == "reconstruction";
  std::mt19937_64 rng(seed);
  std::set<std::pair<std::string, std::string>> seen;
  for (InstanceConfig cfg : base.instances) {
    const RingSpec R = parse_ring_spec(cfg.ring);
    if (R.size() > max_ring) continue;
    cfg.checks = checks;
    if (suite != "all" && suite != "primeness") cfg.family.clear();
    cat.instances.push_back(cfg);
    if (!extra_sets || !cfg.psi_scale.empty() || !seen.insert({cfg.ring, cfg.unit_group}).second) continue;
    const SuperTheory t(GeneratingFunctional(R), subgroup_from(R, parse_unit_group(R, cfg.unit_group)));
    std::string reps;
    for (std::size_t i = 1; i < t.class_count(); ++i)
      if (rng() & 1U) reps += (reps.empty() ? "" : ";") + R.render_item(t.representative(i));
    for (const std::string set : {std::string("empty"), std::string("all-nonzero"),
                                  reps.empty() ? std::string("empty") : "classes:" + reps}) {
      InstanceConfig extra = cfg;
      extra.family.clear();
      extra.set = set;
      extra.name = cfg.name + "/" + (starts_with(set, "classes:") ? "random" : set);
      cat.instances.push_back(extra);
    }
  }
  return cat;
}

}  // namespace supercayley::app
