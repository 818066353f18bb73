#pragma once

// Catalog files: flat key = value lines, global keys first, then repeated
// [instance] blocks. The runner evaluates instances in a small thread pool and
// assembles results in file order.

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../errors.hpp"
#include "instance.hpp"

namespace supercayley::app {

struct Catalog {
  Bounds bounds;
  std::vector<InstanceConfig> instances;
};

inline Catalog parse_catalog(std::string_view text) {
  Catalog cat;
  cat.bounds.numeric_ring = 200;
  InstanceConfig* cur = nullptr;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto to_int = [&](const std::string& v) {
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size() || x < 1) throw ParseError("line " + std::to_string(lineno) + ": expected a positive integer");
    return static_cast<std::int64_t>(x);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const std::string body(trim(hash == std::string::npos ? line : line.substr(0, hash)));
    if (body.empty()) continue;
    if (body == "[instance]") {
      cat.instances.emplace_back();
      cur = &cat.instances.back();
      cur->checks = check_names();
      cur->name = "instance-" + std::to_string(cat.instances.size());
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key(trim(std::string_view(body).substr(0, eq)));
    const std::string value(trim(std::string_view(body).substr(eq + 1)));
    if (!cur) {
      if (key == "max-ring") cat.bounds.max_ring = to_int(value);
      else if (key == "numeric-ring") cat.bounds.numeric_ring = to_int(value);
      else if (key == "prime-ring") cat.bounds.prime_ring = to_int(value);
      else if (key == "verify-ring") cat.bounds.verify_ring = to_int(value);
      else throw ParseError("line " + std::to_string(lineno) + ": unknown global key '" + key + "'");
      continue;
    }
    if (key == "name") cur->name = value;
    else if (key == "ring") cur->ring = value;
    else if (key == "unit-group") cur->unit_group = value;
    else if (key == "set") cur->set = value;
    else if (key == "family") cur->family = value;
    else if (key == "psi-scale") cur->psi_scale = value;
    else if (key == "checks") cur->checks = parse_checks(value);
    else throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  for (const auto& inst : cat.instances)
    if (inst.ring.empty()) throw ParseError("instance '" + inst.name + "' has no ring");
  return cat;
}

inline Catalog load_catalog(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read catalog '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_catalog(ss.str());
}

/// The built-in catalog, also shipped as catalogs/default.cat.
inline const char* default_catalog_text() {
  return R"(# Built-in reproducibility catalog.
numeric-ring = 200
prime-ring = 512

[instance]
name = paley-5
ring = Z/5
unit-group = squares
set = U
family = prime-to-p

[instance]
name = paley-13
ring = Z/13
unit-group = squares
set = U
family = prime-to-p

[instance]
name = complete-5
ring = Z/5
unit-group = full
set = all-nonzero
family = gcd

[instance]
name = unitary-6
ring = Z/6
unit-group = full
set = U
family = gcd

[instance]
name = z6-classes-2-3
ring = Z/6
unit-group = full
set = classes:2,3

[instance]
name = cubes-9
ring = Z/9
unit-group = pth-powers:3
set = U
family = p-unitary

[instance]
name = fifth-powers-25
ring = Z/25
unit-group = pth-powers:5
set = U
family = p-unitary

[instance]
name = seventh-powers-49
ring = Z/49
unit-group = pth-powers:7
set = U
family = p-unitary

[instance]
name = involutions-8
ring = Z/8
unit-group = involutions
set = U

[instance]
name = unitary-12
ring = Z/12
unit-group = full
set = U
family = gcd

[instance]
name = unitary-15
ring = Z/15
unit-group = full
set = U
family = gcd

[instance]
name = cube-graph
ring = Z/2 x Z/2 x Z/2
unit-group = full
set = elements:(1,0,0);(0,1,0);(0,0,1)

[instance]
name = unitary-gf9
ring = GF(3)[x]/(x^2+1)
unit-group = full
set = U
family = gcd

[instance]
name = paley-9
ring = GF(3)[x]/(x^2+1)
unit-group = squares
set = U
family = prime-to-p

[instance]
name = dual-numbers-3
ring = GF(3)[x]/(x^2)
unit-group = full
set = U
family = gcd

[instance]
name = unitary-z4xz2
ring = Z/4 x Z/2
unit-group = full
set = U
family = gcd

[instance]
name = jacobi-5
ring = Z/5
unit-group = jacobi
set = U
family = jacobi

[instance]
name = jacobi-13
ring = Z/13
unit-group = jacobi
set = U
family = jacobi

[instance]
name = jacobi-65
ring = Z/65
unit-group = jacobi
set = U
family = jacobi

[instance]
name = jacobi-325
ring = Z/325
unit-group = jacobi
set = U
family = jacobi

[instance]
name = squares-9
ring = Z/9
unit-group = squares
set = U
family = p-unitary

[instance]
name = squares-25
ring = Z/25
unit-group = squares
set = U
family = p-unitary

[instance]
name = cubes-7
ring = Z/7
unit-group = pth-powers:3
set = U
family = p-unitary

[instance]
name = cubes-13
ring = Z/13
unit-group = pth-powers:3
set = U
family = p-unitary

[instance]
name = squares-35
ring = Z/35
unit-group = squares
set = U
family = p-unitary

[instance]
name = squares-45
ring = Z/45
unit-group = squares
set = U
family = p-unitary

[instance]
name = complete-10
ring = Z/10
unit-group = full
set = all-nonzero

[instance]
name = gcd-16
ring = Z/16
unit-group = full
set = classes:1,4

[instance]
name = unitary-gf8
ring = GF(2)[x]/(x^3+x+1)
unit-group = full
set = U
family = gcd

[instance]
name = constants-gf5-dual
ring = GF(5)[x]/(x^2)
unit-group = gen:2
set = U
family = prime-to-p

[instance]
name = unitary-z3xz5
ring = Z/3 x Z/5
unit-group = full
set = U
family = gcd

[instance]
name = unitary-z3xz3
ring = Z/3 x Z/3
unit-group = full
set = U
family = gcd

[instance]
name = unitary-z2xgf4
ring = Z/2 x GF(2)[x]/(x^2+x+1)
unit-group = full
set = U
family = gcd

[instance]
name = unitary-9
ring = Z/9
unit-group = full
set = U
family = gcd

[instance]
name = squares-21-complement
ring = Z/21
unit-group = squares
set = complement:U

[instance]
name = empty-7
ring = Z/7
unit-group = full
set = empty

[instance]
name = cycle-4
ring = Z/4
unit-group = full
set = U
family = gcd

[instance]
name = scaled-functional-9
ring = Z/9
unit-group = squares
set = U
psi-scale = 2

[instance]
name = unitary-gf1024
ring = GF(2)[x]/(x^10+x^3+1)
unit-group = full
set = U
)";
}

inline Catalog default_catalog() { return parse_catalog(default_catalog_text()); }

struct CatalogRun {
  std::vector<InstanceResult> results;
  std::vector<std::string> errors;  // per instance, empty when it ran
  bool ok = true;
  Json report;
};

inline InstanceResult run_guarded(const InstanceConfig& cfg, const Bounds& bounds, std::string& error) {
  try {
    return run_instance(cfg, bounds);
  } catch (const std::exception& e) {
    error = e.what();
    InstanceResult r;
    r.name = cfg.name;
    r.ok = false;
    r.record = Json{{"name", cfg.name}, {"ring", cfg.ring}, {"error", e.what()}, {"ok", false}};
    return r;
  }
}

inline CatalogRun run_catalog(const Catalog& cat, unsigned jobs = 1) {
  CatalogRun run;
  const std::size_t n = cat.instances.size();
  run.results.resize(n);
  run.errors.resize(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < n;) run.results[k] = run_guarded(cat.instances[k], cat.bounds, run.errors[k]);
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Json instances = Json::array(), failed = Json::array(), families = Json::array(), conj_rows = Json::array();
  std::size_t passed = 0, conj_checked = 0;
  Json counterexamples = Json::array();
  for (const auto& r : run.results) {
    instances.push_back(r.record);
    if (r.ok) ++passed;
    else failed.push_back(r.name);
    if (r.family) families.push_back(*r.family);
    if (r.open_equivalence.applicable) {
      ++conj_checked;
      conj_rows.push_back(Json{{"instance", r.name}, {"prime", r.open_equivalence.prime}, {"zero_eigenvalue", r.open_equivalence.has_zero},
                               {"consistent", r.open_equivalence.consistent}});
      if (!r.open_equivalence.consistent) counterexamples.push_back(r.name);
    }
  }
  run.ok = failed.empty();
  run.report = Json{
      {"instances", instances},
      {"family_equivalences", families},
      {"zero_eigenvalue_conjecture",
       Json{{"statement", "for S = U with Gamma(R,U) connected and anti-connected: prime iff 0 is not an eigenvalue"},
            {"checked", conj_checked},
            {"counterexamples", counterexamples},
            {"rows", conj_rows}}},
      {"summary", Json{{"total", n}, {"passed", passed}, {"failed", failed}}}};
  return run;
}

}  // namespace supercayley::app
