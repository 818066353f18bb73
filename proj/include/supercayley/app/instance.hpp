#pragma once

// One (ring, U, S) instance: build everything, run the requested checks and
// assemble a deterministic JSON record.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../errors.hpp"
#include "../graph.hpp"
#include "../ideal.hpp"
#include "../ring.hpp"
#include "../spectra.hpp"
#include "../supercharacter.hpp"
#include "../sums.hpp"
#include "../unit_group.hpp"
#include "descriptors.hpp"

namespace supercayley::app {

using Json = nlohmann::ordered_json;

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"axioms",       "duality",      "fourier",     "oracles",
                                              "reconstruction", "identities", "rationality", "connectivity",
                                              "primeness",    "zero",         "sums",        "functional",
                                              "family"};
  return names;
}

inline std::vector<std::string> default_checks() { return {"oracles", "reconstruction", "identities", "rationality"}; }

/// "all", or a comma list of known names.
inline std::vector<std::string> parse_checks(std::string_view text) {
  const auto t = trim(text);
  if (t.empty()) return default_checks();
  if (t == "all") return check_names();
  std::vector<std::string> out;
  for (const auto& name : split_items(t)) {
    if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
      throw ParseError("unknown check '" + name + "'");
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

struct Bounds {
  std::int64_t max_ring = 4096;      // exact path
  std::int64_t numeric_ring = 1024;  // eigensolver oracle
  std::int64_t prime_ring = 512;     // module-closure primeness and ideal lattice work
  std::int64_t verify_ring = 1024;   // axiom verification at table build
};

struct InstanceConfig {
  std::string name;
  std::string ring;
  std::string unit_group = "full";
  std::string set = "U";
  std::string family;  // gcd | prime-to-p | jacobi | p-unitary, or empty
  std::string psi_scale;  // element scaling the generating functional, or empty
  std::vector<std::string> checks = default_checks();
};

struct CheckOutcome {
  std::string status = "pass";  // pass | fail | skipped
  std::vector<std::string> details;

  void fail(const std::string& why) {
    status = "fail";
    if (details.size() < 10) details.push_back(why);
  }
  void skip(const std::string& why) {
    status = "skipped";
    details = {why};
  }
  void absorb(const CheckReport& r) {
    for (const auto& f : r.failures) fail(r.name + ": " + f);
  }
};

struct OpenEquivalence {
  bool applicable = false;  // S = U, connected, anti-connected, primeness computed
  bool prime = false;
  bool has_zero = false;
  bool consistent = true;
};

struct InstanceResult {
  std::string name;
  bool ok = true;
  Json record;
  std::map<std::string, CheckOutcome> checks;
  OpenEquivalence open_equivalence;
  std::optional<Json> family;  // equivalence row for the named family
};

inline Json cyc_json(const CycNumber& v) {
  Json coeffs = Json::array();
  for (const auto& c : v.coefficients()) coeffs.push_back(c.get_str());
  const auto z = v.approx();
  return Json{{"n", v.order()}, {"coeffs", coeffs}, {"approx_re", z.real()}, {"decimal", to_decimal(v)}};
}

namespace detail {

inline bool is_product_of_fields(const RingSpec& R) {
  for (Elem x = 1; x < R.size(); ++x)
    if (is_nilpotent(R, x)) return false;
  return true;
}

/// lambda at class of a*r equals the Galois image sigma_a(lambda_r), because
/// psi(a x) = a psi(x) for integers a. This gives H_fix without field arithmetic.
inline std::vector<std::int64_t> fixing_subgroup_by_classes(const Spectrum& sp, const SuperTheory& t) {
  const RingSpec& R = t.ring();
  std::vector<std::int64_t> out;
  for (const auto& g : galois_group(static_cast<int>(R.exponent()))) {
    const Elem a = R.scalar(g.a);
    bool fixes = true;
    for (const auto& e : sp.entries) {
      const auto j = t.class_index(R.mul(a, e.representative));
      if (!(sp.entries[j].value == e.value)) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(g.a);
  }
  return out;
}

inline std::optional<Elem> alternative_scale(const RingSpec& R) {
  for (Elem u : R.units()) {
    if (u == R.one()) continue;
    for (Elem x = 0; x < R.size(); ++x)
      if (R.psi(R.mul(u, x)) != R.psi(x)) return u;
  }
  return std::nullopt;
}

// One element from each R^x-orbit. Ramanujan and Gauss sums at g only depend on
// the orbit of g up to a known unit factor.
inline std::vector<Elem> unit_orbit_reps(const RingSpec& R) {
  std::vector<char> seen(R.size(), 0);
  std::vector<Elem> reps;
  const auto units = R.units();
  for (Elem g = 0; g < R.size(); ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    for (Elem u : units) seen[R.mul(u, g)] = 1;
  }
  return reps;
}

}  // namespace detail

inline InstanceResult run_instance(const InstanceConfig& cfg, const Bounds& bounds = {}) {
  InstanceResult res;
  res.name = cfg.name;
  auto wants = [&](const std::string& c) { return std::find(cfg.checks.begin(), cfg.checks.end(), c) != cfg.checks.end(); };

  const RingSpec R = parse_ring_spec(cfg.ring);
  if (R.size() > bounds.max_ring)
    throw BoundError("|R| = " + std::to_string(R.size()) + " exceeds --max-ring " + std::to_string(bounds.max_ring));
  const UnitSubgroup U = subgroup_from(R, parse_unit_group(R, cfg.unit_group));
  const GeneratingFunctional psi = cfg.psi_scale.empty() ? GeneratingFunctional(R) : GeneratingFunctional(R, R.parse_element(cfg.psi_scale));
  const SuperTheory theory(psi, U);
  const bool small_verify = R.size() <= bounds.verify_ring;

  std::map<std::string, CheckOutcome>& checks = res.checks;
  for (const auto& c : cfg.checks) checks[c];

  std::optional<SigmaTable> table_opt;
  try {
    table_opt = sigma_table(theory, SigmaOptions{wants("axioms") && small_verify, bounds.verify_ring});
  } catch (const CheckFailure& e) {
    checks["axioms"].fail(e.what());
    table_opt = sigma_table(theory, SigmaOptions{false, 0});
  }
  const SigmaTable& table = *table_opt;
  const ConnectionSet S = parse_connection_set(theory, cfg.set);
  const Spectrum sp = spectrum_super(table, S);
  const CayleyGraph graph(S);
  const Connectivity conn = connectivity(graph);

  Json rec;
  rec["name"] = cfg.name;
  rec["ring"] = R.to_string();
  rec["order"] = R.size();
  rec["exponent"] = R.exponent();
  Json gens = Json::array();
  for (Elem g : U.generators()) gens.push_back(R.render_item(g));
  rec["unit_group"] = Json{{"descriptor", U.descriptor()}, {"size", U.size()}, {"generators", gens}};
  if (!cfg.psi_scale.empty()) rec["psi_scale"] = R.render_item(psi.scale());
  Json reps = Json::array();
  for (auto i : S.class_indices()) reps.push_back(R.render_item(theory.representative(i)));
  rec["set"] = Json{{"descriptor", cfg.set}, {"size", S.size()}, {"class_reps", reps}};
  rec["classes"] = theory.class_count();

  Json entries = Json::array();
  for (const auto& e : sp.entries) {
    Json row{{"class", e.class_index}, {"rep", R.render_item(e.representative)}, {"multiplicity", e.multiplicity}};
    row["cyc"] = cyc_json(e.value);
    row["approx_re"] = e.value.approx().real();
    entries.push_back(row);
  }
  rec["entries"] = entries;
  rec["distinct_eigenvalues"] = sp.merged().size();
  rec["connectivity"] = Json{{"connected", conn.connected}, {"components", conn.components},
                             {"diameter", conn.diameter ? Json(*conn.diameter) : Json(nullptr)}};

  // axioms: supercharacter conditions and orthogonality.
  if (wants("axioms")) {
    auto& out = checks["axioms"];
    if (!small_verify) {
      out.skip("|R| above the verification bound");
    } else if (out.status == "pass") {
      out.absorb(verify_sigma_table(table));
      out.absorb(column_orthogonality_check(table));
      const PartitionCheck pc = check_partition(psi, theory.classes(), theory.classes());
      if (!pc.is_theory() || !pc.symmetric)
        for (const auto& m : pc.messages) out.fail(m);
    }
  }
  if (wants("duality")) {
    auto& out = checks["duality"];
    const std::size_t m = table.m();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const Rational Xi(static_cast<long>(table.dual_sizes[i])), Kj(static_cast<long>(theory.class_size(j)));
        if (table.omega[j][i] * Xi != table.sigma[i][j] * Kj) out.fail("duality at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (table.omega[j][i] != table.sigma[j][i]) out.fail("transpose law at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  }
  if (wants("fourier")) {
    auto& out = checks["fourier"];
    for (std::size_t i = 0; i < table.m(); ++i)
      if (!double_transform_check(table, SuperclassFunction::indicator(theory, {i})))
        out.fail("F^2 != |R| on the indicator of class " + std::to_string(i));
  }
  if (wants("oracles")) {
    auto& out = checks["oracles"];
    const auto exact = sp.multiset();
    if (!same_multiset(exact, spectrum_direct(S, bounds.max_ring))) out.fail("super spectrum differs from direct character sums");
    Json o{{"direct", "compared"}};
    if (R.size() <= bounds.numeric_ring) {
      const double dev = numeric_deviation(exact, spectrum_numeric(graph, bounds.numeric_ring));
      o["numeric_max_deviation"] = dev;
      if (!(dev <= 1e-7)) out.fail("numeric eigenvalues deviate by " + std::to_string(dev));
    } else {
      o["numeric_max_deviation"] = nullptr;
      out.details.push_back("numeric oracle skipped above |R| = " + std::to_string(bounds.numeric_ring));
    }
    rec["oracles"] = o;
  }
  if (wants("reconstruction")) {
    auto& out = checks["reconstruction"];
    try {
      if (!(reconstruct_S(table, sp.class_vector()) == S)) out.fail("reconstructed set differs");
    } catch (const DomainError& e) {
      out.fail(e.what());
    }
  }
  if (wants("identities")) {
    checks["identities"].absorb(spectrum_identities(S, sp));
    if (!basic_graph_invariants(graph)) checks["identities"].fail("graph is not |S|-regular, symmetric and loopless");
  }
  if (wants("rationality")) {
    auto& out = checks["rationality"];
    const auto fix = detail::fixing_subgroup_by_classes(sp, theory);
    const auto G = galois_group(static_cast<int>(R.exponent()));
    const bool integral = std::all_of(sp.entries.begin(), sp.entries.end(), [](const SpectrumEntry& e) { return e.value.is_integer(); });
    Json r{{"n", R.exponent()}, {"fixing_subgroup", fix}, {"minimal_field_degree", G.size() / fix.size()}, {"is_integral", integral}};
    if (R.size() <= bounds.verify_ring && theory.class_count() <= 256) {
      const RationalityReport full = rationality(S, sp);
      if (full.fixing_subgroup != fix) out.fail("class-action and Galois-action fixing groups differ");
      if (!full.preimage_fixes) out.fail("preimage of U does not fix the spectrum");
      if (!full.stable_under_image) out.fail("S is not stable under the image of the fixing group");
      if (!full.image_matches_stabilizer) out.fail("image of the fixing group differs from the stabilizer of S");
      if (!full.integral_iff_full) out.fail("integrality and full fixing group disagree");
      Json stab = Json::array(), img = Json::array();
      for (Elem u : full.stabilizer) stab.push_back(R.render_item(u));
      for (Elem u : full.fixing_image) img.push_back(R.render_item(u));
      r["stabilizer"] = stab;
      r["fixing_image"] = img;
      r["image_equals_stabilizer"] = full.image_equals_stabilizer;
    } else {
      if (integral != (fix.size() == G.size())) out.fail("integrality and full fixing group disagree");
    }
    rec["rationality"] = r;
  }
  if (wants("connectivity")) {
    auto& out = checks["connectivity"];
    if (!(complement(complement(S)) == S)) out.fail("complement is not an involution");
    if (!connectivity(CayleyGraph(unit_connection_set(theory))).connected) {
      out.details.push_back("Gamma(R,U) disconnected; diameter bound not applicable");
      rec["connectivity"]["criterion"] = nullptr;
    } else {
      const ConnectivityCriterion cc = connectivity_criterion(S);
      Json c{{"connected", cc.connected}, {"unit_diameter", cc.unit_diameter}};
      if (cc.t) {
        c["t"] = *cc.t;
        c["bound"] = *cc.bound;
      }
      rec["connectivity"]["criterion"] = c;
      if (!cc.bound_holds) out.fail("diameter " + std::to_string(*cc.diameter) + " exceeds bound " + std::to_string(*cc.bound));
    }
  }

  const bool lattice_ok = R.size() <= bounds.prime_ring;
  std::optional<ZeroEigenvalueReport> zr;
  if ((wants("primeness") || wants("zero") || wants("family")) && lattice_ok)
    zr = zero_eigenvalue_report(S, sp, ideal_lattice(R), bounds.prime_ring);

  if (wants("primeness")) {
    auto& out = checks["primeness"];
    if (!zr) {
      out.skip("|R| above the primeness bound");
    } else {
      const bool anti = zr->anti_connected;
      Json p{{"prime", *zr->prime}, {"connected", zr->connected}, {"anti_connected", anti},
             {"homogeneous_ideals", zr->homogeneous.size()}};
      if (zr->prime_witness) {
        Json w = Json::array();
        for (Elem x : *zr->prime_witness) w.push_back(R.render_item(x));
        p["witness"] = w;
        // A witness must itself be a module.
        const auto& M = *zr->prime_witness;
        std::vector<std::uint8_t> in(static_cast<std::size_t>(R.size()), 0);
        for (Elem x : M) in[x] = 1;
        for (Elem v = 0; v < R.size(); ++v) {
          if (in[v]) continue;
          const auto hits = std::count_if(M.begin(), M.end(), [&](Elem x) { return graph.adjacent(v, x); });
          if (hits != 0 && static_cast<std::size_t>(hits) != M.size()) {
            out.fail("witness is not a module");
            break;
          }
        }
      }
      if (zr->connected && anti) {
        p["ideal_criterion"] = zr->homogeneous.empty();
        if (*zr->prime != zr->homogeneous.empty()) out.fail("brute-force primeness disagrees with homogeneous ideals");
      } else {
        p["ideal_criterion"] = "not applicable";
      }
      if (!unit_action_preserves_adjacency(graph)) out.fail("multiplication by a unit is not an automorphism");
      rec["primeness"] = p;
    }
  }
  if (wants("zero")) {
    auto& out = checks["zero"];
    if (!zr) {
      out.skip("|R| above the primeness bound");
    } else {
      rec["zero_eigenvalue"] = Json{{"has_zero", zr->has_zero}, {"multiplicity", zr->zero_multiplicity},
                                    {"homogeneous_nonempty", zr->homogeneous_nonempty}, {"set_is_units", zr->set_is_units}};
      for (const auto& n : zr->bound_notes) out.fail(n);
      for (const auto& h : zr->homogeneous)
        if (h.absorbs_units && (!*h.absorbs_units || !*h.nilpotent)) out.fail("homogeneous ideal with I+U != U or not nilpotent");
    }
  }
  if (zr && zr->prime_matches_no_zero) {
    res.open_equivalence = OpenEquivalence{true, *zr->prime, zr->has_zero, *zr->prime_matches_no_zero};
  }

  if (wants("sums")) {
    auto& out = checks["sums"];
    const auto orbit_reps = detail::unit_orbit_reps(R);
    const auto all_units = R.units();
    for (Elem g : orbit_reps) {
      const auto cf = ramanujan_closed_form(psi, all_units, g);
      if (!cf.agrees) out.fail("closed-form Ramanujan sum differs at g = " + R.render_item(g));
    }
    out.absorb(quotient_formula_check(table));
    const auto& comps = R.components();
    if (comps.size() == 1 && comps[0].kind == ComponentKind::Residue) {
      const std::int64_t n = comps[0].modulus;
      for (Elem g : orbit_reps)
        if (ramanujan(psi, R.units(), g) != CycNumber::integer(psi.order(), static_cast<long>(hoelder(n, R.element(g).coords[0][0]))))
          out.fail("Hoelder formula differs at g = " + R.render(g));
    }
    std::vector<MultChar> chars{build_mult_char(R, MultCharKind::Trivial)};
    if (comps.size() == 1 && comps[0].kind == ComponentKind::Residue && comps[0].modulus % 2 == 1)
      chars.push_back(build_mult_char(R, MultCharKind::Jacobi));
    const auto phiR = static_cast<std::int64_t>(R.units().size());
    for (const auto& [p, e] : arith::factorize(phiR)) {
      try {
        chars.push_back(build_mult_char(R, MultCharKind::PowerResidue, p));
      } catch (const DomainError&) {
        break;  // R^x not cyclic
      }
    }
    for (const auto& rho : chars) {
      if (!is_multiplicative(rho)) out.fail(rho.descriptor + " is not multiplicative");
      if (!kernel_indicator_check(rho)) out.fail(rho.descriptor + ": kernel indicator identity fails");
      for (Elem g : orbit_reps)
        if (!ramanujan_via_gauss_check(rho, g)) {
          out.fail(rho.descriptor + ": Ramanujan/Gauss identity fails at g = " + R.render_item(g));
          break;
        }
    }
  }
  if (wants("functional")) {
    auto& out = checks["functional"];
    if (const auto u = detail::alternative_scale(R)) {
      const SuperTheory other(GeneratingFunctional(R, R.mul(psi.scale(), *u)), U);
      const ConnectionSet S2(other, S.class_indices());
      if (!same_multiset(spectrum_super(sigma_table(other, {false, 0}), S2).multiset(), sp.multiset()))
        out.fail("spectrum depends on the generating functional");
    } else {
      out.skip("no second generating functional");
    }
  }

  if (wants("family") && !cfg.family.empty()) {
    auto& out = checks["family"];
    if (!zr) {
      out.skip("|R| above the primeness bound");
    } else {
      const bool fields = detail::is_product_of_fields(R);
      const bool anti = zr->connected && zr->anti_connected;
      Json row{{"instance", cfg.name}, {"family", cfg.family}, {"ring", R.to_string()}, {"product_of_fields", fields},
               {"connected_and_anticonnected", anti}, {"prime", *zr->prime}, {"zero_eigenvalue", zr->has_zero},
               {"homogeneous_ideal", zr->homogeneous_nonempty}};
      bool applicable = true, agrees = true;
      if (!zr->set_is_units) out.fail("family checks expect S = U");
      if (cfg.family == "gcd") {
        // U = R^x: prime <=> no zero eigenvalue, when connected and anti-connected.
        applicable = anti && U.size() == R.units().size();
        agrees = !applicable || (*zr->prime == !zr->has_zero);
      } else if (cfg.family == "prime-to-p") {
        // F_p-algebra with p not dividing |U|: no zero eigenvalue, no homogeneous
        // ideal, and prime when connected and anti-connected.
        const std::int64_t p = R.exponent();
        applicable = arith::is_prime(p) && static_cast<std::int64_t>(U.size()) % p != 0;
        agrees = !applicable || (!zr->has_zero && !zr->homogeneous_nonempty && (!anti || *zr->prime));
      } else if (cfg.family == "jacobi") {
        // m squarefree <=> no zero eigenvalue <=> prime.
        const auto& comps = R.components();
        applicable = comps.size() == 1 && comps[0].kind == ComponentKind::Residue;
        if (applicable) {
          const std::int64_t m = comps[0].modulus;
          for (const auto& [q, e] : arith::factorize(m)) applicable = applicable && q % 4 == 1;
          bool squarefree = true;
          for (const auto& [q, e] : arith::factorize(m)) squarefree = squarefree && e == 1;
          row["squarefree"] = squarefree;
          agrees = !applicable || (squarefree == !zr->has_zero && squarefree == *zr->prime);
        }
      } else if (cfg.family == "p-unitary") {
        // p invertible, connected and anti-connected: prime <=> product of fields <=> no zero.
        const auto kind = parse_unit_group(R, cfg.unit_group);
        const std::int64_t p = kind.kind == UnitSubgroupKind::Squares ? 2 : kind.p;
        applicable = (kind.kind == UnitSubgroupKind::PthPowers || kind.kind == UnitSubgroupKind::Squares) &&
                     R.is_unit(R.scalar(p)) && anti;
        agrees = !applicable || (*zr->prime == fields && fields == !zr->has_zero);
      } else {
        throw ParseError("unknown family '" + cfg.family + "'");
      }
      row["applicable"] = applicable;
      row["agrees"] = agrees;
      if (!agrees) out.fail("the " + cfg.family + " equivalence fails on this instance");
      res.family = row;
    }
  }

  Json cj = Json::object();
  for (const auto& name : cfg.checks) {
    const auto& c = checks[name];
    if (c.status == "fail") res.ok = false;
    Json entry{{"status", c.status}};
    if (!c.details.empty()) entry["details"] = c.details;
    cj[name] = entry;
  }
  rec["checks"] = cj;
  rec["ok"] = res.ok;
  res.record = std::move(rec);
  return res;
}

/// Flat CSV of the class-indexed spectrum.
inline std::string spectrum_csv(const Json& rec) {
  std::ostringstream os;
  os << "class,rep,multiplicity,n,coeffs,approx_re\n";
  for (const auto& e : rec["entries"]) {
    std::string coeffs;
    for (const auto& c : e["cyc"]["coeffs"]) coeffs += (coeffs.empty() ? "" : " ") + c.get<std::string>();
    os << e["class"].get<std::size_t>() << ",\"" << e["rep"].get<std::string>() << "\"," << e["multiplicity"].get<std::int64_t>()
       << ',' << e["cyc"]["n"].get<int>() << ",\"" << coeffs << "\"," << e["cyc"]["decimal"].get<std::string>() << '\n';
  }
  return os.str();
}

}  // namespace supercayley::app
