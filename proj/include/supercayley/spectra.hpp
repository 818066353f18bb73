#pragma once

/**
 * Spectra of U-unitary Cayley graphs.
 *
 * The eigenvalue attached to class K_i is lambda_i = sum_{K_l in S} sigma_l(K_i)
 * with multiplicity |K_i|. Two independent oracles back it up: direct character
 * sums over every r in R, and a floating-point symmetric eigensolver.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "ideal.hpp"
#include "supercharacter.hpp"

namespace supercayley {

struct SpectrumEntry {
  std::size_t class_index = 0;
  Elem representative = 0;
  CycNumber value;
  std::int64_t multiplicity = 0;
};

struct Spectrum {
  std::vector<SpectrumEntry> entries;  // one per class, in class order
  std::int64_t total = 0;

  /// Every eigenvalue repeated by multiplicity, canonically sorted.
  std::vector<CycNumber> multiset() const {
    std::vector<CycNumber> out;
    for (const auto& e : entries)
      for (std::int64_t k = 0; k < e.multiplicity; ++k) out.push_back(e.value);
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
  }
  std::vector<CycNumber> class_vector() const {
    std::vector<CycNumber> out;
    for (const auto& e : entries) out.push_back(e.value);
    return out;
  }
  /// Equal eigenvalues merged: (value, total multiplicity), canonically sorted.
  std::vector<std::pair<CycNumber, std::int64_t>> merged() const {
    std::vector<std::pair<CycNumber, std::int64_t>> out;
    for (const auto& v : multiset()) {
      if (!out.empty() && out.back().first == v) ++out.back().second;
      else out.emplace_back(v, 1);
    }
    return out;
  }
};

inline SuperclassFunction indicator(const ConnectionSet& S) {
  return SuperclassFunction::indicator(S.theory(), S.class_indices());
}

/// lambda_i = (F 1_S)(K_i), multiplicity |K_i|.
inline Spectrum spectrum_super(const SigmaTable& table, const ConnectionSet& S) {
  if (!(table.theory == S.theory())) throw DomainError("connection set and table belong to different theories");
  const SuperclassFunction lambda = super_fourier(table, indicator(S));
  Spectrum sp;
  const SuperTheory& t = table.theory;
  for (std::size_t i = 0; i < t.class_count(); ++i) {
    sp.entries.push_back({i, t.representative(i), lambda.values[i], table.dual_sizes[i]});
    sp.total += table.dual_sizes[i];
  }
  if (sp.total != t.ring().size()) throw CheckFailure("spectrum multiplicities do not sum to |R|");
  return sp;
}

/// {sum_{s in S} chi_r(s) : r in R}, canonically sorted.
inline std::vector<CycNumber> spectrum_direct(const ConnectionSet& S, std::int64_t bound = 4096) {
  const RingSpec& R = S.ring();
  if (R.size() > bound) throw BoundError("direct spectrum: |R| exceeds bound " + std::to_string(bound));
  const GeneratingFunctional& psi = S.theory().functional();
  std::vector<CycNumber> out;
  out.reserve(static_cast<std::size_t>(R.size()));
  for (Elem r = 0; r < R.size(); ++r) {
    RootSum acc(psi.order());
    for (Elem s : S.elements()) acc.add(psi(R.mul(r, s)));
    out.push_back(acc.value());
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

/// Adjacency eigenvalues from a dense symmetric eigensolver, ascending.
inline std::vector<double> spectrum_numeric(const CayleyGraph& g, std::int64_t bound = 1024) {
  const std::int64_t N = g.vertex_count();
  if (N > bound) throw BoundError("numeric spectrum: |R| exceeds bound " + std::to_string(bound));
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
  for (Elem u = 0; u < N; ++u)
    for (Elem v : g.neighbors(u)) A(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw CheckFailure("eigensolver did not converge");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + N);
  std::sort(out.begin(), out.end());
  return out;
}

/// Exact multiset equality of canonically sorted lists.
inline bool same_multiset(std::vector<CycNumber> a, std::vector<CycNumber> b) {
  if (a.size() != b.size()) return false;
  // bring everything into one field so the canonical order is comparable
  std::int64_t n = 1;
  for (const auto* v : {&a, &b})
    for (const auto& x : *v) n = arith::lcm(n, x.order());
  for (auto* v : {&a, &b})
    for (auto& x : *v) x = x.lift(static_cast<int>(n));
  std::sort(a.begin(), a.end(), CanonicalLess{});
  std::sort(b.begin(), b.end(), CanonicalLess{});
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) return false;
  return true;
}

/// Largest deviation between sorted real parts of `exact` and `numeric`;
/// also folds in any imaginary part of `exact`.
inline double numeric_deviation(const std::vector<CycNumber>& exact, const std::vector<double>& numeric) {
  if (exact.size() != numeric.size()) return INFINITY;
  std::vector<double> re;
  double dev = 0;
  for (const auto& v : exact) {
    const auto z = v.approx();
    re.push_back(z.real());
    dev = std::max(dev, std::abs(z.imag()));
  }
  std::sort(re.begin(), re.end());
  for (std::size_t k = 0; k < re.size(); ++k) dev = std::max(dev, std::abs(re[k] - numeric[k]));
  return dev;
}

/// Recover S from its class-indexed eigenvalue vector using F^2 = |R| id.
inline ConnectionSet reconstruct_S(const SigmaTable& table, const std::vector<CycNumber>& lambda) {
  const SuperTheory& t = table.theory;
  if (lambda.size() != t.class_count()) throw DomainError("eigenvalue vector has the wrong length");
  const auto degree = lambda[0].as_integer();
  if (!degree || *degree < 0) throw DomainError("not a super-Cayley spectrum: degree is not a nonnegative integer");
  SuperclassFunction f{lambda};
  const SuperclassFunction g = super_fourier(table, f);
  const Rational size(static_cast<long>(t.ring().size()));
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const auto q = g.values[i].as_rational();
    if (!q) throw DomainError("not a super-Cayley spectrum: recovered value is irrational");
    const Rational v = *q / size;
    if (v == 1) {
      if (i == 0) throw DomainError("not a super-Cayley spectrum: recovered set contains 0");
      chosen.push_back(i);
    } else if (v != 0) {
      throw DomainError("not a super-Cayley spectrum: recovered value " + v.get_str() + " is not 0 or 1");
    }
  }
  return ConnectionSet(t, std::move(chosen));
}

struct RationalityReport {
  std::int64_t n = 1;
  std::vector<std::int64_t> fixing_subgroup;  // H_fix, ascending
  std::int64_t minimal_field_degree = 1;
  bool is_integral = false;
  std::vector<Elem> stabilizer;       // U_S = {u : uS = S}
  std::vector<Elem> fixing_image;     // U_1, image of H_fix in R^x
  std::vector<std::int64_t> preimage; // H, preimage of U in (Z/n)^x
  bool preimage_fixes = false;        // H subset of H_fix
  bool stable_under_image = false;    // U_1 S = S
  bool image_matches_stabilizer = false;  // U_1 = U_S restricted to the image of (Z/n)^x
  bool image_equals_stabilizer = false;   // U_1 = U_S literally
  bool integral_iff_full = false;         // integral by values <=> H_fix = (Z/n)^x

  bool ok() const { return preimage_fixes && stable_under_image && image_matches_stabilizer && integral_iff_full; }
};

inline RationalityReport rationality(const ConnectionSet& S, const Spectrum& sp) {
  const RingSpec& R = S.ring();
  RationalityReport rep;
  rep.n = R.exponent();
  const int n = static_cast<int>(rep.n);
  const auto G = galois_group(n);
  const auto image_of = [&](std::int64_t a) { return R.scalar(a); };

  std::vector<CycNumber> values;
  for (const auto& e : sp.entries)
    if (std::none_of(values.begin(), values.end(), [&](const CycNumber& v) { return v == e.value; })) values.push_back(e.value);
  for (const auto& g : G) {
    const bool fixes = std::all_of(values.begin(), values.end(), [&](const CycNumber& v) {
      const CycNumber w = v.order() == n ? v : v.lift(n);
      return galois_apply(g, w) == w;
    });
    if (fixes) rep.fixing_subgroup.push_back(g.a);
    if (S.theory().unit_group().contains(image_of(g.a))) rep.preimage.push_back(g.a);
  }
  rep.minimal_field_degree = static_cast<std::int64_t>(G.size() / rep.fixing_subgroup.size());
  const bool values_integral = std::all_of(values.begin(), values.end(), [](const CycNumber& v) { return v.is_integer(); });
  const bool full = rep.fixing_subgroup.size() == G.size();
  rep.is_integral = values_integral;
  rep.integral_iff_full = values_integral == full;
  rep.preimage_fixes = std::all_of(rep.preimage.begin(), rep.preimage.end(), [&](std::int64_t a) {
    return std::binary_search(rep.fixing_subgroup.begin(), rep.fixing_subgroup.end(), a);
  });

  std::vector<Elem> image_all;
  for (const auto& g : G) image_all.push_back(image_of(g.a));
  for (std::int64_t a : rep.fixing_subgroup) rep.fixing_image.push_back(image_of(a));
  for (auto* v : {&image_all, &rep.fixing_image}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  for (Elem u : R.units())
    if (std::all_of(S.elements().begin(), S.elements().end(), [&](Elem s) { return S.contains(R.mul(u, s)); }))
      rep.stabilizer.push_back(u);

  rep.stable_under_image = std::all_of(rep.fixing_image.begin(), rep.fixing_image.end(), [&](Elem u) {
    return std::all_of(S.elements().begin(), S.elements().end(), [&](Elem s) { return S.contains(R.mul(u, s)); });
  });
  std::vector<Elem> restricted;
  std::set_intersection(rep.stabilizer.begin(), rep.stabilizer.end(), image_all.begin(), image_all.end(),
                        std::back_inserter(restricted));
  rep.image_matches_stabilizer = restricted == rep.fixing_image;
  rep.image_equals_stabilizer = rep.stabilizer == rep.fixing_image;
  return rep;
}

struct ZeroEigenvalueReport {
  bool has_zero = false;
  std::int64_t zero_multiplicity = 0;
  bool set_is_units = false;
  std::vector<HomogeneousIdeal> homogeneous;
  bool homogeneous_nonempty = false;
  std::optional<bool> prime;            // empty when the graph exceeds the primeness bound
  std::optional<std::vector<Elem>> prime_witness;
  bool bound_holds = true;              // zero multiplicity >= |R|(1 - 1/|I|) for each applicable I
  std::vector<std::string> bound_notes;
  bool connected = false;
  bool anti_connected = false;  // the complement is connected
  /// For S = U with Gamma connected and anti-connected: prime <=> no zero
  /// eigenvalue. Empty when not applicable.
  std::optional<bool> prime_matches_no_zero;
};

/// Zero-eigenvalue bookkeeping. The multiplicity bound applies to homogeneous
/// ideals I disjoint from S: then S is a union of I-cosets and lambda_r = 0
/// for every r outside Ann(I).
inline ZeroEigenvalueReport zero_eigenvalue_report(const ConnectionSet& S, const Spectrum& sp,
                                                   const std::vector<IdealHandle>& lattice, std::int64_t prime_bound = 512) {
  const SuperTheory& t = S.theory();
  const RingSpec& R = t.ring();
  ZeroEigenvalueReport rep;
  for (const auto& e : sp.entries)
    if (e.value.is_zero()) rep.zero_multiplicity += e.multiplicity;
  rep.has_zero = rep.zero_multiplicity > 0;
  rep.set_is_units = S.elements() == t.unit_group().elements();
  rep.homogeneous = homogeneous_ideals(S, lattice);
  rep.homogeneous_nonempty = !rep.homogeneous.empty();

  for (const auto& h : rep.homogeneous) {
    const auto& I = h.ideal;
    if (std::any_of(I.elements.begin(), I.elements.end(), [&](Elem x) { return S.contains(x); })) continue;
    const std::int64_t required = R.size() - R.size() / static_cast<std::int64_t>(I.size());
    ElementMask ann(static_cast<std::size_t>(R.size()), 0);
    for (Elem y : I.annihilator) ann[y] = 1;
    bool vanishes = true;
    for (const auto& e : sp.entries)
      for (Elem r : t.class_of(e.class_index))
        if (!ann[r] && !e.value.is_zero()) vanishes = false;
    if (rep.zero_multiplicity < required || 2 * required < R.size() || !vanishes) {
      rep.bound_holds = false;
      rep.bound_notes.push_back("ideal of size " + std::to_string(I.size()) + ": zero multiplicity " +
                                std::to_string(rep.zero_multiplicity) + " < " + std::to_string(required));
    }
  }
  rep.connected = connectivity(CayleyGraph(S)).connected;
  rep.anti_connected = connectivity(CayleyGraph(complement(S))).connected;
  if (R.size() <= prime_bound) {
    const Primeness p = is_prime(CayleyGraph(S), prime_bound);
    rep.prime = p.prime;
    rep.prime_witness = p.witness;
    if (rep.set_is_units && rep.connected && rep.anti_connected) rep.prime_matches_no_zero = p.prime == !rep.has_zero;
  }
  return rep;
}

/// Exact identities every spectrum satisfies: trace zero, second moment |R||S|,
/// degree entry |S| once, realness.
inline CheckReport spectrum_identities(const ConnectionSet& S, const Spectrum& sp) {
  CheckReport rep{"spectrum-identities", {}, 0};
  const int n = S.theory().order();
  CycNumber trace = CycNumber::zero(n), second = CycNumber::zero(n);
  for (const auto& e : sp.entries) {
    const Rational m(static_cast<long>(e.multiplicity));
    trace += e.value * m;
    second += e.value * e.value * m;
    if (conj(e.value) != e.value) rep.fail("eigenvalue of class " + std::to_string(e.class_index) + " is not real");
  }
  if (!trace.is_zero()) rep.fail("trace is " + trace.to_string());
  const long edges = static_cast<long>(S.ring().size() * static_cast<std::int64_t>(S.size()));
  if (second != CycNumber::integer(n, edges)) rep.fail("second moment is " + second.to_string());
  if (sp.entries.front().value != CycNumber::integer(n, static_cast<long>(S.size())) || sp.entries.front().multiplicity != 1)
    rep.fail("degree entry is not |S| with multiplicity 1");
  rep.checked += 4;
  return rep;
}

}  // namespace supercayley
