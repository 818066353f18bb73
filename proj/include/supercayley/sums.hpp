#pragma once

/**
 * Ramanujan, Gauss and Heilbronn sums over finite Frobenius rings, and
 * the identities tying them to spectra.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "ring.hpp"
#include "supercharacter.hpp"
#include "unit_group.hpp"

namespace supercayley {

/// c(R, U, chi_g) = sum_{u in U} chi(g u).
inline CycNumber ramanujan(const GeneratingFunctional& psi, std::span<const Elem> U, Elem g) {
  const RingSpec& R = psi.ring();
  RootSum acc(psi.order());
  for (Elem u : U) acc.add(psi(R.mul(g, u)));
  return acc.value();
}

inline CycNumber ramanujan(const UnitSubgroup& U, Elem g) { return ramanujan(GeneratingFunctional(U.ring()), U.elements(), g); }

/// Classical value mu(n/d) phi(n)/phi(n/d), d = gcd(n, g), for U = (Z/n)^x.
inline std::int64_t hoelder(std::int64_t n, std::int64_t g) {
  const std::int64_t q = n / arith::gcd(arith::mod(g, n), n);
  return arith::mobius(q) * (arith::euler_phi(n) / arith::euler_phi(q));
}

struct ClosedFormRamanujan {
  CycNumber value;            // phi(R)/phi(R') mu(R'), R' = R/Ann(g)
  CycNumber direct;           // sum over R^x
  std::int64_t phi_ring = 0;
  std::int64_t phi_quotient = 0;
  int mu_quotient = 0;
  std::int64_t local_factors = 0;  // of R' when reduced
  bool agrees = false;
};

namespace detail {

/// |R'^x| for R' = R/Ann(g): units of R surject onto R'^x and u, v agree in
/// R' iff ug = vg, so this is the size of the unit orbit of g.
inline std::int64_t quotient_unit_count(const RingSpec& R, const std::vector<Elem>& units, Elem g) {
  std::vector<Elem> orbit;
  for (Elem u : units) orbit.push_back(R.mul(u, g));
  std::sort(orbit.begin(), orbit.end());
  return static_cast<std::int64_t>(std::unique(orbit.begin(), orbit.end()) - orbit.begin());
}

/// R' = R/Ann(g) is reduced iff a^2 g = 0 forces a g = 0 (a nonzero
/// nilpotent x with x^k = 0 gives the square-zero x^(k-1)).
inline bool quotient_is_reduced(const RingSpec& R, Elem g) {
  for (Elem a = 0; a < R.size(); ++a) {
    const Elem ag = R.mul(a, g);
    if (ag != 0 && R.mul(a, ag) == 0) return false;
  }
  return true;
}

/// Number of idempotents of R/Ann(g): classes of a with (a^2 - a) g = 0.
inline std::int64_t quotient_idempotents(const RingSpec& R, Elem g) {
  std::int64_t solutions = 0, annihilated = 0;
  for (Elem a = 0; a < R.size(); ++a) {
    if (R.mul(R.sub(R.mul(a, a), a), g) == 0) ++solutions;
    if (R.mul(a, g) == 0) ++annihilated;
  }
  return solutions / annihilated;
}

}  // namespace detail

/// Closed form for the full-unit Ramanujan sum, evaluated and checked against
/// the direct sum. mu(R') is 0 when R' has a nonzero nilpotent and (-1)^k when
/// R' is a product of k fields (k read off from its 2^k idempotents).
/// `units` must be R^x; pass it in when evaluating many g.
inline ClosedFormRamanujan ramanujan_closed_form(const GeneratingFunctional& psi, const std::vector<Elem>& units, Elem g) {
  const RingSpec& R = psi.ring();
  const int n = psi.order();
  ClosedFormRamanujan out;
  out.phi_ring = static_cast<std::int64_t>(units.size());
  out.direct = ramanujan(psi, units, g);
  if (g == 0) {
    out.value = CycNumber::integer(n, static_cast<long>(out.phi_ring));
    out.phi_quotient = 1;
    out.mu_quotient = 1;
  } else {
    out.phi_quotient = detail::quotient_unit_count(R, units, g);
    if (detail::quotient_is_reduced(R, g)) {
      const std::int64_t idem = detail::quotient_idempotents(R, g);
      while ((std::int64_t{1} << out.local_factors) < idem) ++out.local_factors;
      out.mu_quotient = out.local_factors % 2 == 0 ? 1 : -1;
    }
    if (out.phi_ring % out.phi_quotient != 0) throw CheckFailure("phi(R') does not divide phi(R)");
    out.value = CycNumber::integer(n, static_cast<long>(out.mu_quotient * (out.phi_ring / out.phi_quotient)));
  }
  out.agrees = out.value == out.direct;
  return out;
}

inline ClosedFormRamanujan ramanujan_closed_form(const GeneratingFunctional& psi, Elem g) {
  return ramanujan_closed_form(psi, psi.ring().units(), g);
}

inline ClosedFormRamanujan ramanujan_closed_form(const RingSpec& R, Elem g) {
  return ramanujan_closed_form(GeneratingFunctional(R), g);
}

/// sigma_l(K_i) = |U r_l| / |U r_l r_i| * c(R/Ann(x), U_x, chi_x), x = r_l r_i,
/// where the quotient sum runs over the distinct elements of U x.
inline CheckReport quotient_formula_check(const SigmaTable& table) {
  CheckReport rep{"quotient-formula", {}, 0};
  const SuperTheory& t = table.theory;
  const RingSpec& R = t.ring();
  auto orbit = [&](Elem x) {
    std::vector<Elem> o;
    for (Elem u : t.unit_group().elements()) o.push_back(R.mul(u, x));
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    return o;
  };
  for (std::size_t l = 0; l < t.class_count(); ++l)
    for (std::size_t i = 0; i < t.class_count(); ++i) {
      const Elem x = R.mul(t.representative(l), t.representative(i));
      const auto Ux = orbit(x);
      RootSum acc(t.order());
      for (Elem y : Ux) acc.add(t.functional()(y));
      const Rational scale(static_cast<long>(t.class_size(l)), static_cast<long>(Ux.size()));
      const CycNumber predicted = acc.value() * scale;
      if (predicted != table.sigma[l][i])
        rep.fail("sigma_" + std::to_string(l) + "(K_" + std::to_string(i) + ") = " + table.sigma[l][i].to_string() +
                 " but the quotient formula gives " + predicted.to_string());
      ++rep.checked;
    }
  return rep;
}

enum class MultCharKind { Trivial, Jacobi, PowerResidue };

/// A multiplicative character with values z_d^e(u) on units and 0 elsewhere.
struct MultChar {
  RingSpec ring;
  std::int64_t d = 1;                 // exact order
  std::vector<std::int64_t> exponent; // per element; -1 off the units
  std::string descriptor;

  bool is_unit(Elem x) const { return exponent[x] >= 0; }
  CycNumber value(Elem x, std::int64_t power = 1) const {
    if (!is_unit(x)) return CycNumber::zero(static_cast<int>(d));
    return CycNumber::root_of_unity(static_cast<int>(d), exponent[x] * power);
  }
  /// ker(rho) as a sorted list.
  std::vector<Elem> kernel() const {
    std::vector<Elem> out;
    for (Elem x = 0; x < exponent.size(); ++x)
      if (exponent[x] == 0) out.push_back(x);
    return out;
  }
};

namespace detail {

inline void reduce_to_exact_order(MultChar& rho) {
  std::int64_t g = rho.d;
  for (auto e : rho.exponent)
    if (e > 0) g = arith::gcd(g, e);
  if (std::all_of(rho.exponent.begin(), rho.exponent.end(), [](std::int64_t e) { return e <= 0; })) g = rho.d;
  for (auto& e : rho.exponent)
    if (e > 0) e /= g;
  rho.d /= g;
}

inline std::int64_t multiplicative_order(const RingSpec& R, Elem u, std::int64_t group_order) {
  std::int64_t ord = group_order;
  for (const auto& [p, e] : arith::factorize(group_order))
    while (ord % p == 0 && R.pow(u, static_cast<std::uint64_t>(ord / p)) == R.one()) ord /= p;
  return ord;
}

}  // namespace detail

/// Build a character of the requested kind; power_residue needs cyclic R^x and d | |R^x|.
inline MultChar build_mult_char(const RingSpec& R, MultCharKind kind, std::int64_t d = 2) {
  MultChar rho{R, 1, std::vector<std::int64_t>(static_cast<std::size_t>(R.size()), -1), ""};
  const auto units = R.units();
  switch (kind) {
    case MultCharKind::Trivial:
      rho.descriptor = "trivial";
      for (Elem u : units) rho.exponent[u] = 0;
      return rho;
    case MultCharKind::Jacobi: {
      const auto& comps = R.components();
      if (comps.size() != 1 || comps[0].kind != ComponentKind::Residue || comps[0].modulus % 2 == 0)
        throw DomainError("Jacobi character needs a single Z/m component with m odd");
      rho.descriptor = "jacobi";
      rho.d = 2;
      for (Elem u : units) rho.exponent[u] = arith::jacobi_symbol(R.element(u).coords[0][0], comps[0].modulus) == 1 ? 0 : 1;
      break;
    }
    case MultCharKind::PowerResidue: {
      const auto order = static_cast<std::int64_t>(units.size());
      if (d < 1 || order % d != 0) throw DomainError("character order must divide |R^x| = " + std::to_string(order));
      const auto gen = std::find_if(units.begin(), units.end(),
                                    [&](Elem u) { return detail::multiplicative_order(R, u, order) == order; });
      if (gen == units.end()) throw DomainError("R^x is not cyclic; no power-residue character");
      // Walking the powers of a generator yields every discrete log at once.
      Elem x = R.one();
      for (std::int64_t k = 0; k < order; ++k) {
        rho.exponent[x] = k % d;
        x = R.mul(x, *gen);
      }
      rho.d = d;
      rho.descriptor = "power-residue:" + std::to_string(d);
      break;
    }
  }
  detail::reduce_to_exact_order(rho);
  return rho;
}

/// Multiplicativity and order: rho(uv) = rho(u) rho(v), e(u) in [0, d).
inline bool is_multiplicative(const MultChar& rho) {
  const RingSpec& R = rho.ring;
  const auto units = R.units();
  for (Elem u : units) {
    if (rho.exponent[u] < 0 || rho.exponent[u] >= rho.d) return false;
    for (Elem v : units)
      if (rho.exponent[R.mul(u, v)] != (rho.exponent[u] + rho.exponent[v]) % rho.d) return false;
  }
  return true;
}

/// tau(rho^power, chi_g) = sum_r rho(r)^power chi(g r), in Q(z_lcm(d, n)).
inline CycNumber gauss(const MultChar& rho, Elem g, std::int64_t power = 1, const std::optional<GeneratingFunctional>& psi = {}) {
  const GeneratingFunctional f = psi ? *psi : GeneratingFunctional(rho.ring);
  const RingSpec& R = rho.ring;
  const std::int64_t n = f.order();
  const std::int64_t L = arith::lcm(rho.d, n);
  RootSum acc(static_cast<int>(L));
  for (Elem u = 0; u < R.size(); ++u) {
    if (!rho.is_unit(u)) continue;
    acc.add(rho.exponent[u] * power * (L / rho.d) + f(R.mul(g, u)) * (L / n));
  }
  return acc.value();
}

/// 1_ker(a) = (1/d) sum_{i=1}^d rho^i(a) pointwise.
inline bool kernel_indicator_check(const MultChar& rho) {
  for (Elem a = 0; a < rho.exponent.size(); ++a) {
    RootSum acc(static_cast<int>(rho.d));
    if (rho.is_unit(a))
      for (std::int64_t i = 1; i <= rho.d; ++i) acc.add(rho.exponent[a] * i);
    const CycNumber lhs = acc.value() / Rational(static_cast<long>(rho.d));
    if (lhs != CycNumber::integer(static_cast<int>(rho.d), rho.exponent[a] == 0 ? 1 : 0)) return false;
  }
  return true;
}

/// c(R, ker rho, chi_g) = (1/d) sum_{i=1}^d tau(rho^i, chi_g).
inline bool ramanujan_via_gauss_check(const MultChar& rho, Elem g) {
  const GeneratingFunctional psi(rho.ring);
  const auto ker = rho.kernel();
  const CycNumber lhs = ramanujan(psi, ker, g);
  CycNumber rhs = CycNumber::zero(psi.order());
  for (std::int64_t i = 1; i <= rho.d; ++i) rhs += gauss(rho, g, i, psi);
  return lhs == rhs / Rational(static_cast<long>(rho.d));
}

/// H_p(a) = sum_{l=1}^{p-1} z_{p^2}^{a l^p}; checked against the Ramanujan sum
/// over the p-th powers of units of Z/p^2.
inline CycNumber heilbronn(std::int64_t p, std::int64_t a) {
  if (!arith::is_prime(p)) throw DomainError("Heilbronn sums need a prime p");
  const std::int64_t q = p * p;
  RootSum acc(static_cast<int>(q));
  for (std::int64_t l = 1; l < p; ++l) acc.add(arith::mulmod(arith::mod(a, q), arith::powmod(l, p, q), q));
  const CycNumber h = acc.value();
  const RingSpec R(std::vector<Component>{Component::residue(q)});
  const auto powers = power_set_of_units(R, p);
  if (ramanujan(GeneratingFunctional(R), powers, R.scalar(a)) != h)
    throw CheckFailure("Heilbronn sum differs from the Ramanujan sum over p-th powers");
  return h;
}

}  // namespace supercayley
