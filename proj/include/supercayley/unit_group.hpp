#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "ideal.hpp"
#include "ring.hpp"

namespace supercayley {

enum class UnitSubgroupKind { Full, Squares, PthPowers, Involutions, Jacobi, Generated };

struct UnitSubgroupSpec {
  UnitSubgroupKind kind = UnitSubgroupKind::Full;
  std::int64_t p = 0;           // PthPowers exponent
  std::vector<Elem> generators;  // Generated

  static UnitSubgroupSpec full() { return {UnitSubgroupKind::Full, 0, {}}; }
  static UnitSubgroupSpec squares() { return {UnitSubgroupKind::Squares, 2, {}}; }
  static UnitSubgroupSpec pth_powers(std::int64_t p) { return {UnitSubgroupKind::PthPowers, p, {}}; }
  static UnitSubgroupSpec involutions() { return {UnitSubgroupKind::Involutions, 0, {}}; }
  static UnitSubgroupSpec jacobi() { return {UnitSubgroupKind::Jacobi, 0, {}}; }
  static UnitSubgroupSpec generated(std::vector<Elem> gens) { return {UnitSubgroupKind::Generated, 0, std::move(gens)}; }
};

/// A subgroup U of R^x containing -1.
class UnitSubgroup {
 public:
  UnitSubgroup(RingSpec ring, std::vector<Elem> elements, std::vector<Elem> generators, std::string descriptor)
      : ring_(std::move(ring)), elements_(std::move(elements)), generators_(std::move(generators)),
        descriptor_(std::move(descriptor)) {
    std::sort(elements_.begin(), elements_.end());
    mask_.assign(static_cast<std::size_t>(ring_.size()), 0);
    for (Elem u : elements_) mask_[u] = 1;
  }

  const RingSpec& ring() const { return ring_; }
  const std::vector<Elem>& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }
  const std::string& descriptor() const { return descriptor_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Elem x) const { return mask_[x] != 0; }

 private:
  RingSpec ring_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
  std::string descriptor_;
  ElementMask mask_;
};

/// Multiplicative closure of a set of units (always contains 1).
inline std::vector<Elem> multiplicative_closure(const RingSpec& ring, std::span<const Elem> gens) {
  ElementMask seen(static_cast<std::size_t>(ring.size()), 0);
  std::vector<Elem> out{ring.one()};
  seen[ring.one()] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Elem g : gens) {
      const Elem y = ring.mul(out[k], g);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Greedy generating list: scan ascending, keep anything not yet generated.
inline std::vector<Elem> greedy_generators(const RingSpec& ring, const std::vector<Elem>& elements) {
  std::vector<Elem> gens;
  std::vector<Elem> current{ring.one()};
  for (Elem u : elements) {
    if (std::binary_search(current.begin(), current.end(), u)) continue;
    gens.push_back(u);
    current = multiplicative_closure(ring, gens);
  }
  return gens;
}

inline UnitSubgroup close_with_minus_one(const RingSpec& ring, std::vector<Elem> seeds, std::string descriptor) {
  seeds.push_back(ring.neg(ring.one()));
  std::vector<Elem> elements = multiplicative_closure(ring, seeds);
  std::vector<Elem> gens = greedy_generators(ring, elements);
  return UnitSubgroup(ring, std::move(elements), std::move(gens), std::move(descriptor));
}

}  // namespace detail

inline std::string describe(const UnitSubgroupSpec& spec, const RingSpec& ring) {
  switch (spec.kind) {
    case UnitSubgroupKind::Full: return "full";
    case UnitSubgroupKind::Squares: return "squares";
    case UnitSubgroupKind::PthPowers: return "pth-powers:" + std::to_string(spec.p);
    case UnitSubgroupKind::Involutions: return "involutions";
    case UnitSubgroupKind::Jacobi: return "jacobi";
    case UnitSubgroupKind::Generated: {
      std::string s = "gen:";
      for (std::size_t k = 0; k < spec.generators.size(); ++k) s += (k ? ";" : "") + ring.render_item(spec.generators[k]);
      return s;
    }
  }
  return "?";
}

/// Build U of the requested kind, closed and with -1 adjoined.
inline UnitSubgroup subgroup_from(const RingSpec& ring, const UnitSubgroupSpec& spec) {
  const std::vector<Elem> all_units = ring.units();
  std::vector<Elem> seeds;
  switch (spec.kind) {
    case UnitSubgroupKind::Full:
      seeds = all_units;
      break;
    case UnitSubgroupKind::Squares:
    case UnitSubgroupKind::PthPowers: {
      const std::int64_t p = spec.kind == UnitSubgroupKind::Squares ? 2 : spec.p;
      if (p < 1) throw DomainError("power exponent must be positive");
      for (Elem u : all_units) seeds.push_back(ring.pow(u, static_cast<std::uint64_t>(p)));
      break;
    }
    case UnitSubgroupKind::Involutions:
      for (Elem u : all_units)
        if (ring.mul(u, u) == ring.one()) seeds.push_back(u);
      break;
    case UnitSubgroupKind::Jacobi: {
      const auto& comps = ring.components();
      if (comps.size() != 1 || comps[0].kind != ComponentKind::Residue || comps[0].modulus % 2 == 0)
        throw DomainError("Jacobi kernel needs a single Z/m component with m odd");
      const std::int64_t m = comps[0].modulus;
      for (Elem u : all_units)
        if (arith::jacobi_symbol(ring.element(u).coords[0][0], m) == 1) seeds.push_back(u);
      break;
    }
    case UnitSubgroupKind::Generated:
      for (Elem g : spec.generators) {
        if (g >= ring.size() || !ring.is_unit(g))
          throw DomainError("generator " + (g < ring.size() ? ring.render(g) : std::to_string(g)) + " is not a unit");
        seeds.push_back(g);
      }
      break;
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return detail::close_with_minus_one(ring, std::move(seeds), describe(spec, ring));
}

/// Raw set {u^p : u in R^x}, without adjoining -1.
inline std::vector<Elem> power_set_of_units(const RingSpec& ring, std::int64_t p) {
  std::vector<Elem> out;
  for (Elem u : ring.units()) out.push_back(ring.pow(u, static_cast<std::uint64_t>(p)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace supercayley
