#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "errors.hpp"
#include "ring.hpp"

namespace supercayley {

/// Membership mask over ring indices.
using ElementMask = std::vector<std::uint8_t>;

struct IdealHandle {
  std::vector<Elem> elements;     // ascending
  std::vector<Elem> generators;   // a small generating list
  std::vector<Elem> annihilator;  // Ann_R(I), ascending
  ElementMask mask;

  std::size_t size() const { return elements.size(); }
  bool contains(Elem x) const { return mask[x] != 0; }
  bool is_zero() const { return elements.size() == 1; }
  friend bool operator==(const IdealHandle& a, const IdealHandle& b) { return a.elements == b.elements; }
};

namespace detail {

inline ElementMask principal_mask(const RingSpec& ring, Elem x) {
  ElementMask m(static_cast<std::size_t>(ring.size()), 0);
  for (Elem a = 0; a < static_cast<Elem>(ring.size()); ++a) m[ring.mul(x, a)] = 1;
  return m;
}

/// Sum of two additive subgroups given as masks.
inline ElementMask subgroup_sum(const RingSpec& ring, const ElementMask& a, const ElementMask& b) {
  ElementMask out = a;
  std::vector<Elem> base;
  for (Elem x = 0; x < static_cast<Elem>(a.size()); ++x)
    if (a[x]) base.push_back(x);
  for (Elem y = 0; y < static_cast<Elem>(b.size()); ++y) {
    if (!b[y] || out[y]) continue;
    for (Elem s : base) out[ring.add(y, s)] = 1;
  }
  return out;
}

inline std::vector<Elem> mask_elements(const ElementMask& m) {
  std::vector<Elem> out;
  for (Elem x = 0; x < static_cast<Elem>(m.size()); ++x)
    if (m[x]) out.push_back(x);
  return out;
}

}  // namespace detail

/// Ann_R(M) for the ideal generated by `generators`.
inline std::vector<Elem> annihilator(const RingSpec& ring, std::span<const Elem> generators) {
  std::vector<Elem> out;
  for (Elem y = 0; y < static_cast<Elem>(ring.size()); ++y)
    if (std::all_of(generators.begin(), generators.end(), [&](Elem g) { return ring.mul(y, g) == 0; })) out.push_back(y);
  return out;
}

/// The ideal generated by a set of elements: additive closure of the principal ideals gR.
inline IdealHandle ideal_generated_by(const RingSpec& ring, std::span<const Elem> generators) {
  ElementMask m(static_cast<std::size_t>(ring.size()), 0);
  m[0] = 1;
  for (Elem g : generators) m = detail::subgroup_sum(ring, m, detail::principal_mask(ring, g));
  IdealHandle h;
  h.elements = detail::mask_elements(m);
  h.mask = std::move(m);
  for (Elem g : generators)
    if (g != 0) h.generators.push_back(g);
  h.annihilator = annihilator(ring, h.generators);
  return h;
}

inline IdealHandle principal_ideal(const RingSpec& ring, Elem x) {
  const Elem gens[] = {x};
  return ideal_generated_by(ring, gens);
}

inline IdealHandle ideal_sum(const RingSpec& ring, const IdealHandle& a, const IdealHandle& b) {
  std::vector<Elem> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  IdealHandle h;
  h.mask = detail::subgroup_sum(ring, a.mask, b.mask);
  h.elements = detail::mask_elements(h.mask);
  h.generators = std::move(gens);
  h.annihilator = annihilator(ring, h.generators);
  return h;
}

/// Every ideal of R exactly once, as the closure of sums of principal ideals.
/// Sorted by (size, elements); the zero ideal comes first and R last.
inline std::vector<IdealHandle> ideal_lattice(const RingSpec& ring, std::int64_t max_ring = 4096) {
  if (ring.size() > max_ring)
    throw BoundError("ideal lattice: |R| = " + std::to_string(ring.size()) + " exceeds bound " + std::to_string(max_ring));
  const auto N = static_cast<Elem>(ring.size());

  std::map<ElementMask, std::vector<Elem>> found;  // mask -> generators
  std::vector<std::pair<ElementMask, Elem>> principals;
  for (Elem x = 0; x < N; ++x) {
    ElementMask m = detail::principal_mask(ring, x);
    if (found.emplace(m, x == 0 ? std::vector<Elem>{} : std::vector<Elem>{x}).second) principals.emplace_back(std::move(m), x);
  }
  std::vector<ElementMask> work;
  for (const auto& [m, g] : found) work.push_back(m);
  for (std::size_t w = 0; w < work.size(); ++w) {
    const ElementMask current = work[w];
    const std::vector<Elem> gens = found.at(current);
    for (const auto& [pm, x] : principals) {
      bool contained = true;
      for (Elem e = 0; e < N && contained; ++e) contained = !pm[e] || current[e];
      if (contained) continue;
      ElementMask sum = detail::subgroup_sum(ring, current, pm);
      if (found.count(sum)) continue;
      std::vector<Elem> g = gens;
      g.push_back(x);
      found.emplace(sum, std::move(g));
      work.push_back(std::move(sum));
    }
  }

  std::vector<IdealHandle> out;
  out.reserve(found.size());
  for (auto& [m, gens] : found) {
    IdealHandle h;
    h.mask = m;
    h.elements = detail::mask_elements(m);
    // Drop generators that the others already produce.
    std::vector<Elem> g = gens;
    for (std::size_t k = 0; k < g.size() && g.size() > 1;) {
      std::vector<Elem> rest = g;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      if (ideal_generated_by(ring, rest).elements == h.elements) {
        g = std::move(rest);
      } else {
        ++k;
      }
    }
    h.generators = std::move(g);
    h.annihilator = annihilator(ring, h.generators);
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const IdealHandle& a, const IdealHandle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements < b.elements;
  });
  return out;
}

/// Maximal ideals: proper ideals contained in no other proper ideal.
inline std::vector<IdealHandle> maximal_ideals(const std::vector<IdealHandle>& lattice, std::int64_t ring_size) {
  std::vector<IdealHandle> out;
  for (const auto& I : lattice) {
    if (static_cast<std::int64_t>(I.size()) == ring_size) continue;
    bool maximal = true;
    for (const auto& J : lattice) {
      if (static_cast<std::int64_t>(J.size()) == ring_size || J.size() <= I.size()) continue;
      if (std::all_of(I.elements.begin(), I.elements.end(), [&](Elem x) { return J.contains(x); })) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(I);
  }
  return out;
}

inline bool is_nilpotent(const RingSpec& ring, Elem x) {
  Elem p = x;
  for (std::int64_t k = 0; k <= 64 && p != 0; ++k) p = ring.mul(p, x);
  return p == 0;
}

/// An ideal in a finite commutative ring is nilpotent iff all its elements are.
inline bool is_nilpotent_ideal(const RingSpec& ring, const IdealHandle& I) {
  return std::all_of(I.elements.begin(), I.elements.end(), [&](Elem x) { return is_nilpotent(ring, x); });
}

}  // namespace supercayley
