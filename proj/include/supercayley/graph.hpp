#pragma once

/**
 * U-unitary Cayley graphs Gamma(R, S): connection sets as unions of
 * superclasses, connectivity, homogeneous ideals and primeness.
 */

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ideal.hpp"
#include "ring.hpp"
#include "supercharacter.hpp"

namespace supercayley {

/// A union of nonzero superclasses; symmetric and U-stable by construction.
class ConnectionSet {
 public:
  ConnectionSet(SuperTheory theory, std::vector<std::size_t> class_indices)
      : theory_(std::move(theory)), classes_(std::move(class_indices)) {
    std::sort(classes_.begin(), classes_.end());
    classes_.erase(std::unique(classes_.begin(), classes_.end()), classes_.end());
    mask_.assign(static_cast<std::size_t>(theory_.ring().size()), 0);
    for (auto i : classes_) {
      if (i == 0) throw DomainError("a connection set cannot contain 0");
      if (i >= theory_.class_count()) throw DomainError("class index " + std::to_string(i) + " out of range");
      for (Elem x : theory_.class_of(i)) mask_[x] = 1;
    }
    elements_ = detail::mask_elements(mask_);
  }

  const SuperTheory& theory() const { return theory_; }
  const RingSpec& ring() const { return theory_.ring(); }
  const std::vector<std::size_t>& class_indices() const { return classes_; }
  const std::vector<Elem>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Elem x) const { return mask_[x] != 0; }
  const ElementMask& mask() const { return mask_; }

  friend bool operator==(const ConnectionSet& a, const ConnectionSet& b) {
    return a.theory_ == b.theory_ && a.classes_ == b.classes_;
  }

 private:
  SuperTheory theory_;
  std::vector<std::size_t> classes_;
  std::vector<Elem> elements_;
  ElementMask mask_;
};

/// All nonzero classes.
inline ConnectionSet all_nonzero(const SuperTheory& t) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i < t.class_count(); ++i) idx.push_back(i);
  return ConnectionSet(t, std::move(idx));
}

/// S = U, which is the class of 1.
inline ConnectionSet unit_connection_set(const SuperTheory& t) {
  return ConnectionSet(t, {t.class_index(t.ring().one())});
}

inline ConnectionSet complement(const ConnectionSet& S) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i < S.theory().class_count(); ++i)
    if (!std::binary_search(S.class_indices().begin(), S.class_indices().end(), i)) idx.push_back(i);
  return ConnectionSet(S.theory(), std::move(idx));
}

struct Classification {
  std::optional<ConnectionSet> set;
  std::vector<std::size_t> partial_classes;  // classes met but not contained

  bool accepted() const { return set.has_value(); }
};

/// Decide whether a raw symmetric 0-free set is a union of superclasses.
inline Classification classify_set(const SuperTheory& t, const std::vector<Elem>& raw) {
  const RingSpec& R = t.ring();
  ElementMask in(static_cast<std::size_t>(R.size()), 0);
  for (Elem x : raw) {
    if (x >= R.size()) throw DomainError("element index out of range");
    in[x] = 1;
  }
  if (in[0]) throw DomainError("connection set contains 0");
  for (Elem x : raw)
    if (!in[R.neg(x)]) throw DomainError("connection set is not symmetric: missing " + R.render(R.neg(x)));
  Classification out;
  std::vector<std::size_t> full;
  for (std::size_t i = 1; i < t.class_count(); ++i) {
    const auto& K = t.class_of(i);
    const auto hit = std::count_if(K.begin(), K.end(), [&](Elem x) { return in[x] != 0; });
    if (hit == 0) continue;
    if (static_cast<std::size_t>(hit) == K.size()) full.push_back(i);
    else out.partial_classes.push_back(i);
  }
  if (out.partial_classes.empty()) out.set.emplace(t, std::move(full));
  return out;
}

/// Gamma(R, S): u ~ v iff u - v in S. Dense bit rows up to kDenseLimit vertices,
/// adjacency lists above.
class CayleyGraph {
 public:
  static constexpr std::int64_t kDenseLimit = 2048;

  explicit CayleyGraph(ConnectionSet S) : S_(std::move(S)) {
    const RingSpec& R = S_.ring();
    n_ = R.size();
    if (n_ <= kDenseLimit) {
      words_ = static_cast<std::size_t>((n_ + 63) / 64);
      bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
      for (Elem u = 0; u < n_; ++u)
        for (Elem s : S_.elements()) {
          const Elem v = R.add(u, s);
          bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        }
    } else {
      lists_.resize(static_cast<std::size_t>(n_));
      for (Elem u = 0; u < n_; ++u) {
        for (Elem s : S_.elements()) lists_[u].push_back(R.add(u, s));
        std::sort(lists_[u].begin(), lists_[u].end());
      }
    }
  }

  std::int64_t vertex_count() const { return n_; }
  const ConnectionSet& connection() const { return S_; }
  bool dense() const { return !bits_.empty() || n_ == 0; }
  bool adjacent(Elem u, Elem v) const {
    if (!bits_.empty()) return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
    return S_.contains(S_.ring().sub(v, u));
  }
  std::vector<Elem> neighbors(Elem u) const {
    if (!lists_.empty()) return lists_[u];
    std::vector<Elem> out;
    for (Elem s : S_.elements()) out.push_back(S_.ring().add(u, s));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::int64_t degree(Elem u) const { return static_cast<std::int64_t>(neighbors(u).size()); }

  /// Breadth-first distances from `source`; -1 for unreachable vertices.
  std::vector<std::int64_t> distances(Elem source) const {
    std::vector<std::int64_t> dist(static_cast<std::size_t>(n_), -1);
    std::deque<Elem> queue{source};
    dist[source] = 0;
    const RingSpec& R = S_.ring();
    while (!queue.empty()) {
      const Elem u = queue.front();
      queue.pop_front();
      for (Elem s : S_.elements()) {
        const Elem v = R.add(u, s);
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return dist;
  }

 private:
  ConnectionSet S_;
  std::int64_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Elem>> lists_;
};

struct Connectivity {
  bool connected = false;
  std::int64_t components = 0;
  std::optional<std::int64_t> diameter;  // empty when disconnected
};

/// Components and diameter from vertex 0; translations act transitively.
inline Connectivity connectivity(const CayleyGraph& g) {
  const auto dist = g.distances(0);
  std::int64_t reached = 0, ecc = 0;
  for (auto d : dist)
    if (d >= 0) {
      ++reached;
      ecc = std::max(ecc, d);
    }
  Connectivity c;
  c.components = g.vertex_count() / reached;
  c.connected = c.components == 1;
  if (c.connected) c.diameter = ecc;
  return c;
}

struct ConnectivityCriterion {
  bool connected = false;
  std::optional<std::int64_t> t;
  std::optional<std::int64_t> bound;
  std::int64_t unit_diameter = 0;         // diam Gamma(R, U)
  std::optional<std::int64_t> diameter;   // measured diam Gamma(R, S)
  bool bound_holds = true;
};

/// Ideal-sum test for connectivity with the diameter bound diam(Gamma(R,U)) * t,
/// where t is the fewest selected classes whose ideals sum to R.
inline ConnectivityCriterion connectivity_criterion(const ConnectionSet& S) {
  const SuperTheory& t = S.theory();
  const RingSpec& R = t.ring();
  const Connectivity cu = connectivity(CayleyGraph(unit_connection_set(t)));
  if (!cu.connected) throw DomainError("Gamma(R, U) is disconnected; the diameter bound does not apply");

  ConnectivityCriterion out;
  out.unit_diameter = *cu.diameter;
  const Connectivity cs = connectivity(CayleyGraph(S));
  out.diameter = cs.diameter;

  // Distinct principal ideals of the selected representatives, keeping only maximal ones.
  std::vector<IdealHandle> ideals;
  for (auto i : S.class_indices()) {
    IdealHandle I = principal_ideal(R, t.representative(i));
    if (std::none_of(ideals.begin(), ideals.end(), [&](const IdealHandle& J) { return J == I; })) ideals.push_back(std::move(I));
  }
  auto contained = [](const IdealHandle& a, const IdealHandle& b) {
    return std::all_of(a.elements.begin(), a.elements.end(), [&](Elem x) { return b.contains(x); });
  };
  std::vector<IdealHandle> top;
  for (std::size_t a = 0; a < ideals.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < ideals.size() && !dominated; ++b)
      dominated = b != a && ideals[a].size() < ideals[b].size() && contained(ideals[a], ideals[b]);
    if (!dominated) top.push_back(ideals[a]);
  }

  IdealHandle total = principal_ideal(R, 0);
  for (const auto& I : top) total = ideal_sum(R, total, I);
  out.connected = static_cast<std::int64_t>(total.size()) == R.size();
  if (out.connected != cs.connected) throw CheckFailure("ideal-sum connectivity disagrees with breadth-first search");
  if (!out.connected) return out;

  // Smallest subset of the maximal ideals summing to R.
  const std::size_t k_max = top.size();
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, std::size_t, const IdealHandle&)> search =
      [&](std::size_t start, std::size_t remaining, const IdealHandle& acc) -> bool {
    if (remaining == 0) return static_cast<std::int64_t>(acc.size()) == R.size();
    for (std::size_t a = start; a + remaining <= k_max; ++a)
      if (search(a + 1, remaining - 1, ideal_sum(R, acc, top[a]))) return true;
    return false;
  };
  for (std::size_t k = 1; k <= k_max; ++k)
    if (search(0, k, principal_ideal(R, 0))) {
      out.t = static_cast<std::int64_t>(k);
      break;
    }
  out.bound = out.unit_diameter * *out.t;
  out.bound_holds = *out.diameter <= *out.bound;
  return out;
}

struct HomogeneousIdeal {
  IdealHandle ideal;
  std::optional<bool> absorbs_units;  // I + U = U, reported when S = U
  std::optional<bool> nilpotent;      // reported when S = U
};

/// True iff every vertex outside I sees all or none of I.
inline bool is_homogeneous_ideal(const ConnectionSet& S, const IdealHandle& I) {
  const SuperTheory& t = S.theory();
  const RingSpec& R = t.ring();
  for (std::size_t k = 0; k < t.class_count(); ++k) {
    const Elem r = t.representative(k);
    if (I.contains(r)) continue;  // ideals are U-stable, so K is inside I or disjoint from it
    // Condition on K + I: inside S when K is, disjoint from S otherwise. Classes
    // are orbits and I is U-stable, so the representative decides for all of K.
    const bool in_S = S.contains(r);
    for (Elem x : I.elements)
      if (S.contains(R.add(r, x)) != in_S) return false;
  }
  return true;
}

inline std::vector<HomogeneousIdeal> homogeneous_ideals(const ConnectionSet& S, const std::vector<IdealHandle>& lattice) {
  const SuperTheory& t = S.theory();
  const RingSpec& R = t.ring();
  const bool s_is_u = S.elements() == t.unit_group().elements();
  std::vector<HomogeneousIdeal> out;
  for (const auto& I : lattice) {
    if (I.is_zero() || static_cast<std::int64_t>(I.size()) == R.size()) continue;
    if (!is_homogeneous_ideal(S, I)) continue;
    HomogeneousIdeal h{I, std::nullopt, std::nullopt};
    if (s_is_u) {
      bool absorbs = true;
      for (Elem u : t.unit_group().elements())
        for (Elem x : I.elements)
          if (!t.unit_group().contains(R.add(u, x))) absorbs = false;
      h.absorbs_units = absorbs;
      h.nilpotent = is_nilpotent_ideal(R, I);
    }
    out.push_back(std::move(h));
  }
  return out;
}

inline std::vector<HomogeneousIdeal> homogeneous_ideals(const ConnectionSet& S) {
  return homogeneous_ideals(S, ideal_lattice(S.ring()));
}

struct Primeness {
  bool prime = true;
  std::optional<std::vector<Elem>> witness;  // a largest proper module found
};

namespace detail {

/// Smallest module containing `seed`: repeatedly add vertices that see some but
/// not all of the current set.
inline std::vector<Elem> module_closure(const CayleyGraph& g, const std::vector<Elem>& seed) {
  const auto N = static_cast<std::size_t>(g.vertex_count());
  std::vector<std::uint8_t> in(N, 0);
  std::vector<std::int64_t> seen(N, 0);  // neighbors inside the current set
  std::vector<Elem> members;
  std::vector<Elem> pending;
  auto add = [&](Elem v) {
    in[v] = 1;
    members.push_back(v);
    for (Elem w : g.neighbors(v)) ++seen[w];
  };
  for (Elem v : seed)
    if (!in[v]) add(v);
  bool changed = true;
  while (changed && members.size() < N) {
    changed = false;
    const auto size = static_cast<std::int64_t>(members.size());
    pending.clear();
    for (Elem w = 0; w < N; ++w)
      if (!in[w] && seen[w] > 0 && seen[w] < size) pending.push_back(w);
    for (Elem w : pending) {
      add(w);
      changed = true;
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace detail

/// Brute-force primeness: the graph is prime iff every pair generates the whole
/// vertex set as a module. Translations are automorphisms, so pairs {0, v} suffice.
inline Primeness is_prime(const CayleyGraph& g, std::int64_t bound = 512) {
  if (g.vertex_count() > bound)
    throw BoundError("primeness test: |R| = " + std::to_string(g.vertex_count()) + " exceeds bound " + std::to_string(bound));
  Primeness out;
  for (Elem v = 1; v < g.vertex_count(); ++v) {
    auto M = detail::module_closure(g, {0, v});
    if (static_cast<std::int64_t>(M.size()) == g.vertex_count()) continue;
    out.prime = false;
    if (!out.witness || out.witness->size() < M.size()) out.witness = std::move(M);
  }
  return out;
}

/// Adjacency is preserved by x -> u x for every u in U.
inline bool unit_action_preserves_adjacency(const CayleyGraph& g) {
  const ConnectionSet& S = g.connection();
  const RingSpec& R = S.ring();
  const auto N = static_cast<Elem>(g.vertex_count());
  for (Elem u : S.theory().unit_group().elements()) {
    if (N <= 128) {
      for (Elem x = 0; x < N; ++x)
        for (Elem y = 0; y < N; ++y)
          if (g.adjacent(R.mul(u, x), R.mul(u, y)) != g.adjacent(x, y)) return false;
    } else {
      for (Elem d = 0; d < N; ++d)
        if (S.contains(R.mul(u, d)) != S.contains(d)) return false;
    }
  }
  return true;
}

/// Regular of degree |S|, symmetric, loopless.
inline bool basic_graph_invariants(const CayleyGraph& g) {
  const auto N = static_cast<Elem>(g.vertex_count());
  const auto deg = static_cast<std::int64_t>(g.connection().size());
  for (Elem u = 0; u < N; ++u) {
    if (g.adjacent(u, u)) return false;
    const auto nb = g.neighbors(u);
    if (static_cast<std::int64_t>(nb.size()) != deg) return false;
    for (Elem v : nb)
      if (!g.adjacent(v, u)) return false;
  }
  return true;
}

/// "u v" per undirected edge with u < v, vertices as ring indices.
inline std::string edge_list(const CayleyGraph& g) {
  std::ostringstream os;
  for (Elem u = 0; u < g.vertex_count(); ++u)
    for (Elem v : g.neighbors(u))
      if (u < v) os << u << ' ' << v << '\n';
  return os.str();
}

/// Matrix Market coordinate pattern, symmetric, lower triangle, 1-based.
inline std::string matrix_market(const CayleyGraph& g) {
  std::int64_t nnz = 0;
  std::ostringstream body;
  for (Elem u = 0; u < g.vertex_count(); ++u)
    for (Elem v : g.neighbors(u))
      if (v < u) {
        body << (u + 1) << ' ' << (v + 1) << '\n';
        ++nnz;
      }
  std::ostringstream os;
  os << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  os << g.vertex_count() << ' ' << g.vertex_count() << ' ' << nnz << '\n' << body.str();
  return os.str();
}

}  // namespace supercayley
