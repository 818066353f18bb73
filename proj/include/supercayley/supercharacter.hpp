#pragma once

/**
 * The supercharacter theory of R induced by a unit subgroup U.
 *
 * Superclasses are the U-orbits K_1 = {0}, K_2, ..., K_m (ordered by minimal
 * element), and the dual class X_i is {chi_x : x in K_i}. The tables hold
 *
 *   sigma[i][j] = sigma_i(K_j) = sum_{x in K_i} chi(x r_j)
 *   omega[j][i] = Omega_j(X_i) = sum_{k in K_j} chi_{r_i}(k)
 *
 * filled by direct summation and, by default, verified exactly when built.
 */

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"
#include "ideal.hpp"
#include "errors.hpp"
#include "ring.hpp"
#include "unit_group.hpp"

namespace supercayley {

/// Immutable and cheap to copy: copies share the orbit data.
class SuperTheory {
 public:
  SuperTheory(GeneratingFunctional functional, UnitSubgroup U) {
    if (!(functional.ring() == U.ring())) throw DomainError("functional and unit subgroup live on different rings");
    auto d = std::make_shared<Data>(Data{std::move(functional), std::move(U), {}, {}, {}});
    const RingSpec& R = d->functional.ring();
    const auto N = static_cast<Elem>(R.size());
    d->class_of.assign(N, kUnassigned);
    for (Elem x = 0; x < N; ++x) {
      if (d->class_of[x] != kUnassigned) continue;
      std::vector<Elem> orbit;
      const auto idx = static_cast<std::uint32_t>(d->classes.size());
      for (Elem u : d->U.elements()) {
        const Elem y = R.mul(u, x);
        if (d->class_of[y] == kUnassigned) {
          d->class_of[y] = idx;
          orbit.push_back(y);
        }
      }
      std::sort(orbit.begin(), orbit.end());
      d->reps.push_back(x);
      d->classes.push_back(std::move(orbit));
    }
    d_ = std::move(d);
  }

  const RingSpec& ring() const { return d_->functional.ring(); }
  const GeneratingFunctional& functional() const { return d_->functional; }
  const UnitSubgroup& unit_group() const { return d_->U; }
  std::size_t class_count() const { return d_->classes.size(); }
  const std::vector<std::vector<Elem>>& classes() const { return d_->classes; }
  const std::vector<Elem>& class_of(std::size_t i) const { return d_->classes.at(i); }
  const std::vector<Elem>& representatives() const { return d_->reps; }
  Elem representative(std::size_t i) const { return d_->reps.at(i); }
  std::uint32_t class_index(Elem x) const { return d_->class_of.at(x); }
  std::int64_t class_size(std::size_t i) const { return static_cast<std::int64_t>(d_->classes.at(i).size()); }
  int order() const { return d_->functional.order(); }

  friend bool operator==(const SuperTheory& a, const SuperTheory& b) {
    return a.d_ == b.d_ || (a.ring() == b.ring() && a.unit_group().elements() == b.unit_group().elements() &&
                            a.functional().scale() == b.functional().scale());
  }

 private:
  static constexpr std::uint32_t kUnassigned = 0xffffffffU;

  struct Data {
    GeneratingFunctional functional;
    UnitSubgroup U;
    std::vector<std::vector<Elem>> classes;
    std::vector<Elem> reps;
    std::vector<std::uint32_t> class_of;
  };
  std::shared_ptr<const Data> d_;
};

inline SuperTheory build_theory(const UnitSubgroup& U) { return SuperTheory(GeneratingFunctional(U.ring()), U); }
inline SuperTheory build_theory(const UnitSubgroup& U, const GeneratingFunctional& psi) { return SuperTheory(psi, U); }

/// Values of a function constant on superclasses, one per class.
struct SuperclassFunction {
  std::vector<CycNumber> values;

  static SuperclassFunction zero(const SuperTheory& t) {
    return {std::vector<CycNumber>(t.class_count(), CycNumber::zero(t.order()))};
  }
  static SuperclassFunction indicator(const SuperTheory& t, const std::vector<std::size_t>& class_indices) {
    SuperclassFunction f = zero(t);
    for (auto i : class_indices) f.values.at(i) = CycNumber::one(t.order());
    return f;
  }
  friend bool operator==(const SuperclassFunction&, const SuperclassFunction&) = default;
};

struct SigmaTable {
  SuperTheory theory;
  std::vector<std::vector<CycNumber>> sigma;  // sigma[i][j] = sigma_i(K_j)
  std::vector<std::vector<CycNumber>> omega;  // omega[j][i] = Omega_j(X_i)
  std::vector<std::int64_t> dual_sizes;       // |X_i|

  std::size_t m() const { return sigma.size(); }
};

struct SigmaOptions {
  bool verify = true;
  /// Verification is skipped above this ring size.
  std::int64_t verify_limit = 1024;
};

/// Outcome of an exact verification pass; empty `failures` means it passed.
struct CheckReport {
  std::string name;
  std::vector<std::string> failures;
  std::size_t checked = 0;

  bool ok() const { return failures.empty(); }
  void fail(std::string message) {
    if (failures.size() < 20) failures.push_back(std::move(message));
    else if (failures.size() == 20) failures.push_back("...");
  }
  void merge(const CheckReport& other) {
    checked += other.checked;
    for (const auto& f : other.failures) fail(other.name + ": " + f);
  }
};

namespace detail {

/// Exponent counts of sum_{x in orbit} chi(x at), written into a reusable buffer.
class OrbitSumBuffer {
 public:
  explicit OrbitSumBuffer(const SuperTheory& t) : t_(t), counts_(static_cast<std::size_t>(t.order()), 0) {}

  const std::vector<std::int64_t>& fill(const std::vector<Elem>& orbit, Elem at) {
    for (auto e : touched_) counts_[e] = 0;
    touched_.clear();
    const auto& R = t_.ring();
    for (Elem x : orbit) {
      const auto e = static_cast<std::size_t>(t_.functional()(R.mul(x, at)));
      if (counts_[e]++ == 0) touched_.push_back(e);
    }
    return counts_;
  }

 private:
  const SuperTheory& t_;
  std::vector<std::int64_t> counts_;
  std::vector<std::size_t> touched_;
};

/// D = {d : psi(d s) = 0 for all s}; chi_x = chi_y iff x - y lies in D.
inline ElementMask character_kernel(const SuperTheory& t) {
  const auto& R = t.ring();
  const auto N = static_cast<Elem>(R.size());
  ElementMask D(N, 0);
  for (Elem d = 0; d < N; ++d) {
    bool vanishes = true;
    for (Elem s = 0; s < N && vanishes; ++s) vanishes = t.functional()(R.mul(d, s)) == 0;
    D[d] = vanishes;
  }
  return D;
}

/// Number of distinct characters chi_x, x in the class.
inline std::int64_t distinct_characters(const SuperTheory& t, const std::vector<Elem>& cls, const ElementMask& D) {
  const auto& R = t.ring();
  std::vector<Elem> kernel;
  for (Elem d = 0; d < D.size(); ++d)
    if (D[d]) kernel.push_back(d);
  if (kernel.size() == 1) return static_cast<std::int64_t>(cls.size());
  std::vector<Elem> canon;  // least element of each coset x + D
  for (Elem x : cls) {
    Elem least = x;
    for (Elem d : kernel) least = std::min(least, R.add(x, d));
    canon.push_back(least);
  }
  std::sort(canon.begin(), canon.end());
  return static_cast<std::int64_t>(std::unique(canon.begin(), canon.end()) - canon.begin());
}

}  // namespace detail

/// Verify the table invariants and the supercharacter axioms exactly.
inline CheckReport verify_sigma_table(const SigmaTable& table) {
  CheckReport rep{"sigma-table", {}, 0};
  const SuperTheory& t = table.theory;
  const auto& R = t.ring();
  const std::size_t m = t.class_count();

  // Partition, {0} first, orbit structure, symmetry.
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(R.size()), 0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& K = t.class_of(i);
    for (Elem x : K) {
      if (seen[x]) rep.fail("element " + R.render(x) + " in two classes");
      seen[x] = 1;
    }
    std::vector<Elem> orbit;
    for (Elem u : t.unit_group().elements()) orbit.push_back(R.mul(u, t.representative(i)));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    if (orbit != K) rep.fail("class " + std::to_string(i) + " is not the U-orbit of its representative");
    for (Elem x : K)
      if (t.class_index(R.neg(x)) != i) rep.fail("class " + std::to_string(i) + " is not symmetric");
    if (table.dual_sizes[i] != static_cast<std::int64_t>(K.size())) rep.fail("|X_i| != |K_i| at i=" + std::to_string(i));
    ++rep.checked;
  }
  if (std::count(seen.begin(), seen.end(), 1) != R.size()) rep.fail("classes do not cover R");
  if (t.class_of(0) != std::vector<Elem>{0}) rep.fail("first class is not {0}");

  detail::OrbitSumBuffer buf(t);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      // Constancy of sigma_i on K_j, evaluated at every k in K_j.
      const std::vector<std::int64_t> base = buf.fill(t.class_of(i), t.representative(j));
      const CycNumber base_value = CycNumber::from_exponent_counts(t.order(), base);
      for (Elem k : t.class_of(j))
        if (buf.fill(t.class_of(i), k) != base &&
            CycNumber::from_exponent_counts(t.order(), buf.fill(t.class_of(i), k)) != base_value)
          rep.fail("sigma_" + std::to_string(i) + " not constant on K_" + std::to_string(j));
      if (base_value != table.sigma[i][j]) rep.fail("stored sigma differs at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      // Omega_j(chi) independent of chi in X_i.
      const std::vector<std::int64_t> obase = buf.fill(t.class_of(j), t.representative(i));
      const CycNumber obase_value = CycNumber::from_exponent_counts(t.order(), obase);
      for (Elem x : t.class_of(i))
        if (buf.fill(t.class_of(j), x) != obase &&
            CycNumber::from_exponent_counts(t.order(), buf.fill(t.class_of(j), x)) != obase_value)
          rep.fail("Omega_" + std::to_string(j) + " depends on the character in X_" + std::to_string(i));
      if (obase_value != table.omega[j][i]) rep.fail("stored Omega differs at (" + std::to_string(j) + "," + std::to_string(i) + ")");
      const Rational Xi(table.dual_sizes[i]), Kj(t.class_size(j)), Ki(t.class_size(i));
      const CycNumber& om = table.omega[j][i];
      const CycNumber& sg = table.sigma[i][j];
      if (om * Xi != sg * Kj) rep.fail("duality fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (conj(om) != om) rep.fail("Omega_" + std::to_string(j) + "(X_" + std::to_string(i) + ") is not real");
      if (om != table.sigma[j][i]) rep.fail("transpose law fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (sg * Kj != table.sigma[j][i] * Ki) rep.fail("exchange law fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      rep.checked += 6;
    }
  return rep;
}

/// Build sigma and Omega by direct summation; verify unless disabled or too large.
inline SigmaTable sigma_table(const SuperTheory& theory, const SigmaOptions& options = {}) {
  const std::size_t m = theory.class_count();
  SigmaTable table{theory, {}, {}, {}};
  table.sigma.assign(m, std::vector<CycNumber>(m));
  table.omega.assign(m, std::vector<CycNumber>(m));
  detail::OrbitSumBuffer buf(theory);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      table.sigma[i][j] = CycNumber::from_exponent_counts(theory.order(), buf.fill(theory.class_of(i), theory.representative(j)));
      table.omega[j][i] = CycNumber::from_exponent_counts(theory.order(), buf.fill(theory.class_of(j), theory.representative(i)));
    }
  const bool verify = options.verify && theory.ring().size() <= options.verify_limit;
  table.dual_sizes.resize(m);
  const ElementMask D = verify ? detail::character_kernel(theory) : ElementMask{};
  for (std::size_t i = 0; i < m; ++i)
    table.dual_sizes[i] = verify ? detail::distinct_characters(theory, theory.class_of(i), D) : theory.class_size(i);
  if (verify) {
    const CheckReport rep = verify_sigma_table(table);
    if (!rep.ok()) throw CheckFailure("supercharacter axioms failed: " + rep.failures.front());
  }
  return table;
}

/// f^(K_i) = sum_l f(K_l) sigma_l(K_i).
inline SuperclassFunction super_fourier(const SigmaTable& table, const SuperclassFunction& f) {
  const std::size_t m = table.m();
  if (f.values.size() != m) throw DomainError("superclass function has the wrong length");
  const int n = table.theory.order();
  SuperclassFunction out = SuperclassFunction::zero(table.theory);
  for (std::size_t l = 0; l < m; ++l) {
    const CycNumber& fl = f.values[l];
    if (fl.is_zero()) continue;
    const auto q = fl.as_rational();
    for (std::size_t i = 0; i < m; ++i) {
      if (q) out.values[i] += table.sigma[l][i] * *q;
      else out.values[i] += fl * table.sigma[l][i];
    }
  }
  for (auto& v : out.values)
    if (v.order() != n && n % v.order() == 0) v = v.lift(n);
  return out;
}

/// F(F(f)) == |R| f exactly.
inline bool double_transform_check(const SigmaTable& table, const SuperclassFunction& f) {
  const SuperclassFunction ff = super_fourier(table, super_fourier(table, f));
  const Rational size(static_cast<long>(table.theory.ring().size()));
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (ff.values[i] != f.values[i] * size) return false;
  return true;
}

/// sum_j |K_j| sigma_i(K_j) conj(sigma_i'(K_j)) = |R| |X_i| [i = i'].
inline CheckReport column_orthogonality_check(const SigmaTable& table) {
  CheckReport rep{"orthogonality", {}, 0};
  const std::size_t m = table.m();
  const int n = table.theory.order();
  std::vector<std::vector<CycNumber>> conjugated(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) conjugated[i].push_back(conj(table.sigma[i][j]));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = i; k < m; ++k) {
      CycNumber total = CycNumber::zero(n);
      for (std::size_t j = 0; j < m; ++j)
        total += table.sigma[i][j] * conjugated[k][j] * Rational(table.theory.class_size(j));
      const long expected = i == k ? static_cast<long>(table.theory.ring().size() * table.dual_sizes[i]) : 0;
      if (total != CycNumber::integer(n, expected))
        rep.fail("orthogonality fails for (" + std::to_string(i) + "," + std::to_string(k) + ")");
      ++rep.checked;
    }
  return rep;
}

/// Check a user-supplied pair of partitions against the supercharacter axioms.
/// `dual_classes[i]` lists elements x standing for the characters chi_x.
struct PartitionCheck {
  bool zero_class = false;       // {0} is a block
  bool equal_counts = false;     // |X| = |K|
  bool sigma_constant = false;   // each sigma_i constant on each K_j
  bool omega_constant = false;   // each Omega_j constant on each X_i
  bool symmetric = false;        // K_i = -K_i
  std::vector<std::string> messages;

  bool is_theory() const { return zero_class && equal_counts && sigma_constant && omega_constant; }
};

inline PartitionCheck check_partition(const GeneratingFunctional& psi, const std::vector<std::vector<Elem>>& classes,
                                      const std::vector<std::vector<Elem>>& dual_classes) {
  PartitionCheck out;
  const RingSpec& R = psi.ring();
  const int n = psi.order();
  auto covers = [&](const std::vector<std::vector<Elem>>& parts, const char* what) {
    std::vector<int> count(static_cast<std::size_t>(R.size()), 0);
    for (const auto& P : parts)
      for (Elem x : P) {
        if (x >= R.size()) throw DomainError(std::string(what) + " contains an element outside R");
        ++count[x];
      }
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 1; }))
      throw DomainError(std::string(what) + " is not a partition of R");
  };
  covers(classes, "superclass partition");
  covers(dual_classes, "character partition");

  out.zero_class = std::any_of(classes.begin(), classes.end(), [](const auto& K) { return K == std::vector<Elem>{0}; });
  if (!out.zero_class) out.messages.push_back("{0} is not a superclass");
  out.equal_counts = classes.size() == dual_classes.size();
  if (!out.equal_counts) out.messages.push_back("|X| != |K|");

  auto sum = [&](const std::vector<Elem>& over, Elem with) {
    RootSum acc(n);
    for (Elem x : over) acc.add(psi(R.mul(x, with)));
    return acc.value();
  };
  out.sigma_constant = true;
  for (std::size_t i = 0; i < dual_classes.size() && out.sigma_constant; ++i)
    for (const auto& K : classes) {
      const CycNumber first = sum(dual_classes[i], K.front());
      if (!std::all_of(K.begin() + 1, K.end(), [&](Elem k) { return sum(dual_classes[i], k) == first; })) {
        out.sigma_constant = false;
        out.messages.push_back("sigma_" + std::to_string(i) + " is not constant on a superclass");
        break;
      }
    }
  out.omega_constant = true;
  for (std::size_t j = 0; j < classes.size() && out.omega_constant; ++j)
    for (const auto& X : dual_classes) {
      const CycNumber first = sum(classes[j], X.front());
      if (!std::all_of(X.begin() + 1, X.end(), [&](Elem x) { return sum(classes[j], x) == first; })) {
        out.omega_constant = false;
        out.messages.push_back("Omega_" + std::to_string(j) + " depends on the character choice");
        break;
      }
    }
  out.symmetric = std::all_of(classes.begin(), classes.end(), [&](const std::vector<Elem>& K) {
    return std::all_of(K.begin(), K.end(), [&](Elem x) { return std::find(K.begin(), K.end(), R.neg(x)) != K.end(); });
  });
  return out;
}

}  // namespace supercayley
