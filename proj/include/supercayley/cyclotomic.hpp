#pragma once

/**
 * Exact arithmetic in the cyclotomic field Q(z), z = exp(2*pi*i/n).
 *
 * Elements are stored in the power basis {1, z, ..., z^(phi(n)-1)} reduced
 * modulo the n-th cyclotomic polynomial, as integer numerators over one
 * positive common denominator with gcd(den, nums...) = 1. That form is
 * unique, so equality of two numbers of the same order is equality of the
 * stored vectors.
 *
 * Sums of roots of unity (the bulk of all character sums) are accumulated as
 * exponent counts in a RootSum and reduced once.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "arith.hpp"
#include "errors.hpp"

namespace supercayley {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

struct CyclotomicPolynomial {
  int n = 1;
  int degree = 1;
  std::vector<std::int64_t> coeffs;                          // ascending, monic
  std::vector<std::pair<int, std::int64_t>> lower_nonzero;  // (j, c_j) for j < degree, c_j != 0
};

inline std::shared_ptr<const CyclotomicPolynomial> compute_cyclotomic(int n) {
  // Phi_n(x) = prod_{d | n} (x^d - 1)^{mu(n/d)}; multiply first, then divide exactly.
  std::vector<Integer> poly{Integer(1)};
  std::vector<std::int64_t> dividers;
  for (std::int64_t d : arith::divisors(n)) {
    const int mu = arith::mobius(n / d);
    if (mu == 1) {
      std::vector<Integer> next(poly.size() + static_cast<std::size_t>(d));
      for (std::size_t k = 0; k < next.size(); ++k) {
        if (k >= static_cast<std::size_t>(d)) next[k] += poly[k - static_cast<std::size_t>(d)];
        if (k < poly.size()) next[k] -= poly[k];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      dividers.push_back(d);
    }
  }
  for (std::int64_t d : dividers) {
    const auto du = static_cast<std::size_t>(d);
    std::vector<Integer> q(poly.size() - du);
    for (std::size_t k = 0; k < q.size(); ++k) {
      q[k] = -poly[k];
      if (k >= du) q[k] += q[k - du];
    }
    poly = std::move(q);
  }
  auto out = std::make_shared<CyclotomicPolynomial>();
  out->n = n;
  out->degree = static_cast<int>(poly.size()) - 1;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (!poly[k].fits_slong_p()) throw CheckFailure("cyclotomic coefficient overflow");
    out->coeffs.push_back(poly[k].get_si());
    if (static_cast<int>(k) < out->degree && poly[k] != 0)
      out->lower_nonzero.emplace_back(static_cast<int>(k), poly[k].get_si());
  }
  if (out->coeffs.back() != 1 || out->degree != arith::euler_phi(n))
    throw CheckFailure("cyclotomic polynomial construction failed for n=" + std::to_string(n));
  return out;
}

/// Memoized, thread-safe table of cyclotomic polynomials.
inline const CyclotomicPolynomial& cyclotomic_polynomial(int n) {
  if (n < 1) throw DomainError("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CyclotomicPolynomial>> table;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = table.find(n);
  if (it == table.end()) it = table.emplace(n, compute_cyclotomic(n)).first;
  return *it->second;
}

template <class I>
bool checked_mul_sub(I& acc, I a, I b) {
  I prod;
  if (__builtin_mul_overflow(a, b, &prod)) return false;
  return !__builtin_sub_overflow(acc, prod, &acc);
}

/// Reduce a length-n vector (already folded mod x^n - 1) modulo Phi_n in place.
/// Returns false on overflow for fixed-width I.
template <class I>
bool reduce_fixed(std::vector<I>& a, const CyclotomicPolynomial& phi) {
  const int deg = phi.degree;
  for (int k = static_cast<int>(a.size()) - 1; k >= deg; --k) {
    const I c = a[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    a[static_cast<std::size_t>(k)] = 0;
    for (const auto& [j, cj] : phi.lower_nonzero)
      if (!checked_mul_sub<I>(a[static_cast<std::size_t>(k - deg + j)], c, static_cast<I>(cj)))
        return false;
  }
  a.resize(static_cast<std::size_t>(deg));
  return true;
}

inline void reduce_big(std::vector<Integer>& a, const CyclotomicPolynomial& phi) {
  const int deg = phi.degree;
  for (int k = static_cast<int>(a.size()) - 1; k >= deg; --k) {
    const Integer c = a[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    a[static_cast<std::size_t>(k)] = 0;
    for (const auto& [j, cj] : phi.lower_nonzero)
      a[static_cast<std::size_t>(k - deg + j)] -= c * static_cast<long>(cj);
  }
  a.resize(static_cast<std::size_t>(deg));
}

inline Integer from_int128(__int128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return Integer(static_cast<long>(v));
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer out = (hi << 64) + lo;
  return neg ? Integer(-out) : out;
}

inline int bit_length(const Integer& v) { return v == 0 ? 0 : static_cast<int>(mpz_sizeinbase(v.get_mpz_t(), 2)); }

}  // namespace detail

inline int cyclotomic_degree(int n) { return detail::cyclotomic_polynomial(n).degree; }

/// An element of (Z/n)^x acting on Q(z_n) by z -> z^a.
struct GaloisElement {
  int order = 1;
  std::int64_t a = 1;

  GaloisElement() = default;
  GaloisElement(int n, std::int64_t residue) : order(n), a(arith::mod(residue, n)) {
    if (n < 1) throw DomainError("Galois element order must be positive");
    if (n == 1) a = 0;
    if (arith::gcd(a, n) != 1 && n != 1) throw DomainError("Galois element must be a unit mod n");
  }
  friend bool operator==(const GaloisElement&, const GaloisElement&) = default;
};

class CycNumber {
 public:
  CycNumber() : n_(1), den_(1), num_(1) {}

  static CycNumber zero(int n) {
    CycNumber x;
    x.n_ = n;
    x.num_.assign(static_cast<std::size_t>(cyclotomic_degree(n)), Integer(0));
    return x;
  }
  static CycNumber rational(int n, const Rational& q) {
    CycNumber x = zero(n);
    x.num_[0] = q.get_num();
    x.den_ = q.get_den();
    return x;
  }
  static CycNumber integer(int n, long v) { return rational(n, Rational(v)); }
  static CycNumber one(int n) { return integer(n, 1); }

  /// z_n^k for any integer k.
  static CycNumber root_of_unity(int n, std::int64_t k) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
    counts[static_cast<std::size_t>(arith::mod(k, n))] = 1;
    return from_exponent_counts(n, counts);
  }

  /// Sum_e counts[e] * z_n^e (counts indexed by exponent mod n, any length).
  static CycNumber from_exponent_counts(int n, std::span<const std::int64_t> counts) {
    const auto& phi = detail::cyclotomic_polynomial(n);
    std::vector<std::int64_t> folded(static_cast<std::size_t>(n), 0);
    bool ok = true;
    for (std::size_t e = 0; e < counts.size() && ok; ++e)
      ok = !__builtin_add_overflow(folded[e % static_cast<std::size_t>(n)], counts[e],
                                   &folded[e % static_cast<std::size_t>(n)]);
    CycNumber x;
    x.n_ = n;
    if (ok && detail::reduce_fixed(folded, phi)) {
      x.num_.clear();
      x.num_.reserve(folded.size());
      for (auto v : folded) x.num_.emplace_back(static_cast<long>(v));
      return x;
    }
    std::vector<Integer> big(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < counts.size(); ++e) big[e % static_cast<std::size_t>(n)] += static_cast<long>(counts[e]);
    detail::reduce_big(big, phi);
    x.num_ = std::move(big);
    return x;
  }

  /// Power-basis coefficients of any length; reduced modulo Phi_n.
  static CycNumber from_coefficients(int n, const std::vector<Rational>& coeffs) {
    Integer den = 1;
    for (const auto& c : coeffs) den = lcm_int(den, c.get_den());
    std::vector<Integer> big(static_cast<std::size_t>(std::max<std::size_t>(static_cast<std::size_t>(n), coeffs.size())));
    for (std::size_t k = 0; k < coeffs.size(); ++k) big[k % static_cast<std::size_t>(n)] += coeffs[k].get_num() * (den / coeffs[k].get_den());
    big.resize(static_cast<std::size_t>(n));
    detail::reduce_big(big, detail::cyclotomic_polynomial(n));
    CycNumber x;
    x.n_ = n;
    x.num_ = std::move(big);
    x.den_ = den;
    x.normalize();
    return x;
  }

  int order() const { return n_; }
  int degree() const { return static_cast<int>(num_.size()); }
  const Integer& denominator() const { return den_; }
  const std::vector<Integer>& numerators() const { return num_; }
  Rational coeff(int k) const {
    Rational q(num_.at(static_cast<std::size_t>(k)), den_);
    q.canonicalize();
    return q;
  }
  std::vector<Rational> coefficients() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (int k = 0; k < degree(); ++k) out.push_back(coeff(k));
    return out;
  }

  bool is_zero() const {
    return std::all_of(num_.begin(), num_.end(), [](const Integer& v) { return v == 0; });
  }
  bool is_rational() const {
    return std::all_of(num_.begin() + 1, num_.end(), [](const Integer& v) { return v == 0; });
  }
  bool is_integer() const { return is_rational() && den_ == 1; }
  std::optional<Rational> as_rational() const {
    if (!is_rational()) return std::nullopt;
    return coeff(0);
  }
  std::optional<Integer> as_integer() const {
    if (!is_integer()) return std::nullopt;
    return num_[0];
  }

  /// Embed into Q(z_N) for a multiple N of the current order via z_n = z_N^(N/n).
  CycNumber lift(int multiple) const {
    if (multiple == n_) return *this;
    if (multiple % n_ != 0) throw DomainError("lift target must be a multiple of the order");
    const std::int64_t step = multiple / n_;
    std::vector<Integer> big(static_cast<std::size_t>(multiple));
    for (std::size_t k = 0; k < num_.size(); ++k) big[k * static_cast<std::size_t>(step)] = num_[k];
    detail::reduce_big(big, detail::cyclotomic_polynomial(multiple));
    CycNumber x;
    x.n_ = multiple;
    x.num_ = std::move(big);
    x.den_ = den_;
    return x;
  }

  CycNumber operator-() const {
    CycNumber x = *this;
    for (auto& v : x.num_) v = -v;
    return x;
  }

  friend CycNumber operator+(const CycNumber& a, const CycNumber& b) { return add(a, b, false); }
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b) { return add(a, b, true); }
  CycNumber& operator+=(const CycNumber& b) { return *this = *this + b; }
  CycNumber& operator-=(const CycNumber& b) { return *this = *this - b; }

  friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
    if (a.n_ != b.n_) {
      const int n = static_cast<int>(arith::lcm(a.n_, b.n_));
      return a.lift(n) * b.lift(n);
    }
    const int n = a.n_;
    const auto& phi = detail::cyclotomic_polynomial(n);
    CycNumber x;
    x.n_ = n;
    x.den_ = a.den_ * b.den_;
    const auto un = static_cast<std::size_t>(n);

    int bits_a = 0, bits_b = 0;
    for (const auto& v : a.num_) bits_a = std::max(bits_a, detail::bit_length(v));
    for (const auto& v : b.num_) bits_b = std::max(bits_b, detail::bit_length(v));
    if (bits_a + bits_b + 2 * 13 < 100 && n <= (1 << 13)) {
      std::vector<__int128> acc(un, 0);
      std::vector<std::int64_t> sa(a.num_.size()), sb(b.num_.size());
      for (std::size_t i = 0; i < sa.size(); ++i) sa[i] = a.num_[i].get_si();
      for (std::size_t j = 0; j < sb.size(); ++j) sb[j] = b.num_[j].get_si();
      if (bits_a <= 62 && bits_b <= 62) {
        for (std::size_t i = 0; i < sa.size(); ++i) {
          if (sa[i] == 0) continue;
          for (std::size_t j = 0; j < sb.size(); ++j) {
            const std::size_t e = i + j >= un ? i + j - un : i + j;
            acc[e] += static_cast<__int128>(sa[i]) * sb[j];
          }
        }
        if (detail::reduce_fixed(acc, phi)) {
          x.num_.clear();
          x.num_.reserve(acc.size());
          for (auto v : acc) x.num_.push_back(detail::from_int128(v));
          x.normalize();
          return x;
        }
      }
    }
    std::vector<Integer> big(un);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
      if (a.num_[i] == 0) continue;
      for (std::size_t j = 0; j < b.num_.size(); ++j) {
        const std::size_t e = i + j >= un ? i + j - un : i + j;
        big[e] += a.num_[i] * b.num_[j];
      }
    }
    detail::reduce_big(big, phi);
    x.num_ = std::move(big);
    x.normalize();
    return x;
  }
  CycNumber& operator*=(const CycNumber& b) { return *this = *this * b; }

  friend CycNumber operator*(const CycNumber& a, const Rational& q) {
    CycNumber x = a;
    for (auto& v : x.num_) v *= q.get_num();
    x.den_ *= q.get_den();
    x.normalize();
    return x;
  }
  friend CycNumber operator*(const Rational& q, const CycNumber& a) { return a * q; }
  friend CycNumber operator/(const CycNumber& a, const Rational& q) {
    if (q == 0) throw DomainError("division of a cyclotomic number by zero");
    return a * Rational(1 / q);
  }

  /// Mathematical equality; numbers of different orders are compared in Q(z_lcm).
  friend bool operator==(const CycNumber& a, const CycNumber& b) {
    if (a.n_ != b.n_) {
      const int n = static_cast<int>(arith::lcm(a.n_, b.n_));
      return a.lift(n) == b.lift(n);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// Floating evaluation at z_n = exp(2*pi*i/n).
  std::complex<double> approx() const {
    long double re = 0, im = 0;
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    for (std::size_t k = 0; k < num_.size(); ++k) {
      if (num_[k] == 0) continue;
      const long double c = num_[k].get_d();
      const long double t = two_pi * static_cast<long double>(k) / static_cast<long double>(n_);
      re += c * std::cos(t);
      im += c * std::sin(t);
    }
    const long double d = den_.get_d();
    return {static_cast<double>(re / d), static_cast<double>(im / d)};
  }

  /// Polynomial rendering in z = z_n, e.g. "1 - 2*z^3 + 1/2*z^4".
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < degree(); ++k) {
      const Rational c = coeff(k);
      if (c == 0) continue;
      Rational mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (k == 0) {
        os << mag.get_str();
      } else {
        if (mag != 1) os << mag.get_str() << "*";
        os << "z";
        if (k > 1) os << "^" << k;
      }
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  static Integer lcm_int(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }

  static CycNumber add(const CycNumber& a, const CycNumber& b, bool subtract) {
    if (a.n_ != b.n_) {
      const int n = static_cast<int>(arith::lcm(a.n_, b.n_));
      return add(a.lift(n), b.lift(n), subtract);
    }
    CycNumber x;
    x.n_ = a.n_;
    x.num_.resize(a.num_.size());
    if (a.den_ == b.den_) {
      x.den_ = a.den_;
      for (std::size_t k = 0; k < x.num_.size(); ++k)
        x.num_[k] = subtract ? Integer(a.num_[k] - b.num_[k]) : Integer(a.num_[k] + b.num_[k]);
      if (x.den_ != 1) x.normalize();
      return x;
    }
    x.den_ = a.den_ * b.den_;
    for (std::size_t k = 0; k < x.num_.size(); ++k) {
      const Integer left = a.num_[k] * b.den_;
      const Integer right = b.num_[k] * a.den_;
      x.num_[k] = subtract ? Integer(left - right) : Integer(left + right);
    }
    x.normalize();
    return x;
  }

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (auto& v : num_) v = -v;
    }
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& v : num_) {
      if (g == 1) break;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (g == 1) return;
    den_ /= g;
    for (auto& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }

  friend CycNumber galois_apply(const GaloisElement& g, const CycNumber& x);

  int n_;
  Integer den_;
  std::vector<Integer> num_;
};

/// Total order on the stored representation (order, denominator, numerators).
/// Consistent with == for numbers of equal order; used to sort multisets.
struct CanonicalLess {
  bool operator()(const CycNumber& a, const CycNumber& b) const {
    if (a.order() != b.order()) return a.order() < b.order();
    if (a.denominator() != b.denominator()) return a.denominator() < b.denominator();
    const auto& x = a.numerators();
    const auto& y = b.numerators();
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k] != y[k]) return x[k] < y[k];
    return false;
  }
};

/// Exponent-count accumulator for sums of n-th roots of unity.
class RootSum {
 public:
  explicit RootSum(int n) : n_(n), counts_(static_cast<std::size_t>(n), 0) {}

  void add(std::int64_t exponent, std::int64_t multiplicity = 1) {
    counts_[static_cast<std::size_t>(arith::mod(exponent, n_))] += multiplicity;
  }
  int order() const { return n_; }
  std::int64_t total() const {
    std::int64_t t = 0;
    for (auto c : counts_) t += c;
    return t;
  }
  std::span<const std::int64_t> counts() const { return counts_; }
  CycNumber value() const { return CycNumber::from_exponent_counts(n_, counts_); }

 private:
  int n_;
  std::vector<std::int64_t> counts_;
};

/// Image of x under z_n -> z_n^a.
inline CycNumber galois_apply(const GaloisElement& g, const CycNumber& x) {
  if (g.order != x.n_) throw DomainError("Galois element order does not match the number's order");
  const auto un = static_cast<std::size_t>(x.n_);
  std::vector<Integer> big(un);
  for (std::size_t k = 0; k < x.num_.size(); ++k) {
    if (x.num_[k] == 0) continue;
    big[static_cast<std::size_t>(arith::mod(static_cast<std::int64_t>(k) * g.a, x.n_))] += x.num_[k];
  }
  detail::reduce_big(big, detail::cyclotomic_polynomial(x.n_));
  CycNumber y;
  y.n_ = x.n_;
  y.num_ = std::move(big);
  y.den_ = x.den_;
  return y;
}

inline CycNumber conj(const CycNumber& x) { return galois_apply(GaloisElement(x.order(), x.order() - 1), x); }

/// All of (Z/n)^x as Galois elements, ascending.
inline std::vector<GaloisElement> galois_group(int n) {
  std::vector<GaloisElement> out;
  if (n == 1) return {GaloisElement(1, 0)};
  for (std::int64_t a = 1; a < n; ++a)
    if (arith::gcd(a, n) == 1) out.emplace_back(n, a);
  return out;
}

/// True iff x is fixed by every element of the subgroup H. H must be closed under
/// multiplication mod n.
inline bool is_fixed_by(const CycNumber& x, std::span<const GaloisElement> H) {
  for (const auto& g : H)
    for (const auto& h : H) {
      if (g.order != h.order) throw DomainError("Galois elements of mixed order");
      const std::int64_t prod = arith::mulmod(g.a, h.a, g.order);
      if (std::none_of(H.begin(), H.end(), [&](const GaloisElement& k) { return k.a == prod; }))
        throw DomainError("the given Galois elements are not closed under multiplication");
    }
  return std::all_of(H.begin(), H.end(), [&](const GaloisElement& g) { return galois_apply(g, x) == x; });
}

/// Rewrite x in Q(z_m) for the smallest m | n containing it.
inline CycNumber normalize_order(const CycNumber& x) {
  const int n = x.order();
  for (std::int64_t m : arith::divisors(n)) {
    bool fixed = true;
    for (const auto& g : galois_group(n)) {
      if (arith::mod(g.a, m) != 1 % m) continue;
      if (galois_apply(g, x) != x) {
        fixed = false;
        break;
      }
    }
    if (!fixed) continue;
    // Solve sum_k c_k lift(z_m^k) = x by Gaussian elimination over Q.
    const int dm = cyclotomic_degree(static_cast<int>(m));
    const int dn = x.degree();
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(dn), std::vector<Rational>(static_cast<std::size_t>(dm) + 1));
    for (int k = 0; k < dm; ++k) {
      const CycNumber basis = CycNumber::root_of_unity(static_cast<int>(m), k).lift(n);
      for (int r = 0; r < dn; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = basis.coeff(r);
    }
    for (int r = 0; r < dn; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(dm)] = x.coeff(r);
    std::size_t pivot_row = 0;
    std::vector<int> pivot_col_of_row;
    for (int c = 0; c < dm; ++c) {
      std::size_t p = pivot_row;
      while (p < rows.size() && rows[p][static_cast<std::size_t>(c)] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[pivot_row]);
      const Rational inv = 1 / rows[pivot_row][static_cast<std::size_t>(c)];
      for (auto& v : rows[pivot_row]) v *= inv;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == pivot_row || rows[r][static_cast<std::size_t>(c)] == 0) continue;
        const Rational f = rows[r][static_cast<std::size_t>(c)];
        for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] -= f * rows[pivot_row][k];
      }
      pivot_col_of_row.push_back(c);
      ++pivot_row;
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(dm));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
      coeffs[static_cast<std::size_t>(pivot_col_of_row[r])] = rows[r][static_cast<std::size_t>(dm)];
    CycNumber y = CycNumber::from_coefficients(static_cast<int>(m), coeffs);
    if (y.lift(n) != x) throw CheckFailure("order normalization failed");
    return y;
  }
  return x;
}

/// Decimal rendering with 12 significant digits; imaginary part shown when nonzero.
inline std::string to_decimal(const CycNumber& x) {
  const auto z = x.approx();
  auto fmt = [](double v) {
    if (std::abs(v) < 5e-13) v = 0.0;
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
  };
  if (std::abs(z.imag()) < 5e-13 * std::max(1.0, std::abs(z.real()))) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

}  // namespace supercayley
