#pragma once

// Independent oracles and small generators shared by the test binaries. None of
// these go through the orbit machinery of the library.

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <supercayley/supercayley.hpp>

namespace oracle {

using namespace supercayley;

/// Exact eigenvalue multiset by summing characters term by term:
/// lambda_r = sum_{s in S} zeta^{psi(rs)} for every r in R.
inline std::vector<CycNumber> character_sum_spectrum(const RingSpec& R, const std::vector<Elem>& S) {
  const int n = static_cast<int>(R.exponent());
  std::vector<CycNumber> out;
  for (Elem r = 0; r < R.size(); ++r) {
    CycNumber v = CycNumber::zero(n);
    for (Elem s : S) v += CycNumber::root_of_unity(n, R.psi(R.mul(r, s)));
    out.push_back(v);
  }
  return out;
}

inline std::vector<std::vector<Elem>> all_ideals(const RingSpec& R) {
  const auto N = static_cast<std::uint32_t>(R.size());
  std::vector<std::vector<Elem>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << N); ++mask) {
    if (!(mask & 1U)) continue;
    auto in = [&](Elem x) { return (mask >> x) & 1U; };
    bool ok = true;
    for (Elem a = 0; a < N && ok; ++a) {
      if (!in(a)) continue;
      for (Elem b = 0; b < N && ok; ++b) {
        if (in(b) && !in(R.add(a, b))) ok = false;
        if (!in(R.mul(a, b))) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<Elem> I;
    for (Elem a = 0; a < N; ++a)
      if (in(a)) I.push_back(a);
    out.push_back(I);
  }
  return out;
}

/// Prime by exhaustion: no module M with 1 < |M| < N. Needs N <= 20.
inline bool prime_by_subsets(const RingSpec& R, const std::vector<Elem>& S) {
  const auto N = static_cast<std::uint32_t>(R.size());
  std::vector<char> inS(N, 0);
  for (Elem s : S) inS[s] = 1;
  auto adj = [&](Elem u, Elem v) { return inS[R.sub(u, v)] != 0; };
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << N); ++mask) {
    if (std::popcount(mask) < 2) continue;
    bool module = true;
    for (Elem z = 0; z < N && module; ++z) {
      if ((mask >> z) & 1U) continue;
      int first = -1;
      for (Elem m = 0; m < N; ++m) {
        if (!((mask >> m) & 1U)) continue;
        const int a = adj(z, m) ? 1 : 0;
        if (first < 0) first = a;
        else if (first != a) {
          module = false;
          break;
        }
      }
    }
    if (module) return false;
  }
  return true;
}

/// Phi_n by the Moebius product formula prod_{d|n} (x^d - 1)^{mu(n/d)}.
inline std::vector<std::int64_t> cyclotomic_by_moebius(std::int64_t n) {
  std::vector<std::int64_t> num{1}, den{1};
  auto times = [](const std::vector<std::int64_t>& a, std::int64_t d) {
    std::vector<std::int64_t> out(a.size() + static_cast<std::size_t>(d), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      out[i + static_cast<std::size_t>(d)] += a[i];
      out[i] -= a[i];
    }
    return out;
  };
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = arith::mobius(n / d);
    if (mu == 1) num = times(num, d);
    if (mu == -1) den = times(den, d);
  }
  // exact long division num / den, both monic
  std::vector<std::int64_t> q(num.size() - den.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = num[k + den.size() - 1];
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q[k] * den[j];
  }
  return q;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline Rational random_rational(std::int64_t bound, std::int64_t max_den) {
  Rational q(static_cast<long>(uniform(-bound, bound)), static_cast<unsigned long>(uniform(1, max_den)));
  q.canonicalize();
  return q;
}

/// A random small ring spec: one to three components of Z/m or GF(p)[x]/(f).
inline std::string random_ring_text(std::int64_t max_size = 64) {
  static const std::vector<std::string> poly{"GF(2)[x]/(x^2)",       "GF(2)[x]/(x^2+x+1)", "GF(2)[x]/(x^2+1)",
                                             "GF(3)[x]/(x^2+1)",     "GF(3)[x]/(x^2)",     "GF(2)[x]/(x^3+x+1)",
                                             "GF(2)[x]/(x^3)",       "GF(5)[x]/(x^2+2)",   "GF(3)[x]/(x^2+x+2)"};
  for (;;) {
    const auto k = uniform(1, 3);
    std::string text;
    std::int64_t size = 1;
    for (std::int64_t i = 0; i < k; ++i) {
      std::string c;
      if (uniform(0, 2) == 0) {
        c = poly[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(poly.size()) - 1))];
      } else {
        c = "Z/" + std::to_string(uniform(2, 30));
      }
      size *= parse_ring_spec(c).size();
      text += (text.empty() ? "" : " x ") + c;
    }
    if (size <= max_size) return text;
  }
}

inline bool close(const std::complex<double>& a, const std::complex<double>& b, double tol = 1e-9) {
  return std::abs(a - b) <= tol;
}

}  // namespace oracle
