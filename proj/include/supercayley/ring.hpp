#pragma once

/**
 * Finite commutative Frobenius rings built as products of Z/m and
 * GF(p)[x]/(f) components.
 *
 * Elements are addressed by a dense index in [0, |R|). The index is a
 * mixed-radix number whose digits, most significant first, are the
 * component coordinates in written order; inside a polynomial slot the
 * constant coefficient is the most significant digit. Index order is
 * therefore lexicographic order on coordinates.
 *
 * The generating functional is psi(a) = sum_i (n/e_i) psi_i(a_i) mod n with
 * psi_i the identity on Z/m and the x^(deg f - 1) coefficient on
 * GF(p)[x]/(f). Non-degeneracy is checked per component on construction.
 */

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"

namespace supercayley {

using Elem = std::uint32_t;

/// Hard cap on |R| for anything that addresses elements by index.
inline constexpr std::int64_t kMaxIndexableRing = std::int64_t{1} << 24;

namespace poly {

using Poly = std::vector<std::int64_t>;  // ascending coefficients mod p

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly mod(Poly a, const Poly& f, std::int64_t p) {
  trim(a);
  const auto df = f.size() - 1;
  const std::int64_t inv_lead = arith::powmod(f.back(), static_cast<std::uint64_t>(p - 2), p);
  while (a.size() > df) {
    const std::int64_t c = arith::mulmod(a.back(), inv_lead, p);
    const auto shift = a.size() - 1 - df;
    for (std::size_t j = 0; j <= df; ++j) a[shift + j] = arith::mod(a[shift + j] - c * f[j], p);
    trim(a);
  }
  return a;
}

inline Poly gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline std::string render(const Poly& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = f.size(); k-- > 0;) {
    if (f[k] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0 || f[k] != 1) os << f[k];
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  if (first) os << "0";
  return os.str();
}

/// Parse a polynomial expression in x with integer coefficients, reduced mod p.
/// Accepts forms such as "x^2+1", "1 + x^2", "2x+1", "3*x^2 - x".
inline Poly parse(std::string_view text, std::int64_t p, std::size_t offset = 0) {
  Poly out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(msg, offset + i); };
  skip();
  if (i == text.size()) throw fail("empty polynomial");
  bool any = false;
  while (true) {
    skip();
    int sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (any) {
      break;
    }
    std::optional<std::int64_t> coeff;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::int64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = (v * 10 + (text[i] - '0')) % (p * 1000003);
        ++i;
      }
      coeff = v;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
        if (i >= text.size() || text[i] != 'x') throw fail("expected 'x' after '*'");
      }
    }
    std::size_t power = 0;
    if (i < text.size() && text[i] == 'x') {
      ++i;
      power = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw fail("expected exponent");
        power = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          power = power * 10 + static_cast<std::size_t>(text[i] - '0');
          if (power > 4096) throw fail("exponent too large");
          ++i;
        }
      }
    } else if (!coeff) {
      throw fail("expected a term");
    }
    if (out.size() <= power) out.resize(power + 1, 0);
    out[power] = arith::mod(out[power] + sign * coeff.value_or(1), p);
    any = true;
    skip();
    if (i == text.size()) break;
    if (text[i] != '+' && text[i] != '-') throw fail("unexpected character in polynomial");
  }
  skip();
  if (i != text.size()) throw fail("trailing characters in polynomial");
  return out;
}

}  // namespace poly

enum class ComponentKind { Residue, PolyQuotient };

struct Component {
  ComponentKind kind = ComponentKind::Residue;
  std::int64_t modulus = 2;       // m for Residue(m), p for PolyQuotient(p, f)
  std::vector<std::int64_t> f;    // monic modulus polynomial, ascending (PolyQuotient only)

  static Component residue(std::int64_t m) {
    if (m < 2) throw DomainError("Z/m requires m >= 2, got m=" + std::to_string(m));
    return Component{ComponentKind::Residue, m, {}};
  }
  static Component poly_quotient(std::int64_t p, std::vector<std::int64_t> f) {
    if (!arith::is_prime(p)) throw DomainError("GF(p) requires p prime, got p=" + std::to_string(p));
    for (auto& c : f) c = arith::mod(c, p);
    poly::trim(f);
    if (f.size() < 2) throw DomainError("modulus polynomial must be nonconstant");
    if (f.back() != 1) throw DomainError("modulus polynomial must be monic");
    return Component{ComponentKind::PolyQuotient, p, std::move(f)};
  }

  /// Number of coordinate digits in this slot.
  int slots() const { return kind == ComponentKind::Residue ? 1 : static_cast<int>(f.size()) - 1; }
  std::int64_t size() const {
    if (kind == ComponentKind::Residue) return modulus;
    std::int64_t s = 1;
    for (int k = 0; k < slots(); ++k) {
      s *= modulus;
      if (s > kMaxIndexableRing) return kMaxIndexableRing + 1;
    }
    return s;
  }
  /// Additive exponent (characteristic of the component).
  std::int64_t exponent() const { return modulus; }

  std::string to_string() const {
    if (kind == ComponentKind::Residue) return "Z/" + std::to_string(modulus);
    return "GF(" + std::to_string(modulus) + ")[x]/(" + poly::render(f) + ")";
  }
  friend bool operator==(const Component&, const Component&) = default;
};

/// Coordinates of a ring element: one digit vector per component
/// ({a} for Z/m, {c0, ..., c_{d-1}} for polynomial slots).
struct RingElement {
  std::vector<std::vector<std::int64_t>> coords;
  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

class RingSpec {
 public:
  RingSpec() : RingSpec(std::vector<Component>{Component::residue(2)}) {}

  explicit RingSpec(std::vector<Component> components) {
    if (components.empty()) throw DomainError("a ring needs at least one component");
    auto built = std::make_shared<Impl>();
    auto& s = *built;
    s.components = std::move(components);
    s.n = 1;
    s.size = 1;
    for (const auto& c : s.components) {
      s.n = arith::lcm(s.n, c.exponent());
      s.size *= c.size();
      if (s.size > kMaxIndexableRing) throw BoundError("ring too large to index (|R| > 2^24)");
    }
    s.strides.resize(s.components.size());
    std::int64_t stride = 1;
    for (std::size_t i = s.components.size(); i-- > 0;) {
      s.strides[i] = stride;
      stride *= s.components[i].size();
    }
    for (const auto& c : s.components) s.arith.push_back(ComponentArith::make(c));
    s.one = 0;
    for (std::size_t i = 0; i < s.components.size(); ++i)
      s.one += static_cast<Elem>(s.strides[i] * s.arith[i].one());
    impl_ = std::move(built);
    check_nondegenerate();
  }

  const std::vector<Component>& components() const { return impl_->components; }
  /// The exponent n with nR = 0.
  std::int64_t exponent() const { return impl_->n; }
  std::int64_t size() const { return impl_->size; }

  Elem zero() const { return 0; }
  Elem one() const { return impl_->one; }

  Elem add(Elem a, Elem b) const {
    return combine(a, b, [](const ComponentArith& c, std::int64_t x, std::int64_t y) { return c.add(x, y); });
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    return combine(a, b, [](const ComponentArith& c, std::int64_t x, std::int64_t y) { return c.mul(x, y); });
  }
  Elem neg(Elem a) const {
    std::int64_t out = 0;
    for (std::size_t i = 0; i < impl_->components.size(); ++i)
      out += impl_->strides[i] * impl_->arith[i].neg(digit(a, i));
    return static_cast<Elem>(out);
  }
  /// k * 1_R.
  Elem scalar(std::int64_t k) const {
    std::int64_t out = 0;
    for (std::size_t i = 0; i < impl_->components.size(); ++i)
      out += impl_->strides[i] * impl_->arith[i].scalar(k);
    return static_cast<Elem>(out);
  }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem result = one();
    while (e > 0) {
      if (e & 1U) result = mul(result, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return result;
  }

  /// The base generating functional psi: R -> Z/n.
  std::int64_t psi(Elem a) const {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < impl_->components.size(); ++i) {
      const std::int64_t weight = impl_->n / impl_->components[i].exponent();
      total = arith::mod(total + weight * impl_->arith[i].functional(digit(a, i)), impl_->n);
    }
    return total;
  }

  bool is_unit(Elem a) const {
    for (std::size_t i = 0; i < impl_->components.size(); ++i)
      if (!impl_->arith[i].is_unit(digit(a, i))) return false;
    return true;
  }
  /// All invertible elements, ascending.
  std::vector<Elem> units() const {
    std::vector<Elem> out;
    for (Elem a = 0; a < static_cast<Elem>(size()); ++a)
      if (is_unit(a)) out.push_back(a);
    return out;
  }

  RingElement element(Elem a) const {
    RingElement e;
    for (std::size_t i = 0; i < impl_->components.size(); ++i)
      e.coords.push_back(impl_->arith[i].digits(digit(a, i)));
    return e;
  }
  Elem index_of(const RingElement& e) const {
    if (e.coords.size() != impl_->components.size()) throw DomainError("element has the wrong number of components");
    std::int64_t out = 0;
    for (std::size_t i = 0; i < impl_->components.size(); ++i)
      out += impl_->strides[i] * impl_->arith[i].encode(e.coords[i]);
    return static_cast<Elem>(out);
  }

  /// Comma-separated coordinates; polynomial slots as "c0+c1*x+c2*x^2".
  std::string render(Elem a) const {
    std::string out;
    const RingElement e = element(a);
    for (std::size_t i = 0; i < e.coords.size(); ++i) {
      if (i) out += ",";
      if (impl_->components[i].kind == ComponentKind::Residue) {
        out += std::to_string(e.coords[i][0]);
      } else {
        for (std::size_t k = 0; k < e.coords[i].size(); ++k) {
          if (k) out += "+";
          out += std::to_string(e.coords[i][k]);
          if (k >= 1) out += "*x";
          if (k >= 2) out += "^" + std::to_string(k);
        }
      }
    }
    return out;
  }
  /// render() wrapped in parentheses when the ring has several components.
  std::string render_item(Elem a) const {
    return impl_->components.size() == 1 ? render(a) : "(" + render(a) + ")";
  }

  /// Parse coordinates, optionally parenthesized; residues and polynomials are reduced.
  Elem parse_element(std::string_view text) const {
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= body.size(); ++k) {
      if (k == body.size() || body[k] == ',') {
        parts.push_back(body.substr(start, k - start));
        start = k + 1;
      }
    }
    if (parts.size() != impl_->components.size())
      throw ParseError("element '" + std::string(text) + "' needs " + std::to_string(impl_->components.size()) +
                       " coordinate(s)");
    std::int64_t out = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& c = impl_->components[i];
      std::int64_t v = 0;
      if (c.kind == ComponentKind::Residue) {
        std::string s(parts[i]);
        s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
        std::size_t used = 0;
        long long parsed = 0;
        try {
          parsed = std::stoll(s, &used);
        } catch (const std::exception&) {
          throw ParseError("bad residue '" + s + "'");
        }
        if (used != s.size()) throw ParseError("bad residue '" + s + "'");
        v = arith::mod(parsed, c.modulus);
      } else {
        poly::Poly g = poly::mod(poly::parse(parts[i], c.modulus), c.f, c.modulus);
        g.resize(static_cast<std::size_t>(c.slots()), 0);
        v = impl_->arith[i].encode(g);
      }
      out += impl_->strides[i] * v;
    }
    return static_cast<Elem>(out);
  }

  /// Canonical ring-spec text, e.g. "Z/4 x GF(3)[x]/(x^2+1)".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < impl_->components.size(); ++i) {
      if (i) out += " x ";
      out += impl_->components[i].to_string();
    }
    return out;
  }

  friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.components() == b.components(); }

 private:
  struct ComponentArith {
    Component comp;
    std::int64_t size = 0;
    int d = 1;
    std::vector<std::int64_t> place;  // p^(d-1-k) for slot k
    std::vector<std::uint8_t> unit_flags;
    std::vector<std::uint32_t> mul_table;  // size^2 entries when small

    static ComponentArith make(const Component& c) {
      ComponentArith a;
      a.comp = c;
      a.size = c.size();
      a.d = c.slots();
      a.place.assign(static_cast<std::size_t>(a.d), 1);
      for (int k = a.d - 2; k >= 0; --k)
        a.place[static_cast<std::size_t>(k)] = a.place[static_cast<std::size_t>(k) + 1] * c.modulus;
      a.unit_flags.resize(static_cast<std::size_t>(a.size));
      for (std::int64_t v = 0; v < a.size; ++v) a.unit_flags[static_cast<std::size_t>(v)] = a.compute_is_unit(v);
      if (c.kind == ComponentKind::PolyQuotient && a.size <= 1024) {
        a.mul_table.resize(static_cast<std::size_t>(a.size * a.size));
        for (std::int64_t x = 0; x < a.size; ++x)
          for (std::int64_t y = 0; y < a.size; ++y)
            a.mul_table[static_cast<std::size_t>(x * a.size + y)] = static_cast<std::uint32_t>(a.poly_mul(x, y));
      }
      return a;
    }

    std::vector<std::int64_t> digits(std::int64_t v) const {
      if (comp.kind == ComponentKind::Residue) return {v};
      std::vector<std::int64_t> out(static_cast<std::size_t>(d));
      for (int k = 0; k < d; ++k) out[static_cast<std::size_t>(k)] = (v / place[static_cast<std::size_t>(k)]) % comp.modulus;
      return out;
    }
    std::int64_t encode(const std::vector<std::int64_t>& digs) const {
      if (static_cast<int>(digs.size()) != d) throw DomainError("coordinate slot has the wrong length");
      std::int64_t v = 0;
      for (int k = 0; k < d; ++k) {
        const auto x = digs[static_cast<std::size_t>(k)];
        if (x < 0 || x >= comp.modulus) throw DomainError("coordinate out of range");
        v += x * place[static_cast<std::size_t>(k)];
      }
      return v;
    }
    std::int64_t one() const { return comp.kind == ComponentKind::Residue ? 1 % comp.modulus : place[0]; }
    std::int64_t scalar(std::int64_t k) const { return arith::mod(k, comp.modulus) * (comp.kind == ComponentKind::Residue ? 1 : place[0]); }
    std::int64_t add(std::int64_t x, std::int64_t y) const {
      if (comp.kind == ComponentKind::Residue) {
        const std::int64_t s = x + y;
        return s >= comp.modulus ? s - comp.modulus : s;
      }
      std::int64_t out = 0;
      for (int k = 0; k < d; ++k) {
        const auto pl = place[static_cast<std::size_t>(k)];
        out += ((x / pl + y / pl) % comp.modulus) * pl;
        x %= pl;
        y %= pl;
      }
      return out;
    }
    std::int64_t neg(std::int64_t x) const {
      if (comp.kind == ComponentKind::Residue) return x == 0 ? 0 : comp.modulus - x;
      std::int64_t out = 0;
      for (int k = 0; k < d; ++k) {
        const auto pl = place[static_cast<std::size_t>(k)];
        out += ((comp.modulus - (x / pl) % comp.modulus) % comp.modulus) * pl;
        x %= pl;
      }
      return out;
    }
    std::int64_t mul(std::int64_t x, std::int64_t y) const {
      if (comp.kind == ComponentKind::Residue) return arith::mulmod(x, y, comp.modulus);
      if (!mul_table.empty()) return mul_table[static_cast<std::size_t>(x * size + y)];
      return poly_mul(x, y);
    }
    std::int64_t poly_mul(std::int64_t x, std::int64_t y) const {
      if (d <= kSmallDegree) return poly_mul_small(x, y);
      const auto a = digits(x), b = digits(y);
      poly::Poly prod(static_cast<std::size_t>(2 * d - 1), 0);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % comp.modulus;
      prod = poly::mod(std::move(prod), comp.f, comp.modulus);
      prod.resize(static_cast<std::size_t>(d), 0);
      return encode(prod);
    }
    static constexpr int kSmallDegree = 32;
    // Schoolbook product on the stack, then reduction by the monic f from the top down.
    std::int64_t poly_mul_small(std::int64_t x, std::int64_t y) const {
      const std::int64_t p = comp.modulus;
      std::array<std::int64_t, kSmallDegree> a{}, b{};
      std::array<std::int64_t, 2 * kSmallDegree> prod{};
      for (int k = 0; k < d; ++k) {
        a[static_cast<std::size_t>(k)] = (x / place[static_cast<std::size_t>(k)]) % p;
        b[static_cast<std::size_t>(k)] = (y / place[static_cast<std::size_t>(k)]) % p;
      }
      for (int i = 0; i < d; ++i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)]) % p;
      }
      for (int k = 2 * d - 2; k >= d; --k) {
        const std::int64_t c = prod[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        for (int j = 0; j < d; ++j) {
          auto& t = prod[static_cast<std::size_t>(k - d + j)];
          t = arith::mod(t - c * comp.f[static_cast<std::size_t>(j)], p);
        }
      }
      std::int64_t v = 0;
      for (int k = 0; k < d; ++k) v += prod[static_cast<std::size_t>(k)] * place[static_cast<std::size_t>(k)];
      return v;
    }
    std::int64_t functional(std::int64_t x) const {
      if (comp.kind == ComponentKind::Residue) return x;
      return x % comp.modulus;  // last digit = coefficient of x^(d-1)
    }
    bool compute_is_unit(std::int64_t x) const {
      if (comp.kind == ComponentKind::Residue) return arith::gcd(x, comp.modulus) == 1;
      const auto g = poly::gcd(digits(x), comp.f, comp.modulus);
      return g.size() == 1;
    }
    bool is_unit(std::int64_t x) const { return unit_flags[static_cast<std::size_t>(x)] != 0; }
  };

  struct Impl {
    std::vector<Component> components;
    std::vector<ComponentArith> arith;
    std::vector<std::int64_t> strides;
    std::int64_t n = 1;
    std::int64_t size = 1;
    Elem one = 0;
  };

  std::int64_t digit(Elem a, std::size_t i) const {
    return (static_cast<std::int64_t>(a) / impl_->strides[i]) % impl_->components[i].size();
  }

  template <class Op>
  Elem combine(Elem a, Elem b, Op op) const {
    std::int64_t out = 0;
    for (std::size_t i = 0; i < impl_->components.size(); ++i)
      out += impl_->strides[i] * op(impl_->arith[i], digit(a, i), digit(b, i));
    return static_cast<Elem>(out);
  }

  // For every nonzero x in a component some y has psi_i(xy) != 0. Weighted sums
  // of non-degenerate component functionals stay non-degenerate, so this suffices.
  void check_nondegenerate() const {
    for (const auto& c : impl_->arith) {
      if (c.size > 4096) continue;  // large components: the functional is non-degenerate by construction
      for (std::int64_t x = 1; x < c.size; ++x) {
        bool witnessed = false;
        for (std::int64_t y = 0; y < c.size && !witnessed; ++y) witnessed = c.functional(c.mul(x, y)) != 0;
        if (!witnessed) throw CheckFailure("generating functional is degenerate on " + c.comp.to_string());
      }
    }
  }

  std::shared_ptr<const Impl> impl_;
};

/// Parse `component ("x" component)*` with component := Z/<m> | GF(<p>)[x]/(<poly>).
inline RingSpec parse_ring_spec(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](std::string_view token) {
    skip();
    if (text.substr(i, token.size()) != token)
      throw ParseError("expected '" + std::string(token) + "'", i);
    i += token.size();
  };
  auto number = [&]() -> std::int64_t {
    skip();
    const std::size_t start = i;
    std::int64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > kMaxIndexableRing) throw ParseError("number too large", start);
      ++i;
    }
    if (i == start) throw ParseError("expected a number", start);
    return v;
  };
  std::vector<Component> comps;
  while (true) {
    skip();
    if (text.substr(i, 2) == "Z/") {
      i += 2;
      const std::size_t at = i;
      const std::int64_t m = number();
      if (m < 2) throw DomainError("Z/m requires m >= 2 (at position " + std::to_string(at) + ")");
      comps.push_back(Component::residue(m));
    } else if (text.substr(i, 3) == "GF(") {
      i += 3;
      const std::size_t at = i;
      const std::int64_t p = number();
      expect(")");
      expect("[x]");
      expect("/");
      expect("(");
      skip();
      const std::size_t open = i;
      int depth = 0;
      while (i < text.size() && !(text[i] == ')' && depth == 0)) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        ++i;
      }
      if (i == text.size()) throw ParseError("unterminated polynomial", open);
      if (!arith::is_prime(p)) throw DomainError("GF(p) requires p prime, got " + std::to_string(p) + " (at position " + std::to_string(at) + ")");
      // Check monicity before reduction so "2x^2+1" is rejected rather than rescaled.
      poly::Poly f = poly::parse(text.substr(open, i - open), p, open);
      poly::trim(f);
      ++i;
      comps.push_back(Component::poly_quotient(p, f));
    } else {
      throw ParseError("expected 'Z/<m>' or 'GF(<p>)[x]/(<poly>)'", i);
    }
    skip();
    if (i == text.size()) break;
    if (text[i] != 'x') throw ParseError("expected 'x' between components", i);
    ++i;
  }
  return RingSpec(std::move(comps));
}

/// psi composed with multiplication by a fixed unit: a -> psi(scale * a).
/// Any unit scale gives another non-degenerate functional.
class GeneratingFunctional {
 public:
  explicit GeneratingFunctional(RingSpec ring) : GeneratingFunctional(std::move(ring), 0, true) {}
  GeneratingFunctional(RingSpec ring, Elem scale) : GeneratingFunctional(std::move(ring), scale, false) {}

  const RingSpec& ring() const { return ring_; }
  Elem scale() const { return scale_; }
  int order() const { return static_cast<int>(ring_.exponent()); }

  std::int64_t operator()(Elem a) const { return ring_.psi(scaled_ ? ring_.mul(scale_, a) : a); }
  /// chi_r(s) = z_n^psi(r s) as an exact cyclotomic number.
  CycNumber chi(Elem r, Elem s) const { return CycNumber::root_of_unity(order(), (*this)(ring_.mul(r, s))); }
  /// Exponent of chi_r(s) as a power of z_n.
  std::int64_t chi_exponent(Elem r, Elem s) const { return (*this)(ring_.mul(r, s)); }

 private:
  GeneratingFunctional(RingSpec ring, Elem scale, bool identity) : ring_(std::move(ring)) {
    scale_ = identity ? ring_.one() : scale;
    scaled_ = !identity && scale_ != ring_.one();
    if (scale_ >= ring_.size() || !ring_.is_unit(scale_)) throw DomainError("functional scale must be a unit");
  }

  RingSpec ring_;
  Elem scale_ = 0;
  bool scaled_ = false;
};

inline std::int64_t psi(const RingSpec& spec, Elem a) { return spec.psi(a); }
inline CycNumber chi(const RingSpec& spec, Elem r, Elem s) { return GeneratingFunctional(spec).chi(r, s); }
inline std::vector<Elem> units(const RingSpec& spec) { return spec.units(); }

}  // namespace supercayley
