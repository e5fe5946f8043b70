// Exact arithmetic for the finite commutative rings Z_n and GF(p^d),
// plus the number-theoretic helpers the graph constructions depend on:
// factorization, Euler's totient, and the solver for x^2 = -1 (mod n).
#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dotgraph {

/// Element of a finite ring, identified by its canonical code.
///
/// For Z_n the code is the residue in [0, n). For GF(p^d) the code ranks the
/// coefficient vector (c0, ..., c_{d-1}) (ascending degree) in lexicographic
/// order with the degree-0 coefficient compared first, so ascending code is
/// the canonical element order for both ring kinds.
struct Element {
  std::uint32_t code = 0;

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Prime factorization n = p_1^{k_1} ... p_r^{k_r}, pairs ascending by prime.
struct Factorization {
  std::vector<std::pair<std::int64_t, int>> pairs;

  /// Number of distinct prime factors.
  int r() const { return static_cast<int>(pairs.size()); }

  std::int64_t value() const {
    std::int64_t v = 1;
    for (const auto& [p, k] : pairs)
      for (int i = 0; i < k; ++i) v *= p;
    return v;
  }
};

/// Trial division; intended for desk-scale inputs (n up to ~10^6).
inline Factorization factorize(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
  Factorization f;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    f.pairs.emplace_back(p, k);
  }
  if (n > 1) f.pairs.emplace_back(n, 1);
  return f;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

/// Euler's totient, computed as prod (p_i - 1) p_i^{k_i - 1} over the
/// factorization.
inline std::int64_t totient(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("totient: n must be >= 2");
  std::int64_t phi = 1;
  for (const auto& [p, k] : factorize(n).pairs) {
    phi *= p - 1;
    for (int i = 1; i < k; ++i) phi *= p;
  }
  return phi;
}

namespace detail {

// Polynomial helpers over Z_p, coefficient vectors in ascending degree.

inline std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

// Remainder of a / b with b monic, in place on a copy of a.
inline std::vector<std::int64_t> poly_rem(std::vector<std::int64_t> a,
                                          const std::vector<std::int64_t>& b,
                                          std::int64_t p) {
  const int db = static_cast<int>(b.size()) - 1;
  assert(db >= 0 && b[db] == 1);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = mod_pos(a[i - db + j] - c * b[j], p);
  }
  a.resize(db);
  return a;
}

inline bool poly_is_zero(const std::vector<std::int64_t>& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

}  // namespace detail

/// A finite commutative ring: either Z_n (n >= 2) or GF(p^d) realized as
/// Z_p[X] modulo a monic irreducible polynomial of degree d.
///
/// All operations are pure functions on immutable state; a constructed Ring
/// can be shared freely across threads.
class Ring {
 public:
  enum class Kind { modular, finite_field };

  /// Z_n. Throws std::invalid_argument for n < 2.
  static Ring integers_mod(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("integers_mod: n must be >= 2");
    if (n > kMaxModulus)
      throw std::invalid_argument("integers_mod: n exceeds supported range");
    Ring r;
    r.kind_ = Kind::modular;
    r.size_ = n;
    return r;
  }

  /// GF(p^d). The modulus is the lexicographically smallest monic irreducible
  /// polynomial of degree d, coefficients compared low-degree first; for
  /// d = 1 the modulus is X. Throws std::invalid_argument if p is not prime
  /// or d < 1.
  static Ring finite_field(std::int64_t p, int degree) {
    if (!is_prime(p)) throw std::invalid_argument("finite_field: p must be prime");
    if (degree < 1) throw std::invalid_argument("finite_field: degree must be >= 1");
    Ring r;
    r.kind_ = Kind::finite_field;
    r.p_ = p;
    r.degree_ = degree;
    r.size_ = 1;
    for (int i = 0; i < degree; ++i) {
      r.size_ *= p;
      if (r.size_ > kMaxModulus)
        throw std::invalid_argument("finite_field: p^d exceeds supported range");
    }
    r.pow_.resize(degree + 1);
    r.pow_[0] = 1;
    for (int i = 1; i <= degree; ++i) r.pow_[i] = r.pow_[i - 1] * p;
    r.modulus_ = find_modulus(p, degree);
    return r;
  }

  Kind kind() const { return kind_; }
  bool is_field() const { return kind_ == Kind::finite_field; }
  std::int64_t size() const { return size_; }

  /// Modulus n of Z_n.
  std::int64_t modulus() const {
    require_kind(Kind::modular);
    return size_;
  }

  std::int64_t prime() const {
    require_kind(Kind::finite_field);
    return p_;
  }
  int degree() const {
    require_kind(Kind::finite_field);
    return degree_;
  }

  /// Field modulus polynomial, ascending-degree coefficients, length d + 1,
  /// monic.
  const std::vector<std::int64_t>& modulus_poly() const {
    require_kind(Kind::finite_field);
    return modulus_;
  }

  Element zero() const { return Element{0}; }

  Element one() const {
    if (kind_ == Kind::modular) return Element{1};
    return encode_digit(1);  // constant polynomial 1
  }

  Element element(std::int64_t code) const {
    if (code < 0 || code >= size_)
      throw std::invalid_argument("element: code out of range");
    return Element{static_cast<std::uint32_t>(code)};
  }

  /// Canonical residue, Z_n only.
  std::int64_t residue(Element x) const {
    require_kind(Kind::modular);
    return x.code;
  }

  /// Coefficient vector (ascending degree, length d), fields only.
  std::vector<std::int64_t> coeffs(Element x) const {
    require_kind(Kind::finite_field);
    std::vector<std::int64_t> c(degree_);
    for (int i = 0; i < degree_; ++i) c[i] = digit(x.code, i);
    return c;
  }

  /// Field element from coefficients (ascending degree); reduced mod p,
  /// at most d of them.
  Element from_coeffs(const std::vector<std::int64_t>& c) const {
    require_kind(Kind::finite_field);
    if (static_cast<int>(c.size()) > degree_)
      throw std::invalid_argument("from_coeffs: too many coefficients");
    std::int64_t code = 0;
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
      code += detail::mod_pos(c[i], p_) * pow_[degree_ - 1 - i];
    return Element{static_cast<std::uint32_t>(code)};
  }

  Element add(Element x, Element y) const {
    if (kind_ == Kind::modular) {
      std::int64_t s = static_cast<std::int64_t>(x.code) + y.code;
      if (s >= size_) s -= size_;
      return Element{static_cast<std::uint32_t>(s)};
    }
    std::int64_t code = 0;
    for (int i = 0; i < degree_; ++i) {
      std::int64_t s = digit(x.code, i) + digit(y.code, i);
      if (s >= p_) s -= p_;
      code += s * pow_[degree_ - 1 - i];
    }
    return Element{static_cast<std::uint32_t>(code)};
  }

  Element neg(Element x) const {
    if (kind_ == Kind::modular)
      return Element{static_cast<std::uint32_t>(x.code == 0 ? 0 : size_ - x.code)};
    std::int64_t code = 0;
    for (int i = 0; i < degree_; ++i) {
      std::int64_t c = digit(x.code, i);
      code += (c == 0 ? 0 : p_ - c) * pow_[degree_ - 1 - i];
    }
    return Element{static_cast<std::uint32_t>(code)};
  }

  Element sub(Element x, Element y) const { return add(x, neg(y)); }

  Element mul(Element x, Element y) const {
    if (kind_ == Kind::modular)
      return Element{static_cast<std::uint32_t>(
          (static_cast<std::int64_t>(x.code) * y.code) % size_)};
    // Convolution followed by reduction mod the (monic) field modulus.
    std::int64_t buf[2 * kMaxDegree - 1] = {};
    for (int i = 0; i < degree_; ++i) {
      const std::int64_t xi = digit(x.code, i);
      if (xi == 0) continue;
      for (int j = 0; j < degree_; ++j)
        buf[i + j] += xi * digit(y.code, j);
    }
    for (int e = 2 * degree_ - 2; e >= degree_; --e) {
      const std::int64_t c = buf[e] % p_;
      if (c != 0)
        for (int j = 0; j < degree_; ++j)
          buf[e - degree_ + j] = detail::mod_pos(buf[e - degree_ + j] - c * modulus_[j], p_);
      buf[e] = 0;
    }
    std::int64_t code = 0;
    for (int i = 0; i < degree_; ++i)
      code += (buf[i] % p_) * pow_[degree_ - 1 - i];
    return Element{static_cast<std::uint32_t>(code)};
  }

  Element pow(Element x, std::int64_t e) const {
    assert(e >= 0);
    Element acc = one();
    Element base = x;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  /// Multiplicative inverse; std::nullopt when x is not a unit.
  std::optional<Element> inverse(Element x) const {
    if (kind_ == Kind::finite_field) {
      if (x.code == 0) return std::nullopt;
      return pow(x, size_ - 2);
    }
    std::int64_t r0 = size_, r1 = x.code;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      r0 -= q * r1;
      std::swap(r0, r1);
      s0 -= q * s1;
      std::swap(s0, s1);
    }
    if (r0 != 1) return std::nullopt;
    return Element{static_cast<std::uint32_t>(detail::mod_pos(s0, size_))};
  }

  bool is_unit(Element x) const {
    if (kind_ == Kind::finite_field) return x.code != 0;
    return std::gcd(static_cast<std::int64_t>(x.code), size_) == 1;
  }

  /// Zero-divisor test with 0 counted as a zero-divisor; in a finite
  /// commutative ring this is exactly the complement of the units.
  bool is_zero_divisor(Element x) const { return !is_unit(x); }

  /// All elements in canonical ascending order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size_);
    for (std::int64_t c = 0; c < size_; ++c)
      out.push_back(Element{static_cast<std::uint32_t>(c)});
    return out;
  }

  /// Units in canonical ascending order; |units()| = totient(n) for Z_n.
  std::vector<Element> units() const {
    std::vector<Element> out;
    for (std::int64_t c = 0; c < size_; ++c) {
      Element x{static_cast<std::uint32_t>(c)};
      if (is_unit(x)) out.push_back(x);
    }
    return out;
  }

  /// Zero-divisors (including 0) in canonical ascending order. Together with
  /// units() this partitions elements().
  std::vector<Element> zero_divisors() const {
    std::vector<Element> out;
    for (std::int64_t c = 0; c < size_; ++c) {
      Element x{static_cast<std::uint32_t>(c)};
      if (!is_unit(x)) out.push_back(x);
    }
    return out;
  }

  std::int64_t unit_count() const {
    if (kind_ == Kind::finite_field) return size_ - 1;
    return totient(size_);
  }

  /// Display form: the residue for Z_n, a polynomial in the generator symbol
  /// "v" for fields (descending degree, e.g. "v^2+2v+1").
  std::string to_string(Element x) const {
    if (kind_ == Kind::modular) return std::to_string(x.code);
    std::string out;
    for (int i = degree_ - 1; i >= 0; --i) {
      const std::int64_t c = digit(x.code, i);
      if (c == 0) continue;
      if (!out.empty()) out += '+';
      if (i == 0) {
        out += std::to_string(c);
      } else {
        if (c != 1) out += std::to_string(c);
        out += 'v';
        if (i > 1) out += '^' + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

  std::string name() const {
    if (kind_ == Kind::modular) return "Z_" + std::to_string(size_);
    return "GF(" + std::to_string(size_) + ")";
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.size_ == b.size_ && a.modulus_ == b.modulus_;
  }

 private:
  static constexpr std::int64_t kMaxModulus = 1 << 20;
  static constexpr int kMaxDegree = 20;

  Ring() = default;

  void require_kind(Kind k) const {
    if (kind_ != k) throw std::logic_error("operation not defined for this ring kind");
  }

  // Base-p digit i of a code, i.e. the degree-i coefficient. Digit 0 is the
  // most significant so that ascending code matches the lexicographic order.
  std::int64_t digit(std::uint32_t code, int i) const {
    return (code / pow_[degree_ - 1 - i]) % p_;
  }

  Element encode_digit(std::int64_t c0) const {
    return Element{static_cast<std::uint32_t>(c0 * pow_[degree_ - 1])};
  }

  // f monic of degree d >= 1, ascending coefficients. Irreducible over Z_p
  // iff no monic polynomial of degree 1..d/2 divides it; degree-1 trial
  // divisors are exactly the root test.
  static bool is_irreducible(const std::vector<std::int64_t>& f, std::int64_t p) {
    const int d = static_cast<int>(f.size()) - 1;
    for (int e = 1; 2 * e <= d; ++e) {
      std::int64_t count = 1;
      for (int i = 0; i < e; ++i) count *= p;
      for (std::int64_t idx = 0; idx < count; ++idx) {
        std::vector<std::int64_t> g(e + 1);
        std::int64_t rest = idx;
        for (int i = 0; i < e; ++i) {
          g[i] = rest % p;
          rest /= p;
        }
        g[e] = 1;
        if (detail::poly_is_zero(detail::poly_rem(f, g, p))) return false;
      }
    }
    return true;
  }

  static std::vector<std::int64_t> find_modulus(std::int64_t p, int d) {
    if (d > kMaxDegree)
      throw std::invalid_argument("finite_field: degree exceeds supported range");
    if (d == 1) return {0, 1};  // X
    // Free coefficients (c0, ..., c_{d-1}) in ascending lexicographic order,
    // c0 compared first.
    std::vector<std::int64_t> pw(d);
    pw[0] = 1;
    for (int i = 1; i < d; ++i) pw[i] = pw[i - 1] * p;
    std::int64_t count = pw[d - 1] * p;
    for (std::int64_t rank = 0; rank < count; ++rank) {
      std::vector<std::int64_t> f(d + 1);
      for (int i = 0; i < d; ++i) f[i] = (rank / pw[d - 1 - i]) % p;
      f[d] = 1;
      if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("finite_field: no irreducible polynomial found");
  }

  Kind kind_ = Kind::modular;
  std::int64_t size_ = 2;
  std::int64_t p_ = 0;
  int degree_ = 0;
  std::vector<std::int64_t> pow_;
  std::vector<std::int64_t> modulus_;
};

/// All a in U(Z_n) with a^2 = n - 1 (mod n), ascending, by exhaustive search.
inline std::vector<Element> sqrt_of_minus_one(std::int64_t n) {
  const Ring r = Ring::integers_mod(n);
  const Element target = r.neg(r.one());
  std::vector<Element> out;
  for (Element a : r.units())
    if (r.mul(a, a) == target) out.push_back(a);
  return out;
}

/// Closed-form solution count for x^2 = -1 (mod n): 0 when 4 | n or some odd
/// prime factor is not 1 mod 4; otherwise 2^{r-1} for even n and 2^r for odd
/// n, with r the number of distinct prime factors. n = 2 counts as even with
/// no odd prime factors, giving 2^0 = 1.
inline std::int64_t sqrt_of_minus_one_count_formula(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("sqrt_of_minus_one_count_formula: n must be >= 2");
  if (n % 4 == 0) return 0;
  const Factorization f = factorize(n);
  for (const auto& [p, k] : f.pairs)
    if (p != 2 && (p - 1) % 4 != 0) return 0;
  const int r = f.r();
  return n % 2 == 0 ? (std::int64_t{1} << (r - 1)) : (std::int64_t{1} << r);
}

}  // namespace dotgraph
