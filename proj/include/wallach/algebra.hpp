#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace wallach {

/// Exact scalar used wherever structure constants are rational.
using Rational = boost::rational<long long>;

enum class AlgebraKind : int { Real = 1, Complex = 2, Quaternion = 4, Octonion = 8 };

struct AlgebraTag {
  AlgebraKind kind = AlgebraKind::Real;
  int dim() const { return static_cast<int>(kind); }
  friend bool operator==(const AlgebraTag&, const AlgebraTag&) = default;
};

inline constexpr AlgebraTag kReal{AlgebraKind::Real};
inline constexpr AlgebraTag kComplex{AlgebraKind::Complex};
inline constexpr AlgebraTag kQuaternion{AlgebraKind::Quaternion};
inline constexpr AlgebraTag kOctonion{AlgebraKind::Octonion};

/// e_a * e_b = sign * e_index.  The table is generated by Cayley-Dickson
/// doubling with the convention (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)),
/// so l = (0,1), m = il, n = jl, o = kl.  Subalgebras are index prefixes.
struct UnitProduct {
  std::int8_t sign;
  std::int8_t index;
};

const UnitProduct& unit_product(int a, int b);

/// Symbols for the standard basis 1,i,j,k,l,m,n,o.
extern const std::array<const char*, 8> kUnitNames;

/// Element of R, C, H or Ca over the standard basis.
template <typename Scalar>
struct Element {
  AlgebraTag tag{};
  std::array<Scalar, 8> c{};

  Element() = default;
  explicit Element(AlgebraTag t) : tag(t) { c.fill(Scalar(0)); }

  static Element unit(AlgebraTag t, int u) {
    if (u < 0 || u >= t.dim()) throw std::invalid_argument("unit index out of range");
    Element e(t);
    e.c[static_cast<std::size_t>(u)] = Scalar(1);
    return e;
  }
  static Element scalar(AlgebraTag t, Scalar v) {
    Element e(t);
    e.c[0] = v;
    return e;
  }

  Scalar& operator[](int u) { return c[static_cast<std::size_t>(u)]; }
  const Scalar& operator[](int u) const { return c[static_cast<std::size_t>(u)]; }

  friend bool operator==(const Element& x, const Element& y) {
    return x.tag == y.tag && x.c == y.c;
  }
};

namespace detail {
inline void require_same_tag(AlgebraTag a, AlgebraTag b) {
  if (!(a == b)) throw std::invalid_argument("algebra tag mismatch");
}
}  // namespace detail

template <typename S>
Element<S> operator+(const Element<S>& x, const Element<S>& y) {
  detail::require_same_tag(x.tag, y.tag);
  Element<S> r(x.tag);
  for (int u = 0; u < x.tag.dim(); ++u) r[u] = x[u] + y[u];
  return r;
}

template <typename S>
Element<S> operator-(const Element<S>& x, const Element<S>& y) {
  detail::require_same_tag(x.tag, y.tag);
  Element<S> r(x.tag);
  for (int u = 0; u < x.tag.dim(); ++u) r[u] = x[u] - y[u];
  return r;
}

template <typename S>
Element<S> operator-(const Element<S>& x) {
  Element<S> r(x.tag);
  for (int u = 0; u < x.tag.dim(); ++u) r[u] = -x[u];
  return r;
}

template <typename S>
Element<S> operator*(const S& a, const Element<S>& x) {
  Element<S> r(x.tag);
  for (int u = 0; u < x.tag.dim(); ++u) r[u] = a * x[u];
  return r;
}

/// Bilinear product from the fixed multiplication table.
template <typename S>
Element<S> multiply(const Element<S>& x, const Element<S>& y) {
  detail::require_same_tag(x.tag, y.tag);
  Element<S> r(x.tag);
  const int d = x.tag.dim();
  for (int a = 0; a < d; ++a) {
    if (x[a] == S(0)) continue;
    for (int b = 0; b < d; ++b) {
      if (y[b] == S(0)) continue;
      const UnitProduct& p = unit_product(a, b);
      if (p.sign > 0)
        r[p.index] = r[p.index] + x[a] * y[b];
      else
        r[p.index] = r[p.index] - x[a] * y[b];
    }
  }
  return r;
}

template <typename S>
Element<S> operator*(const Element<S>& x, const Element<S>& y) {
  return multiply(x, y);
}

/// Conjugation: negates every imaginary coefficient.
template <typename S>
Element<S> conjugate(const Element<S>& x) {
  Element<S> r = x;
  for (int u = 1; u < x.tag.dim(); ++u) r[u] = -r[u];
  return r;
}

template <typename S>
S re(const Element<S>& x) {
  return x[0];
}

template <typename S>
S norm2(const Element<S>& x) {
  S n(0);
  for (int u = 0; u < x.tag.dim(); ++u) n = n + x[u] * x[u];
  return n;
}

using AlgElem = Element<double>;
using AlgElemQ = Element<Rational>;

/// Embed into a larger algebra (coefficients are a prefix).
template <typename S>
Element<S> widen(const Element<S>& x, AlgebraTag to) {
  if (to.dim() < x.tag.dim()) throw std::invalid_argument("widen: target too small");
  Element<S> r(to);
  for (int u = 0; u < x.tag.dim(); ++u) r[u] = x[u];
  return r;
}

std::string to_string(const AlgElem& x);

}  // namespace wallach
