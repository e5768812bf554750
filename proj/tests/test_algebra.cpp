#include "wallach/algebra.hpp"

#include <doctest.h>

#include <random>

using namespace wallach;

namespace {

template <typename S>
Element<S> random_element(AlgebraTag tag, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Element<S> x(tag);
  for (int u = 0; u < tag.dim(); ++u) x[u] = S(num(rng)) / S(den(rng));
  return x;
}

template <>
Element<double> random_element<double>(AlgebraTag tag, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  Element<double> x(tag);
  for (int u = 0; u < tag.dim(); ++u) x[u] = num(rng);
  return x;
}

const AlgebraTag kAll[] = {kReal, kComplex, kQuaternion, kOctonion};

}  // namespace

TEST_CASE("defining relations of the unit tables") {
  auto u = [](AlgebraTag t, int k) { return AlgElem::unit(t, k); };

  // i*i = -1
  CHECK(multiply(u(kComplex, 1), u(kComplex, 1)) == -u(kComplex, 0));
  // quaternions: i*j = k, j*i = -k
  CHECK(multiply(u(kQuaternion, 1), u(kQuaternion, 2)) == u(kQuaternion, 3));
  CHECK(multiply(u(kQuaternion, 2), u(kQuaternion, 1)) == -u(kQuaternion, 3));
  // octonions: m = i l, n = j l, o = k l
  CHECK(multiply(u(kOctonion, 1), u(kOctonion, 4)) == u(kOctonion, 5));
  CHECK(multiply(u(kOctonion, 2), u(kOctonion, 4)) == u(kOctonion, 6));
  CHECK(multiply(u(kOctonion, 3), u(kOctonion, 4)) == u(kOctonion, 7));
  CHECK(multiply(u(kOctonion, 4), u(kOctonion, 4)) == -u(kOctonion, 0));
}

TEST_CASE("octonion associator witness") {
  // (i j) l - i (j l) = 2o with this table: nonassociativity
  const auto i = AlgElem::unit(kOctonion, 1);
  const auto j = AlgElem::unit(kOctonion, 2);
  const auto l = AlgElem::unit(kOctonion, 4);
  const AlgElem assoc = multiply(multiply(i, j), l) - multiply(i, multiply(j, l));
  CHECK(assoc == 2.0 * AlgElem::unit(kOctonion, 7));
}

TEST_CASE("conjugate, re, norm2 basics") {
  auto one = AlgElem::unit(kQuaternion, 0);
  CHECK(conjugate(one) == one);

  AlgElem x(kQuaternion);
  x[1] = 1.0;
  x[2] = 2.0;
  CHECK(re(x) == 0.0);

  AlgElem y(kQuaternion);
  y[0] = y[1] = y[2] = y[3] = 1.0;
  CHECK(norm2(y) == 4.0);
}

TEST_CASE("tag mismatch is rejected") {
  CHECK_THROWS_AS(multiply(AlgElem::unit(kComplex, 0), AlgElem::unit(kQuaternion, 0)),
                  std::invalid_argument);
}

TEST_CASE("norm multiplicativity, exact over rationals") {
  std::mt19937 rng(20260810);
  for (AlgebraTag tag : kAll) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto x = random_element<Rational>(tag, rng);
      const auto y = random_element<Rational>(tag, rng);
      CHECK(norm2(multiply(x, y)) == norm2(x) * norm2(y));
    }
  }
}

TEST_CASE("alternativity in the octonions") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_element<Rational>(kOctonion, rng);
    const auto y = random_element<Rational>(kOctonion, rng);
    CHECK(multiply(x, multiply(x, y)) == multiply(multiply(x, x), y));
    CHECK(multiply(multiply(y, x), x) == multiply(y, multiply(x, x)));
  }
}

TEST_CASE("conjugation is an antihomomorphism") {
  std::mt19937 rng(11);
  for (AlgebraTag tag : kAll) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = random_element<Rational>(tag, rng);
      const auto y = random_element<Rational>(tag, rng);
      CHECK(conjugate(multiply(x, y)) == multiply(conjugate(y), conjugate(x)));
    }
  }
}

TEST_CASE("subalgebra chain R < C < H < Ca") {
  std::mt19937 rng(13);
  const AlgebraTag chain[] = {kReal, kComplex, kQuaternion};
  for (AlgebraTag small : chain) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = random_element<Rational>(small, rng);
      const auto y = random_element<Rational>(small, rng);
      const auto small_prod = multiply(x, y);
      const auto wide_prod = multiply(widen(x, kOctonion), widen(y, kOctonion));
      CHECK(wide_prod == widen(small_prod, kOctonion));
    }
  }
}
