#include "wallach/exterior.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace wallach {

WedgeSpace::WedgeSpace(int n) : n_(n) {
  pair_index_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      pair_index_[a][b] = static_cast<int>(pairs_.size());
      pairs_.push_back({a, b});
    }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) quads_.push_back({a, b, c, d});
  binom_.assign(static_cast<std::size_t>(n + 1) * 5, 0);
  for (int t = 0; t <= n; ++t) {
    binom_[static_cast<std::size_t>(t) * 5] = 1;
    for (int k = 1; k <= 4; ++k) {
      long long v = t == 0 ? 0 : binom_[static_cast<std::size_t>(t - 1) * 5 + k - 1] +
                                      binom_[static_cast<std::size_t>(t - 1) * 5 + k];
      binom_[static_cast<std::size_t>(t) * 5 + k] = v;
    }
  }
}

long long WedgeSpace::binom(int t, int k) const {
  if (t < 0 || k < 0 || k > 4 || t < k) return 0;
  return binom_[static_cast<std::size_t>(t) * 5 + k];
}

int WedgeSpace::quad_index(int a, int b, int c, int d) const {
  // lexicographic rank of the ascending quadruple
  long long r = 0;
  for (int t = 0; t < a; ++t) r += binom(n_ - 1 - t, 3);
  for (int t = a + 1; t < b; ++t) r += binom(n_ - 1 - t, 2);
  for (int t = b + 1; t < c; ++t) r += binom(n_ - 1 - t, 1);
  r += d - c - 1;
  return static_cast<int>(r);
}

int WedgeSpace::sort_signed(std::array<int, 4>& q) {
  int sign = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3 - i; ++j)
      if (q[j] > q[j + 1]) {
        std::swap(q[j], q[j + 1]);
        sign = -sign;
      }
  for (int i = 0; i < 3; ++i)
    if (q[i] == q[i + 1]) return 0;
  return sign;
}

int WedgeSpace::sort_signed(std::array<int, 2>& q) {
  if (q[0] == q[1]) return 0;
  if (q[0] > q[1]) {
    std::swap(q[0], q[1]);
    return -1;
  }
  return 1;
}

const WedgeSpace& WedgeSpace::get(int n) {
  static std::map<int, WedgeSpace> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, WedgeSpace(n)).first;
  return it->second;
}

Bivector wedge2(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  const int n = static_cast<int>(x.size());
  if (y.size() != n) throw std::invalid_argument("wedge2: size mismatch");
  const WedgeSpace& ws = WedgeSpace::get(n);
  Bivector b(n);
  for (int p = 0; p < ws.dim2(); ++p) {
    const auto& pr = ws.pair(p);
    b.coeffs[p] = x[pr[0]] * y[pr[1]] - x[pr[1]] * y[pr[0]];
  }
  return b;
}

FourForm wedge22(const Bivector& b1, const Bivector& b2) {
  if (b1.n != b2.n) throw std::invalid_argument("wedge22: size mismatch");
  const WedgeSpace& ws = WedgeSpace::get(b1.n);
  FourForm w(b1.n);
  for (int p = 0; p < ws.dim2(); ++p) {
    const double u = b1.coeffs[p];
    if (u == 0.0) continue;
    for (int q = 0; q < ws.dim2(); ++q) {
      const double v = b2.coeffs[q];
      if (v == 0.0) continue;
      std::array<int, 4> quad = {ws.pair(p)[0], ws.pair(p)[1], ws.pair(q)[0], ws.pair(q)[1]};
      const int sign = WedgeSpace::sort_signed(quad);
      if (sign == 0) continue;
      w.coeffs[ws.quad_index(quad[0], quad[1], quad[2], quad[3])] += sign * u * v;
    }
  }
  return w;
}

SymOp form_as_operator(const FourForm& w) {
  const WedgeSpace& ws = WedgeSpace::get(w.n);
  SymOp op = SymOp::Zero(ws.dim2(), ws.dim2());
  for (int q = 0; q < ws.dim4(); ++q) {
    const double v = w.coeffs[q];
    if (v == 0.0) continue;
    const auto& [a, b, c, d] = ws.quad(q);
    // the three ways of splitting {a<b<c<d} into two pairs
    const int ab = ws.pair_index(a, b), cd = ws.pair_index(c, d);
    const int ac = ws.pair_index(a, c), bd = ws.pair_index(b, d);
    const int ad = ws.pair_index(a, d), bc = ws.pair_index(b, c);
    op(ab, cd) += v;
    op(cd, ab) += v;
    op(ac, bd) -= v;  // w(a,c,b,d) = -w(a,b,c,d)
    op(bd, ac) -= v;
    op(ad, bc) += v;  // w(a,d,b,c) = +w(a,b,c,d)
    op(bc, ad) += v;
  }
  return op;
}

FourForm bianchi(const SymOp& S, int n) {
  const WedgeSpace& ws = WedgeSpace::get(n);
  if (S.rows() != ws.dim2() || S.cols() != ws.dim2())
    throw std::invalid_argument("bianchi: operator size mismatch");
  FourForm w(n);
  for (int q = 0; q < ws.dim4(); ++q) {
    const auto& [a, b, c, d] = ws.quad(q);
    const double v = S(ws.pair_index(a, b), ws.pair_index(c, d)) +
                     S(ws.pair_index(b, c), ws.pair_index(a, d)) -
                     S(ws.pair_index(a, c), ws.pair_index(b, d));
    w.coeffs[q] = v / 3.0;
  }
  return w;
}

}  // namespace wallach
