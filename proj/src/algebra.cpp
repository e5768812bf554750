#include "wallach/algebra.hpp"

#include <cmath>
#include <sstream>

namespace wallach {

const std::array<const char*, 8> kUnitNames = {"1", "i", "j", "k", "l", "m", "n", "o"};

namespace {

struct Table {
  UnitProduct t[8][8];
};

// Cayley-Dickson doubling: units of dimension 2k are (e_p, 0) for p < k and
// (0, e_{p-k}) for p >= k, with (a,b)(c,d) = (ac - conj(d)b, da + b conj(c)).
Table build_table() {
  Table lvl;  // current level
  lvl.t[0][0] = {1, 0};
  int dim = 1;
  while (dim < 8) {
    Table next;
    const int k = dim;
    for (int p = 0; p < 2 * k; ++p) {
      for (int q = 0; q < 2 * k; ++q) {
        UnitProduct r;
        if (p < k && q < k) {
          r = lvl.t[p][q];
        } else if (p < k && q >= k) {
          // (e_p,0)(0,e_q') = (0, e_q' e_p)
          r = lvl.t[q - k][p];
          r.index = static_cast<std::int8_t>(r.index + k);
        } else if (p >= k && q < k) {
          // (0,e_p')(e_q,0) = (0, e_p' conj(e_q))
          r = lvl.t[p - k][q];
          if (q != 0) r.sign = static_cast<std::int8_t>(-r.sign);
          r.index = static_cast<std::int8_t>(r.index + k);
        } else {
          // (0,e_p')(0,e_q') = (-conj(e_q') e_p', 0)
          r = lvl.t[q - k][p - k];
          if (q - k != 0) r.sign = static_cast<std::int8_t>(-r.sign);
          r.sign = static_cast<std::int8_t>(-r.sign);
        }
        next.t[p][q] = r;
      }
    }
    lvl = next;
    dim *= 2;
  }
  return lvl;
}

const Table& table() {
  static const Table t = build_table();
  return t;
}

}  // namespace

const UnitProduct& unit_product(int a, int b) {
  return table().t[a][b];
}

std::string to_string(const AlgElem& x) {
  std::ostringstream os;
  bool first = true;
  for (int u = 0; u < x.tag.dim(); ++u) {
    const double v = x[u];
    if (v == 0.0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << "-";
    const double a = std::abs(v);
    if (a != 1.0 || u == 0) os << a;
    if (u > 0) os << kUnitNames[static_cast<std::size_t>(u)];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace wallach
