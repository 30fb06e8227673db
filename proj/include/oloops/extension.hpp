#pragma once

#include <cstdint>
#include <vector>

#include "oloops/loop_table.hpp"
#include "oloops/triple_system.hpp"

namespace oloops {

/// Steiner loop of an STS: carrier {e} + points, order n+1, with e = 0,
/// point i at index i+1; x*x = e and x*y = third point of the block of x,y.
inline LoopTable steiner_loop(const TripleSystem& S, std::string label = {}) {
  const int m = S.n() + 1;
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    rows[0][i] = i;
    rows[i][0] = i;
  }
  for (int x = 1; x < m; ++x)
    for (int y = 1; y < m; ++y)
      rows[x][y] = (x == y) ? 0 : S.third_point_fast(x - 1, y - 1) + 1;
  return validate_loop(m, std::move(rows), std::move(label));
}

/// Sign-valued factor system on a Steiner loop carrier of size m.
/// Normalized at the identity, constant on the diagonal, antisymmetric
/// off the diagonal.
struct FactorSystem {
  int m = 0;
  std::vector<int8_t> signs;  // m*m entries, each +1 or -1

  int sign(int x, int y) const { return signs[static_cast<size_t>(x) * m + y]; }

  void validate() const {
    if (m < 1 || signs.size() != static_cast<size_t>(m) * m)
      throw error(errc::size_mismatch, "factor system dimensions");
    for (const int8_t s : signs)
      if (s != 1 && s != -1) throw error(errc::bad_input, "factor system entry not a sign");
    for (int i = 0; i < m; ++i)
      if (sign(0, i) != 1 || sign(i, 0) != 1)
        throw error(errc::bad_input, "factor system not normalized at the identity");
    for (int i = 2; i < m; ++i)
      if (sign(i, i) != sign(1, 1))
        throw error(errc::bad_input, "factor system diagonal not constant");
    for (int i = 1; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (sign(i, j) * sign(j, i) != -1)
          throw error(errc::bad_input, "factor system not antisymmetric off the diagonal");
  }
};

/// Factor system induced by an orientation: off-diagonal entries are the
/// orientation function (shifted by the identity at index 0), diagonal
/// entries all equal `diagonal` (+1 or -1).
inline FactorSystem factor_system(const OrientedTripleSystem& O, int diagonal) {
  if (diagonal != 1 && diagonal != -1) throw error(errc::bad_input, "diagonal must be +1 or -1");
  const int m = O.base().n() + 1;
  FactorSystem F;
  F.m = m;
  F.signs.assign(static_cast<size_t>(m) * m, 1);
  for (int x = 1; x < m; ++x) {
    F.signs[static_cast<size_t>(x) * m + x] = static_cast<int8_t>(diagonal);
    for (int y = 1; y < m; ++y)
      if (x != y)
        F.signs[static_cast<size_t>(x) * m + y] =
            static_cast<int8_t>(O.orientation_sign(x - 1, y - 1));
  }
  F.validate();
  return F;
}

/// Element encoding of the order-2m extension: base element s with sign +1
/// is index s, with sign -1 is index s+m. Identity = (e,+1) = 0.
inline int extension_index(int base, int sign, int m) { return sign == 1 ? base : base + m; }
inline int extension_base(int u, int m) { return u < m ? u : u - m; }
inline int extension_sign(int u, int m) { return u < m ? 1 : -1; }

/// Loop extension of the order-2 sign group by a Steiner loop:
/// (x,s)(y,t) = (xy, s*t*f(x,y)). The result is validated as a loop.
inline LoopTable schreier_extension(const LoopTable& B, const FactorSystem& F,
                                    std::string label = {}) {
  if (B.order() != F.m) throw error(errc::size_mismatch, "base order != factor system size");
  F.validate();
  const int m = F.m;
  const int n = 2 * m;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int u = 0; u < n; ++u) {
    int x = extension_base(u, m), s = extension_sign(u, m);
    for (int v = 0; v < n; ++v) {
      int y = extension_base(v, m), t = extension_sign(v, m);
      int z = B.mul_fast(x, y);
      int sign = s * t * F.sign(x, y);
      rows[u][v] = extension_index(z, sign, m);
    }
  }
  try {
    return validate_loop(n, std::move(rows), std::move(label));
  } catch (const error& e) {
    throw error(errc::not_a_loop, std::string("extension failed validation: ") + e.what());
  }
}

/// Oriented Steiner loop of the requested exponent over an oriented STS.
/// Diagonal -1 gives exponent 4, diagonal +1 gives exponent 2.
inline LoopTable oriented_steiner_loop(const OrientedTripleSystem& O, int exp,
                                       std::string label = {}) {
  if (exp != 2 && exp != 4) throw error(errc::bad_input, "exponent must be 2 or 4");
  LoopTable base = steiner_loop(O.base());
  FactorSystem F = factor_system(O, exp == 2 ? +1 : -1);
  return schreier_extension(base, F, std::move(label));
}

}  // namespace oloops
