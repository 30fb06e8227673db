#pragma once

#include <array>
#include <set>
#include <vector>

#include "oloops/triple_system.hpp"

namespace oloops {

namespace detail {

inline int pow3(int d) {
  int r = 1;
  while (d-- > 0) r *= 3;
  return r;
}

inline std::vector<int> base3_digits(int v, int dim) {
  std::vector<int> d(dim);
  for (int i = dim - 1; i >= 0; --i) {
    d[i] = v % 3;
    v /= 3;
  }
  return d;
}

inline int base3_encode(const std::vector<int>& d) {
  int v = 0;
  for (int x : d) v = 3 * v + x;
  return v;
}

}  // namespace detail

/// Point-line geometry of GF(3)^dim: lines are the triples {x, y, -(x+y)}.
/// dim = 2 is the affine plane AG(2,3).
inline TripleSystem construct_affine(int dim) {
  if (dim < 1) throw error(errc::bad_order, "dim must be >= 1");
  if (dim > 4) throw error(errc::dim_too_large, "dim must be <= 4");
  const int n = detail::pow3(dim);
  std::set<Block> blocks;
  for (int x = 0; x < n; ++x) {
    auto dx = detail::base3_digits(x, dim);
    for (int y = x + 1; y < n; ++y) {
      auto dy = detail::base3_digits(y, dim);
      std::vector<int> dz(dim);
      for (int i = 0; i < dim; ++i) dz[i] = (6 - dx[i] - dy[i]) % 3;
      Block b{x, y, detail::base3_encode(dz)};
      std::sort(b.begin(), b.end());
      blocks.insert(b);
    }
  }
  return validate_sts(n, {blocks.begin(), blocks.end()});
}

/// Bose construction for n = 6k+3: points (i,l) in Z_{2k+1} x {0,1,2}
/// encoded as 3i+l.
inline TripleSystem construct_bose(int n) {
  if (n < 9 || n % 6 != 3) throw error(errc::bad_order, "Bose requires n = 6k+3, n >= 9");
  const int q = n / 3;  // 2k+1, odd
  std::vector<Block> blocks;
  for (int i = 0; i < q; ++i) blocks.push_back({3 * i, 3 * i + 1, 3 * i + 2});
  // m solves 2m = i+j in Z_q; q odd so 2 is invertible with inverse (q+1)/2
  const int half = (q + 1) / 2;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) {
      int m = static_cast<int>((static_cast<long long>(i + j) * half) % q);
      for (int l = 0; l < 3; ++l) {
        Block b{3 * i + l, 3 * j + l, 3 * m + (l + 1) % 3};
        std::sort(b.begin(), b.end());
        blocks.push_back(b);
      }
    }
  return validate_sts(n, std::move(blocks));
}

/// Develops base blocks mod n (difference-family construction).
inline TripleSystem construct_cyclic(int n, const std::vector<Block>& base_blocks) {
  if (n < 1 || (n % 6 != 1 && n % 6 != 3))
    throw error(errc::bad_order, "cyclic construction requires n = 1 or 3 mod 6");
  std::set<Block> blocks;
  for (const auto& base : base_blocks)
    for (int i = 0; i < n; ++i) {
      Block b{(base[0] + i) % n, (base[1] + i) % n, (base[2] + i) % n};
      std::sort(b.begin(), b.end());
      blocks.insert(b);
    }
  try {
    return validate_sts(n, {blocks.begin(), blocks.end()});
  } catch (const error&) {
    throw error(errc::not_a_difference_family,
                "base blocks do not develop into an STS mod " + std::to_string(n));
  }
}

/// Fano plane STS(7), developed from the difference family {0,1,3} mod 7.
inline TripleSystem construct_fano() { return construct_cyclic(7, {{{0, 1, 3}}}); }

/// The smallest non-affine Hall triple system, order 81: blocks are
/// {x, y, -(x o y)} where o is the commutative Moufang product on GF(3)^4
///   x o y = (x1+y1, x2+y2, x3+y3, x4+y4+(x3-y3)(x1y2-x2y1)).
inline TripleSystem construct_hall81() {
  const int n = 81;
  std::set<Block> blocks;
  for (int x = 0; x < n; ++x) {
    auto a = detail::base3_digits(x, 4);
    for (int y = x + 1; y < n; ++y) {
      auto b = detail::base3_digits(y, 4);
      std::vector<int> p(4);
      p[0] = (a[0] + b[0]) % 3;
      p[1] = (a[1] + b[1]) % 3;
      p[2] = (a[2] + b[2]) % 3;
      p[3] = (a[3] + b[3] + (a[2] - b[2] + 3) * (a[0] * b[1] - a[1] * b[0] + 9)) % 3;
      std::vector<int> z(4);
      for (int i = 0; i < 4; ++i) z[i] = (3 - p[i]) % 3;
      Block blk{x, y, detail::base3_encode(z)};
      std::sort(blk.begin(), blk.end());
      blocks.insert(blk);
    }
  }
  return validate_sts(n, {blocks.begin(), blocks.end()});
}

}  // namespace oloops
