#pragma once

// Shared builders for the test suites: small group tables constructed
// independently of the library (direct formulas), plus invariant helpers.

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

#include "oloops/loop_table.hpp"

namespace test_helpers {

inline oloops::LoopTable cyclic_group(int n) {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = (i + j) % n;
  return oloops::validate_loop(n, std::move(rows));
}

/// Dihedral group of order 2n: element a + n*b is r^a s^b.
/// n=3 gives S3, n=4 gives D4.
inline oloops::LoopTable dihedral_group(int n) {
  auto mul = [n](int x, int y) {
    int a = x % n, b = x / n, c = y % n, d = y / n;
    int rot = b ? (a - c + n) % n : (a + c) % n;
    return rot + n * (b ^ d);
  };
  std::vector<std::vector<int>> rows(2 * n, std::vector<int>(2 * n));
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) rows[i][j] = mul(i, j);
  return oloops::validate_loop(2 * n, std::move(rows));
}

/// Quaternion group: index = axis + 4*neg, axis in {0:1, 1:i, 2:j, 3:k}.
inline oloops::LoopTable quaternion_group() {
  auto mul = [](int x, int y) {
    int ax = x % 4, sx = x / 4, ay = y % 4, sy = y / 4;
    int sign = sx ^ sy, axis;
    if (ax == 0) {
      axis = ay;
    } else if (ay == 0) {
      axis = ax;
    } else if (ax == ay) {
      axis = 0;
      sign ^= 1;  // i*i = j*j = k*k = -1
    } else {
      // i*j=k, j*k=i, k*i=j; reversed order negates
      axis = 6 - ax - ay;
      bool forward = (ay - ax + 3) % 3 == 1;
      if (!forward) sign ^= 1;
    }
    return axis + 4 * sign;
  };
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) rows[i][j] = mul(i, j);
  return oloops::validate_loop(8, std::move(rows));
}

/// Direct product of two loop tables, identity at index 0.
inline oloops::LoopTable direct_product(const oloops::LoopTable& A, const oloops::LoopTable& B) {
  int na = A.order(), nb = B.order(), n = na * nb;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rows[i][j] = A.mul(i / nb, j / nb) * nb + B.mul(i % nb, j % nb);
  return oloops::validate_loop(n, std::move(rows));
}

inline oloops::LoopTable klein_four() { return direct_product(cyclic_group(2), cyclic_group(2)); }
inline oloops::LoopTable e8() { return direct_product(klein_four(), cyclic_group(2)); }

/// Relabels a table by a permutation fixing 0.
inline oloops::LoopTable relabel(const oloops::LoopTable& L, const std::vector<int>& perm) {
  int n = L.order();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rows[i][j] = perm[L.mul(inv[i], inv[j])];
  return oloops::validate_loop(n, std::move(rows));
}

inline std::vector<int> random_perm_fixing_zero(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

/// Subloop postcondition: contains e, closed under multiply and divisions.
inline bool is_subloop(const oloops::LoopTable& L, const std::vector<int>& S) {
  std::vector<char> in(L.order(), 0);
  for (int a : S) in[a] = 1;
  if (!in[0]) return false;
  for (int a : S)
    for (int b : S)
      if (!in[L.mul(a, b)] || !in[L.divide_left(a, b)] || !in[L.divide_right(a, b)])
        return false;
  return true;
}

}  // namespace test_helpers
