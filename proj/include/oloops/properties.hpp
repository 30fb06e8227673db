#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "oloops/group_id.hpp"
#include "oloops/loop_table.hpp"

namespace oloops {

using Triple = std::array<int, 3>;

/// One identity flag: holds globally, or fails with the lexicographically
/// least counterexample triple.
struct IdentityFlag {
  bool holds = true;
  std::optional<Triple> witness;
};

struct PropertyReport {
  IdentityFlag commutative;  // witness uses (a,b,0)
  IdentityFlag associative;
  IdentityFlag flexible;
  IdentityFlag left_alternative;
  IdentityFlag right_alternative;
  IdentityFlag inverse_property;
  IdentityFlag automorphic_inverse;
  IdentityFlag cross_inverse;
  IdentityFlag moufang1;  // xy.zx = x(yz.x)
  IdentityFlag moufang2;  // (xy.x)z = x(y.xz)
  IdentityFlag moufang3;  // (zx.y)x = z(x.yx)
  std::optional<int> loop_exponent;  // nullopt when power-ambiguous

  bool moufang() const { return moufang1.holds && moufang2.holds && moufang3.holds; }
};

namespace detail {

template <typename Pred>
IdentityFlag scan_pairs(int n, Pred ok) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!ok(a, b)) return {false, Triple{a, b, 0}};
  return {};
}

template <typename Pred>
IdentityFlag scan_triples(int n, Pred ok) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!ok(a, b, c)) return {false, Triple{a, b, c}};
  return {};
}

}  // namespace detail

/// Left inverse of a: the x with x*a = e. Right inverse: a*x = e.
inline int left_inverse(const LoopTable& L, int a) { return L.divide_right(a, 0); }
inline int right_inverse(const LoopTable& L, int a) { return L.divide_left(a, 0); }

/// Exhaustive scan of the standard loop identities.
inline PropertyReport property_report(const LoopTable& L) {
  const int n = L.order();
  PropertyReport r;
  auto m = [&](int a, int b) { return L.mul_fast(a, b); };

  r.commutative = detail::scan_pairs(n, [&](int a, int b) { return m(a, b) == m(b, a); });
  r.associative = detail::scan_triples(
      n, [&](int a, int b, int c) { return m(m(a, b), c) == m(a, m(b, c)); });
  r.flexible = detail::scan_pairs(n, [&](int x, int y) { return m(m(x, y), x) == m(x, m(y, x)); });
  r.left_alternative =
      detail::scan_pairs(n, [&](int x, int y) { return m(x, m(x, y)) == m(m(x, x), y); });
  r.right_alternative =
      detail::scan_pairs(n, [&](int x, int y) { return m(m(y, x), x) == m(y, m(x, x)); });
  r.inverse_property = detail::scan_pairs(n, [&](int x, int y) {
    return m(left_inverse(L, x), m(x, y)) == y && m(m(y, x), right_inverse(L, x)) == y;
  });
  // AIP requires two-sided inverses and (xy)^-1 = x^-1 y^-1
  r.automorphic_inverse = detail::scan_pairs(n, [&](int x, int y) {
    if (left_inverse(L, x) != right_inverse(L, x)) return false;
    if (left_inverse(L, y) != right_inverse(L, y)) return false;
    int xy = m(x, y);
    if (left_inverse(L, xy) != right_inverse(L, xy)) return false;
    return left_inverse(L, xy) == m(left_inverse(L, x), left_inverse(L, y));
  });
  r.cross_inverse =
      detail::scan_pairs(n, [&](int x, int y) { return m(m(x, y), right_inverse(L, x)) == y; });
  r.moufang1 = detail::scan_triples(n, [&](int x, int y, int z) {
    return m(m(x, y), m(z, x)) == m(x, m(m(y, z), x));
  });
  r.moufang2 = detail::scan_triples(n, [&](int x, int y, int z) {
    return m(m(m(x, y), x), z) == m(x, m(y, m(x, z)));
  });
  r.moufang3 = detail::scan_triples(n, [&](int z, int x, int y) {
    return m(m(m(z, x), y), x) == m(z, m(x, m(y, x)));
  });
  try {
    r.loop_exponent = exponent(L);
  } catch (const error&) {
    r.loop_exponent = std::nullopt;
  }
  return r;
}

/// Calls fn(a,b,c) for every associating triple, in lexicographic order,
/// and returns the count.
template <typename Fn>
std::uint64_t for_each_associating_triple(const LoopTable& L, Fn fn) {
  const int n = L.order();
  std::uint64_t count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = L.mul_fast(a, b);
      for (int c = 0; c < n; ++c)
        if (L.mul_fast(ab, c) == L.mul_fast(a, L.mul_fast(b, c))) {
          ++count;
          fn(a, b, c);
        }
    }
  return count;
}

inline std::uint64_t associating_triple_count(const LoopTable& L) {
  return for_each_associating_triple(L, [](int, int, int) {});
}

struct MoufangWitness {
  Triple triple;                 // least associating triple with non-group subloop
  std::vector<int> subloop;      // generated subloop of the triple
  Triple associativity_failure;  // least failing triple inside the subloop
};

struct MoufangTheoremReport {
  bool holds = true;
  std::optional<MoufangWitness> witness;
  std::map<GroupId, std::uint64_t> subloop_census;
  std::uint64_t associating_triples = 0;
};

namespace detail {

struct ScanChunk {
  MoufangTheoremReport report;
};

inline void moufang_scan_range(const LoopTable& L, int a_begin, int a_end,
                               MoufangTheoremReport& out) {
  const int n = L.order();
  // Cache keyed by the sorted generated subloop; distinct triples very often
  // generate the same subloop.
  std::map<std::vector<int>, GroupId> seen;
  for (int a = a_begin; a < a_end; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = L.mul_fast(a, b);
      for (int c = 0; c < n; ++c) {
        if (L.mul_fast(ab, c) != L.mul_fast(a, L.mul_fast(b, c))) continue;
        ++out.associating_triples;
        std::vector<int> sub = generated_subloop(L, {a, b, c});
        auto it = seen.find(sub);
        GroupId gid;
        if (it != seen.end()) {
          gid = it->second;
        } else {
          gid = identify_group(L, sub);
          seen.emplace(sub, gid);
        }
        ++out.subloop_census[gid];
        if (gid.tag == GroupTag::NotAGroup && out.holds) {
          out.holds = false;
          std::optional<Triple> cex;
          is_group(L, sub, &cex);
          out.witness = MoufangWitness{Triple{a, b, c}, sub, *cex};
        }
      }
    }
}

}  // namespace detail

/// Checks Moufang's theorem exhaustively: every associating triple must
/// generate a subloop that is a group. The census classifies each subloop.
/// With threads > 1 the outer index is partitioned; the merged result is
/// identical to the sequential scan (least-witness reduction).
inline MoufangTheoremReport moufang_theorem_check(const LoopTable& L, int threads = 1) {
  const int n = L.order();
  if (threads < 1) threads = 1;
  threads = std::min(threads, n);
  if (threads == 1) {
    MoufangTheoremReport r;
    detail::moufang_scan_range(L, 0, n, r);
    return r;
  }
  std::vector<MoufangTheoremReport> parts(threads);
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    int lo = static_cast<int>(static_cast<long long>(n) * t / threads);
    int hi = static_cast<int>(static_cast<long long>(n) * (t + 1) / threads);
    workers.emplace_back(
        [&L, lo, hi, &parts, t] { detail::moufang_scan_range(L, lo, hi, parts[t]); });
  }
  for (auto& w : workers) w.join();
  MoufangTheoremReport merged;
  for (auto& p : parts) {
    merged.associating_triples += p.associating_triples;
    for (auto& [gid, cnt] : p.subloop_census) merged.subloop_census[gid] += cnt;
    if (!p.holds && merged.holds) {
      merged.holds = false;
      merged.witness = std::move(p.witness);
    }
  }
  return merged;
}

}  // namespace oloops
