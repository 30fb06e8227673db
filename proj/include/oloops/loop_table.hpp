#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "oloops/error.hpp"

namespace oloops {

/// Finite loop given by its Cayley table. Element 0 is the identity.
/// Immutable after construction; validated on construction.
class LoopTable {
 public:
  LoopTable(int order, std::vector<std::vector<int>> rows, std::string label = {})
      : order_(order), label_(std::move(label)) {
    if (order < 1) throw error(errc::bad_dimensions, "order must be >= 1");
    if (static_cast<int>(rows.size()) != order)
      throw error(errc::bad_dimensions, "expected " + std::to_string(order) + " rows");
    table_.resize(static_cast<size_t>(order) * order);
    for (int i = 0; i < order; ++i) {
      if (static_cast<int>(rows[i].size()) != order)
        throw error(errc::bad_dimensions, "row " + std::to_string(i) + " has wrong length");
      for (int j = 0; j < order; ++j) {
        int v = rows[i][j];
        if (v < 0 || v >= order)
          throw error(errc::bad_dimensions, "entry out of range at (" + std::to_string(i) +
                                                "," + std::to_string(j) + ")");
        table_[static_cast<size_t>(i) * order + j] = v;
      }
    }
    validate();
  }

  int order() const noexcept { return order_; }
  const std::string& label() const noexcept { return label_; }

  int mul(int a, int b) const {
    check_index(a);
    check_index(b);
    return table_[static_cast<size_t>(a) * order_ + b];
  }

  /// Unchecked product; callers must guarantee valid indices.
  int mul_fast(int a, int b) const noexcept {
    return table_[static_cast<size_t>(a) * order_ + b];
  }

  /// Unique y with a*y = b.
  int divide_left(int a, int b) const {
    check_index(a);
    check_index(b);
    return left_div_[static_cast<size_t>(a) * order_ + b];
  }

  /// Unique x with x*a = b.
  int divide_right(int a, int b) const {
    check_index(a);
    check_index(b);
    return right_div_[static_cast<size_t>(a) * order_ + b];
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(order_);
    for (int i = 0; i < order_; ++i)
      out[i].assign(table_.begin() + static_cast<size_t>(i) * order_,
                    table_.begin() + static_cast<size_t>(i + 1) * order_);
    return out;
  }

 private:
  void check_index(int a) const {
    if (a < 0 || a >= order_)
      throw error(errc::index_out_of_range, "element " + std::to_string(a));
  }

  void validate() {
    const int n = order_;
    // Latin square rows/columns, building division tables in the same pass.
    left_div_.assign(table_.size(), -1);
    right_div_.assign(table_.size(), -1);
    for (int a = 0; a < n; ++a) {
      for (int y = 0; y < n; ++y) {
        int b = mul_fast(a, y);
        if (left_div_[static_cast<size_t>(a) * n + b] != -1)
          throw error(errc::duplicate_in_row,
                      "row " + std::to_string(a) + " repeats value " + std::to_string(b));
        left_div_[static_cast<size_t>(a) * n + b] = y;
      }
    }
    for (int a = 0; a < n; ++a) {
      for (int x = 0; x < n; ++x) {
        int b = mul_fast(x, a);
        if (right_div_[static_cast<size_t>(a) * n + b] != -1)
          throw error(errc::duplicate_in_column,
                      "column " + std::to_string(a) + " repeats value " + std::to_string(b));
        right_div_[static_cast<size_t>(a) * n + b] = x;
      }
    }
    for (int i = 0; i < n; ++i) {
      if (mul_fast(0, i) != i || mul_fast(i, 0) != i)
        throw error(errc::no_identity, "element 0 is not a two-sided identity");
    }
  }

  int order_;
  std::string label_;
  std::vector<int> table_;
  std::vector<int> left_div_;
  std::vector<int> right_div_;
};

/// Validates a raw matrix as a loop table (Latin square with identity 0).
inline LoopTable validate_loop(int order, std::vector<std::vector<int>> rows,
                               std::string label = {}) {
  return LoopTable(order, std::move(rows), std::move(label));
}

inline int multiply(const LoopTable& L, int a, int b) { return L.mul(a, b); }
inline int divide_left(const LoopTable& L, int a, int b) { return L.divide_left(a, b); }
inline int divide_right(const LoopTable& L, int a, int b) { return L.divide_right(a, b); }

/// Least k >= 1 with a^k = e, using left powers a^(k+1) = a * a^k.
/// Verifies the right-power order agrees; loops in scope are flexible so
/// the two always coincide there, but the check keeps the function total.
inline int element_order(const LoopTable& L, int a) {
  if (a < 0 || a >= L.order()) throw error(errc::index_out_of_range, std::to_string(a));
  int p = a, kl = 1;
  while (p != 0) { p = L.mul_fast(a, p); ++kl; }
  p = a;
  int kr = 1;
  while (p != 0) { p = L.mul_fast(p, a); ++kr; }
  if (kl != kr)
    throw error(errc::power_ambiguity,
                "left/right power orders disagree for element " + std::to_string(a));
  return kl;
}

/// Least common multiple of all element orders.
inline int exponent(const LoopTable& L) {
  long long l = 1;
  for (int a = 0; a < L.order(); ++a) {
    long long k = element_order(L, a);
    l = std::lcm(l, k);
  }
  return static_cast<int>(l);
}

/// Least subset containing gens and closed under multiplication, ascending.
/// In a finite loop a nonempty multiplicatively closed subset contains e and
/// is closed under both divisions, hence is a subloop: left translation by a
/// fixed element permutes the finite closed set, so e and the division
/// results already lie inside it.
inline std::vector<int> generated_subloop(const LoopTable& L, const std::vector<int>& gens) {
  if (gens.empty()) throw error(errc::empty_generators, "generator set is empty");
  std::vector<char> in(L.order(), 0);
  std::vector<int> members;
  for (int g : gens) {
    if (g < 0 || g >= L.order()) throw error(errc::index_out_of_range, std::to_string(g));
    if (!in[g]) {
      in[g] = 1;
      members.push_back(g);
    }
  }
  // worklist closure: multiply every new element against all members, both sides
  for (size_t i = 0; i < members.size(); ++i) {
    int a = members[i];
    for (size_t j = 0; j <= i; ++j) {
      int b = members[j];
      for (int p : {L.mul_fast(a, b), L.mul_fast(b, a)}) {
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

/// Checks (a*b)*c == a*(b*c) over all triples of S; on failure reports the
/// lexicographically least failing triple. S must be multiplication-closed.
inline bool is_group(const LoopTable& L, const std::vector<int>& S,
                     std::optional<std::array<int, 3>>* counterexample = nullptr) {
  std::vector<char> in(L.order(), 0);
  for (int a : S) {
    if (a < 0 || a >= L.order()) throw error(errc::index_out_of_range, std::to_string(a));
    in[a] = 1;
  }
  for (int a : S)
    for (int b : S)
      if (!in[L.mul_fast(a, b)])
        throw error(errc::not_closed, "subset is not closed under multiplication");
  for (int a : S)
    for (int b : S) {
      int ab = L.mul_fast(a, b);
      for (int c : S) {
        if (L.mul_fast(ab, c) != L.mul_fast(a, L.mul_fast(b, c))) {
          if (counterexample) *counterexample = std::array<int, 3>{a, b, c};
          return false;
        }
      }
    }
  if (counterexample) *counterexample = std::nullopt;
  return true;
}

}  // namespace oloops
