#pragma once

#include <map>
#include <string>
#include <vector>

#include "oloops/loop_table.hpp"

namespace oloops {

/// Identification tags for groups of order <= 8. Order statistics together
/// with commutativity separate all of them.
enum class GroupTag {
  Trivial,
  Z2,
  Z3,
  Z4,
  KleinFour,
  Z5,
  Z6,
  S3,
  Z7,
  Z8,
  Z4xZ2,
  E8,
  D4,
  Q8,
  Unidentified,
  NotAGroup,
};

struct GroupId {
  GroupTag tag = GroupTag::NotAGroup;
  int order = 0;  // set for Unidentified; informational otherwise

  bool operator==(const GroupId&) const = default;
  bool operator<(const GroupId& o) const {
    return tag != o.tag ? tag < o.tag : order < o.order;
  }
};

inline std::string to_string(const GroupId& g) {
  switch (g.tag) {
    case GroupTag::Trivial: return "Trivial";
    case GroupTag::Z2: return "Z2";
    case GroupTag::Z3: return "Z3";
    case GroupTag::Z4: return "Z4";
    case GroupTag::KleinFour: return "KleinFour";
    case GroupTag::Z5: return "Z5";
    case GroupTag::Z6: return "Z6";
    case GroupTag::S3: return "S3";
    case GroupTag::Z7: return "Z7";
    case GroupTag::Z8: return "Z8";
    case GroupTag::Z4xZ2: return "Z4xZ2";
    case GroupTag::E8: return "E8";
    case GroupTag::D4: return "D4";
    case GroupTag::Q8: return "Q8";
    case GroupTag::Unidentified: return "UnidentifiedGroup(" + std::to_string(g.order) + ")";
    case GroupTag::NotAGroup: return "NotAGroup";
  }
  return "?";
}

/// Identifies the isomorphism type of a subset S that forms a group.
/// Returns NotAGroup if S is not multiplication-closed or not associative;
/// Unidentified for groups of order > 8.
inline GroupId identify_group(const LoopTable& L, const std::vector<int>& S) {
  try {
    if (!is_group(L, S)) return {GroupTag::NotAGroup, static_cast<int>(S.size())};
  } catch (const error&) {
    return {GroupTag::NotAGroup, static_cast<int>(S.size())};
  }
  const int k = static_cast<int>(S.size());
  if (k > 8) return {GroupTag::Unidentified, k};

  int max_order = 1, order2 = 0;
  for (int a : S) {
    int o = element_order(L, a);
    max_order = std::max(max_order, o);
    if (o == 2) ++order2;
  }
  bool commutative = true;
  for (int a : S) {
    for (int b : S)
      if (L.mul_fast(a, b) != L.mul_fast(b, a)) {
        commutative = false;
        break;
      }
    if (!commutative) break;
  }

  switch (k) {
    case 1: return {GroupTag::Trivial, 1};
    case 2: return {GroupTag::Z2, 2};
    case 3: return {GroupTag::Z3, 3};
    case 4: return {max_order == 4 ? GroupTag::Z4 : GroupTag::KleinFour, 4};
    case 5: return {GroupTag::Z5, 5};
    case 6: return {commutative ? GroupTag::Z6 : GroupTag::S3, 6};
    case 7: return {GroupTag::Z7, 7};
    case 8:
      if (max_order == 8) return {GroupTag::Z8, 8};
      if (commutative)
        return {max_order == 2 ? GroupTag::E8 : GroupTag::Z4xZ2, 8};
      return {order2 == 1 ? GroupTag::Q8 : GroupTag::D4, 8};
    default:
      return {GroupTag::Unidentified, k};
  }
}

}  // namespace oloops
