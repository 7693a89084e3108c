#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "glat/subgroup_set.hpp"

namespace glat {

struct ChainInfo {
  bool is_chain = false;
  int length = -1;  // node count - 1 when a chain, -1 otherwise
};

struct Interval {
  int lower = 0;
  int upper = 0;
  std::vector<int> members;  // node ids z with lower <= z <= upper
};

// Finite bounded lattice of subgroup sets ordered by inclusion. Node ids are
// assigned by (payload size, payload bitset value); id 0 is the bottom and
// id size()-1 the top. The order relation and Hasse edges are precomputed.
class BoundedLattice {
 public:
  // Input must be non-empty, duplicate-free and closed under intersection,
  // with a unique minimum and maximum under inclusion.
  static BoundedLattice build(std::vector<SubgroupSet> elements);

  int size() const { return n_; }
  const SubgroupSet& node(int id) const { return nodes_[static_cast<std::size_t>(id)]; }
  const std::vector<SubgroupSet>& nodes() const { return nodes_; }

  bool leq(int a, int b) const {
    return (up_[static_cast<std::size_t>(a) * words_ + (static_cast<std::size_t>(b) >> 6)] >>
            (b & 63)) &
           1u;
  }

  int bottom() const { return 0; }
  int top() const { return n_ - 1; }

  const std::vector<std::pair<int, int>>& hasse_edges() const { return hasse_; }

  // Nodes covering the bottom, ascending.
  std::vector<int> atoms() const;

  // Proper nodes comparable with every node; computed both as the
  // per-element comparability test and as the two-interval cover
  // [bottom,h] u [h,top], which must agree.
  std::vector<int> breaking_points() const;

  // All ordered pairs (M,N) of proper nodes with every node x satisfying
  // x <= M or N <= x. Exhaustive; a breaking point h shows up as (h,h).
  std::vector<std::pair<int, int>> interval_decompositions() const;

  ChainInfo chain_classification() const;

  Interval interval(int x, int y) const;  // throws NotComparable unless x <= y

  int meet(int a, int b) const;  // greatest lower bound (bitset intersection)
  int join(int a, int b) const;  // least upper bound via common upper bounds

 private:
  BoundedLattice() = default;


  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<SubgroupSet> nodes_;
  std::vector<std::uint64_t> up_;    // up_[i]: bit j set iff i <= j
  std::vector<std::uint64_t> down_;  // down_[i]: bit j set iff j <= i
  std::vector<std::uint64_t> full_row_;
  std::vector<std::pair<int, int>> hasse_;
};

}  // namespace glat
