/*!
  \file pattern_bound.hpp
  \brief Additive pattern-database lower bound for parity covers

  The cube is cut into subcubes of dimension at most 4 (3 beyond six variables). Each candidate's weight
  is split over the subcubes in proportion to the points it has there, and the
  exact cost of clearing every residual pattern inside one subcube is tabulated
  by Dijkstra. Summing over the subcubes of a partition bounds the cost of
  clearing the whole residual; the bound is the maximum over several partitions.
  With n <= 4 the single subcube is the whole cube and the bound is exact.
*/

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "bits.hpp"

namespace sshr
{

class pattern_bound
{
public:
  static constexpr int64_t unreachable = std::numeric_limits<int64_t>::max();

  /* weights must be nonnegative; at most max_partitions partitions are tabulated */
  pattern_bound( uint32_t n, std::span<bits256 const> rows, std::span<int64_t const> weights, uint32_t max_partitions );

  /* lower bound on the weight of a selection whose rows XOR to residual, or unreachable */
  int64_t operator()( bits256 const& residual ) const;

  bool exact() const { return exact_; }
  std::size_t num_partitions() const { return partitions_.size(); }

private:
  struct cell
  {
    std::vector<uint32_t> points;
    std::vector<int64_t> dist;
  };

  std::vector<std::vector<cell>> partitions_;
  bool exact_ = false;
};

} // namespace sshr
