/*!
  \file candidates.hpp
  \brief A parallelotope family prepared for covering: incidence rows, weights and scan order
*/

#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "bits.hpp"
#include "cost.hpp"
#include "ptope.hpp"

namespace sshr
{

struct candidate_table
{
  uint32_t n = 0;
  family_kind kind = family_kind::full;
  objective obj;

  std::vector<parallelotope> sets;
  std::vector<bits256> rows;
  std::vector<block_weights> weights;
  std::vector<int64_t> primary;
  std::vector<int64_t> tie;

  /* dimension descending, then primary and tie ascending, then family order */
  std::vector<uint32_t> scan_order;

  /* vertex set -> index; vertex sets are unique within a family */
  std::unordered_map<bits256, uint32_t> index_of;

  std::size_t size() const { return sets.size(); }
};

candidate_table make_candidate_table( ptope_family const& family, objective const& obj );

/*! \brief Process-wide cache keyed by (n, kind, objective); tables are immutable once built. */
std::shared_ptr<candidate_table const> cached_candidate_table( uint32_t n, family_kind kind, objective const& obj );

} // namespace sshr
