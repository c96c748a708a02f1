/*!
  \file greedy.hpp
  \brief Ratio-threshold greedy cover of the on-set by parallelotopes
*/

#pragma once

#include <cstdint>
#include <vector>

#include "boolfn.hpp"
#include "candidates.hpp"
#include "synthesis.hpp"

namespace sshr
{

/* selection threshold R = num / den with 0 < R <= 1 */
struct ratio
{
  uint32_t num = 3;
  uint32_t den = 4;
};

struct greedy_config
{
  ratio threshold;
  family_kind kind = family_kind::full;
  objective obj = objective::cnot();
};

/*! \brief Indices (into table) selected by the greedy, in selection order.

  Each round rescans the table in scan order and takes the first candidate P with
  |P & A| >= R |P| that also shrinks the residual (2 |P & A| > |P|), then sets
  A ^= P. Throws std::invalid_argument for R outside (0, 1].
*/
std::vector<uint32_t> greedy_select( candidate_table const& table, bits256 const& targets, ratio r );

synthesis_result synth_greedy( bool_fn const& f, greedy_config const& cfg );
synthesis_result synth_greedy( bool_fn const& f, greedy_config const& cfg, candidate_table const& table );

/*! \brief Residual sets A_0 = on-set, A_{i+1} = A_i ^ P_i; the last entry is empty.

  Throws std::invalid_argument if the selection does not reduce f to the empty set.
*/
std::vector<minterm_set> residual_trace( synthesis_result const& result, bool_fn const& f );

} // namespace sshr
