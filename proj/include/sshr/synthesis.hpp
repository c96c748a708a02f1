/*!
  \file synthesis.hpp
  \brief Result of synthesizing one Boolean function into an oracle circuit
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boolfn.hpp"
#include "circuit.hpp"
#include "cost.hpp"
#include "ptope.hpp"

namespace sshr
{

enum class solve_status
{
  heuristic,        /*!< greedy result, no optimality claim */
  optimal,          /*!< search exhausted */
  feasible_timeout, /*!< best incumbent when the limit was hit */
  infeasible
};

std::string to_string( solve_status s );

struct synthesis_result
{
  circuit netlist;
  /* in selection (and block) order */
  std::vector<parallelotope> selected;
  std::vector<gate_stats> block_stats;
  gate_stats total;
  /* objective value and its tie-break */
  int64_t tc = 0;
  int64_t tie = 0;
  uint64_t iterations = 0;
  uint64_t nodes = 0;
  double wall_ms = 0.0;
  solve_status status = solve_status::heuristic;
};

/*! \brief Concatenates build_block for each parallelotope and fills in the statistics. */
synthesis_result assemble( uint32_t n, std::vector<parallelotope> selected, objective const& obj );

} // namespace sshr
