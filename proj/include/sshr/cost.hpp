/*!
  \file cost.hpp
  \brief k-MCT decomposition costs, circuit gate statistics and weighted objectives
*/

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "circuit.hpp"
#include "ptope.hpp"

namespace sshr
{

/*! \brief Clifford+T price of one k-control Toffoli.

  k >= 2 follows the standard decomposition table: k = 2 costs (7, 2, 6, 0),
  k = 3 costs (16, 6, 14, 1), and k >= 4 costs (8k-8, 8k-12, 4k-6, ceil((k-2)/2)).
  k = 1 is a native CNOT and k = 0 a native X.
*/
struct mct_cost
{
  uint64_t t = 0;
  uint64_t h = 0;
  uint64_t cnot = 0;
  uint64_t ancilla = 0;

  friend bool operator==( mct_cost const&, mct_cost const& ) = default;
};

mct_cost mct_decomposition_cost( uint32_t k );

inline constexpr uint32_t max_controls = max_vars;

struct gate_stats
{
  uint64_t x_count = 0;
  uint64_t cnot_count = 0;
  /* index k holds the number of k-control MCTs, k >= 2 */
  std::array<uint64_t, max_controls + 1> mct_histogram{};
  uint64_t t_count = 0;
  uint64_t h_count = 0;
  uint64_t cnot_total = 0;
  uint64_t ancilla_max = 0;
  uint64_t ancilla_sum = 0;

  gate_stats& operator+=( gate_stats const& o );
  friend gate_stats operator+( gate_stats a, gate_stats const& b ) { return a += b; }
  friend bool operator==( gate_stats const&, gate_stats const& ) = default;
};

/*! \brief Counts after lowering negative controls to X pairs. */
gate_stats stats( circuit const& c );

/*! \brief Objective alpha * CNOT + beta * T with a lexicographic tie-break on a second linear form. */
struct objective
{
  int64_t alpha = 1;
  int64_t beta = 0;
  int64_t tie_alpha = 0;
  int64_t tie_beta = 1;

  static objective cnot() { return { 1, 0, 0, 1 }; }
  static objective tcount() { return { 0, 1, 1, 0 }; }
  static objective weighted( int64_t a, int64_t b ) { return { a, b, 0, 0 }; }

  int64_t primary( int64_t cnot_cost, int64_t t_cost ) const { return alpha * cnot_cost + beta * t_cost; }
  int64_t tie( int64_t cnot_cost, int64_t t_cost ) const { return tie_alpha * cnot_cost + tie_beta * t_cost; }

  friend bool operator==( objective const&, objective const& ) = default;
};

/*! \brief "cnot", "tcount" or "weighted:A,B". */
objective objective_from_string( std::string const& text );
std::string to_string( objective const& obj );

/* CNOT and T totals of build_block(p) */
struct block_weights
{
  int64_t cnot = 0;
  int64_t t = 0;
};

/*! \brief Weights of a block without building it: 2 * links + CNOT(n-m), and T(n-m). */
block_weights block_cost( parallelotope const& p );

inline int64_t block_cost( parallelotope const& p, objective const& obj )
{
  auto const w = block_cost( p );
  return obj.primary( w.cnot, w.t );
}

} // namespace sshr
