/*!
  \file paritycover.hpp
  \brief Weighted parity set cover over a parallelotope family, solved exactly by branch and bound

  Select candidate sets so that every on-set point is covered an odd number of
  times and every off-set point an even number of times, at minimum
  alpha * sum C_i + beta * sum G_i (C_i, G_i: CNOT and T cost of the block).
*/

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolfn.hpp"
#include "candidates.hpp"
#include "synthesis.hpp"

namespace sshr
{

struct cover_instance
{
  uint32_t n = 0;
  /* bit x set iff point x must be covered an odd number of times */
  bits256 targets;
  std::shared_ptr<candidate_table const> table;

  std::size_t size() const { return table->size(); }
  objective const& obj() const { return table->obj; }
};

cover_instance build_instance( bool_fn const& f, std::shared_ptr<candidate_table const> table );
cover_instance build_instance( bool_fn const& f, ptope_family const& family, objective const& obj );

struct cover_solution
{
  /* ascending candidate indices */
  std::vector<uint32_t> selected;
  int64_t tc = 0;
  int64_t tie = 0;
  solve_status status = solve_status::heuristic;
  double wall_ms = 0.0;
  uint64_t nodes = 0;
};

/*! \brief A selection with its objective value computed from the instance weights. */
cover_solution make_solution( cover_instance const& inst, std::vector<uint32_t> selected );

struct solve_options
{
  double time_limit_s = 120.0;
  /* when set, the search also stops after this many nodes */
  std::optional<uint64_t> node_limit;
  /* false makes the run depend on node_limit only, hence reproducible */
  bool use_wall_clock = true;
  bool greedy_warm_start = true;
  /* extra starting incumbents; each must verify */
  std::vector<std::vector<uint32_t>> incumbents;
  /* called on every incumbent improvement with (t_ms, tc, nodes) */
  std::function<void( double, int64_t, uint64_t )> on_improvement;
};

/*! \brief Exact branch and bound with an anytime limit.

  Returns status optimal when the search is exhausted and feasible_timeout when
  the limit stops it first. Throws std::invalid_argument for a non-positive time
  limit or an incumbent that does not verify.
*/
cover_solution solve( cover_instance const& inst, solve_options const& options = {} );

/*! \brief Per-point parities match the targets and tc/tie recompute from the weights. */
bool verify_solution( cover_instance const& inst, cover_solution const& sol );

/*! \brief CPLEX LP text of the model with binary x_i.

  With helpers: integer V_j, y_k, z_l and rows V_j - sum e_ij x_i = 0,
  V_k - 2 y_k = 1 (on-set), V_l - 2 z_l = 0 (off-set). Without: the substituted
  parity rows sum e_ij x_i - 2 y_j = f_j.
*/
std::string export_lp( cover_instance const& inst, bool with_integer_helpers );

/*! \brief Reads selected indices: one per line as "i", "xi" or "xi <value>" (value 0 skips). */
std::vector<uint32_t> parse_solution_indices( std::string_view text );

/*! \brief Removes XOR-dependent subsets and merges pairs whose XOR is a cheaper candidate. */
std::vector<uint32_t> improve_selection( cover_instance const& inst, std::vector<uint32_t> selected );

/*! \brief Solve, then one block per selected parallelotope; the circuit is verified before returning.

  hints are additional incumbents given as parallelotopes (e.g. a subcube cover
  seeding a full-family solve); each must belong to the family.
*/
synthesis_result synth_exact( bool_fn const& f, family_kind kind, objective const& obj, solve_options options = {},
                              std::vector<std::vector<parallelotope>> const& hints = {} );

} // namespace sshr
