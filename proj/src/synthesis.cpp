#include "sshr/synthesis.hpp"

namespace sshr
{

std::string to_string( solve_status s )
{
  switch ( s )
  {
  case solve_status::heuristic:
    return "heuristic";
  case solve_status::optimal:
    return "optimal";
  case solve_status::feasible_timeout:
    return "feasible-timeout";
  case solve_status::infeasible:
    return "infeasible";
  }
  return "?";
}

synthesis_result assemble( uint32_t n, std::vector<parallelotope> selected, objective const& obj )
{
  synthesis_result r;
  r.netlist = circuit( n + 1u );
  for ( auto const& p : selected )
  {
    auto const block = build_block( p, n );
    r.block_stats.push_back( stats( block ) );
    r.total += r.block_stats.back();
    r.netlist.append( block );
    auto const w = block_cost( p );
    r.tc += obj.primary( w.cnot, w.t );
    r.tie += obj.tie( w.cnot, w.t );
  }
  r.selected = std::move( selected );
  return r;
}

} // namespace sshr
