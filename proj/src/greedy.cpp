#include "sshr/greedy.hpp"

#include <chrono>
#include <stdexcept>

namespace sshr
{

std::vector<uint32_t> greedy_select( candidate_table const& table, bits256 const& targets, ratio r )
{
  if ( r.den == 0u || r.num == 0u || r.num > r.den )
    throw std::invalid_argument( "greedy ratio must lie in (0, 1]" );

  std::vector<uint32_t> picked;
  auto residual = targets;
  auto const cap = ( std::size_t{ 1 } << table.n ) * 4u;
  while ( residual.any() )
  {
    if ( picked.size() >= cap )
      throw std::logic_error( "greedy exceeded its iteration cap" );

    auto choice = static_cast<uint32_t>( table.size() );
    for ( auto idx : table.scan_order )
    {
      auto const hit = intersection_count( table.rows[idx], residual );
      if ( hit == 0u )
        continue;
      auto const size = table.sets[idx].num_vertices();
      if ( uint64_t{ hit } * r.den >= uint64_t{ r.num } * size && 2u * hit > size )
      {
        choice = idx;
        break;
      }
    }
    if ( choice == table.size() )
    {
      /* unreachable while the table holds all singletons */
      auto const it = table.index_of.find( single_vertex( table.n, residual.lowest() ).vertex_bits() );
      if ( it == table.index_of.end() )
        throw std::logic_error( "greedy found no qualifying candidate" );
      choice = it->second;
    }
    picked.push_back( choice );
    residual ^= table.rows[choice];
  }
  return picked;
}

synthesis_result synth_greedy( bool_fn const& f, greedy_config const& cfg )
{
  return synth_greedy( f, cfg, *cached_candidate_table( f.num_vars(), cfg.kind, cfg.obj ) );
}

synthesis_result synth_greedy( bool_fn const& f, greedy_config const& cfg, candidate_table const& table )
{
  if ( table.n != f.num_vars() )
    throw std::invalid_argument( "synth_greedy: candidate table built for a different n" );
  auto const start = std::chrono::steady_clock::now();

  auto const picked = greedy_select( table, f.truth(), cfg.threshold );
  std::vector<parallelotope> selected;
  selected.reserve( picked.size() );
  for ( auto idx : picked )
    selected.push_back( table.sets[idx] );

  auto result = assemble( f.num_vars(), std::move( selected ), cfg.obj );
  result.iterations = picked.size();
  result.status = solve_status::heuristic;
  result.wall_ms = std::chrono::duration<double, std::milli>( std::chrono::steady_clock::now() - start ).count();
  return result;
}

std::vector<minterm_set> residual_trace( synthesis_result const& result, bool_fn const& f )
{
  std::vector<minterm_set> trace{ f.on_set() };
  for ( auto const& p : result.selected )
  {
    if ( p.num_vars() != f.num_vars() )
      throw std::invalid_argument( "residual_trace: parallelotope and function disagree on n" );
    trace.push_back( xor_indicator( trace.back(), p.vertices() ) );
  }
  if ( !trace.back().empty() )
    throw std::invalid_argument( "residual_trace: selection does not realize the function" );
  return trace;
}

} // namespace sshr
