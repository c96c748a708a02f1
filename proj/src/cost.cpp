#include "sshr/cost.hpp"

#include <algorithm>
#include <stdexcept>

namespace sshr
{

mct_cost mct_decomposition_cost( uint32_t k )
{
  switch ( k )
  {
  case 0u:
    return {};
  case 1u:
    return { 0, 0, 1, 0 };
  case 2u:
    return { 7, 2, 6, 0 };
  case 3u:
    return { 16, 6, 14, 1 };
  default:
    return { 8ull * k - 8ull, 8ull * k - 12ull, 4ull * k - 6ull, ( k - 2ull + 1ull ) / 2ull };
  }
}

gate_stats& gate_stats::operator+=( gate_stats const& o )
{
  x_count += o.x_count;
  cnot_count += o.cnot_count;
  for ( std::size_t k = 0; k < mct_histogram.size(); ++k )
    mct_histogram[k] += o.mct_histogram[k];
  t_count += o.t_count;
  h_count += o.h_count;
  cnot_total += o.cnot_total;
  ancilla_max = std::max( ancilla_max, o.ancilla_max );
  ancilla_sum += o.ancilla_sum;
  return *this;
}

gate_stats stats( circuit const& c )
{
  gate_stats s;
  for ( auto const& g : c.gates() )
  {
    if ( std::holds_alternative<x_gate>( g ) )
    {
      ++s.x_count;
    }
    else if ( std::holds_alternative<cnot_gate>( g ) )
    {
      ++s.cnot_count;
    }
    else
    {
      auto const& mct = std::get<mct_gate>( g );
      auto const k = static_cast<uint32_t>( mct.controls.size() );
      for ( auto const& ctl : mct.controls )
        s.x_count += ctl.positive ? 0u : 2u;
      if ( k == 0u )
      {
        ++s.x_count;
      }
      else if ( k == 1u )
      {
        ++s.cnot_count;
      }
      else
      {
        if ( k > max_controls )
          throw std::invalid_argument( "MCT with more than 8 controls" );
        ++s.mct_histogram[k];
        auto const cost = mct_decomposition_cost( k );
        s.t_count += cost.t;
        s.h_count += cost.h;
        s.cnot_total += cost.cnot;
        s.ancilla_max = std::max( s.ancilla_max, cost.ancilla );
        s.ancilla_sum += cost.ancilla;
      }
    }
  }
  s.cnot_total += s.cnot_count;
  return s;
}

objective objective_from_string( std::string const& text )
{
  if ( text == "cnot" )
    return objective::cnot();
  if ( text == "tcount" )
    return objective::tcount();
  if ( text.rfind( "weighted:", 0 ) == 0 )
  {
    auto const body = text.substr( 9 );
    auto const comma = body.find( ',' );
    if ( comma == std::string::npos )
      throw std::invalid_argument( "weighted objective needs the form weighted:A,B" );
    std::size_t used_a = 0, used_b = 0;
    long long a = 0, b = 0;
    try
    {
      a = std::stoll( body.substr( 0, comma ), &used_a );
      b = std::stoll( body.substr( comma + 1 ), &used_b );
    }
    catch ( std::exception const& )
    {
      throw std::invalid_argument( "malformed weighted objective '" + text + "'" );
    }
    if ( used_a != comma || used_b != body.size() - comma - 1 || a < 0 || b < 0 || a + b == 0 )
      throw std::invalid_argument( "weighted objective needs nonnegative integers, not both zero" );
    return objective::weighted( a, b );
  }
  throw std::invalid_argument( "unknown objective '" + text + "'" );
}

std::string to_string( objective const& obj )
{
  if ( obj == objective::cnot() )
    return "cnot";
  if ( obj == objective::tcount() )
    return "tcount";
  return "weighted:" + std::to_string( obj.alpha ) + "," + std::to_string( obj.beta );
}

block_weights block_cost( parallelotope const& p )
{
  auto const k = p.num_vars() - p.dimension();
  auto const mct = mct_decomposition_cost( k );
  return { static_cast<int64_t>( 2u * p.intra_block_links() + mct.cnot ), static_cast<int64_t>( mct.t ) };
}

} // namespace sshr
