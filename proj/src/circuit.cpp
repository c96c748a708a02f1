#include "sshr/circuit.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace sshr
{

namespace
{

void check_qubit( uint32_t q, uint32_t width )
{
  if ( q >= width )
    throw std::invalid_argument( "qubit " + std::to_string( q ) + " out of range for width " + std::to_string( width ) );
}

uint64_t apply( gate const& g, uint64_t state )
{
  return std::visit(
      [state]( auto const& op ) -> uint64_t {
        using T = std::decay_t<decltype( op )>;
        if constexpr ( std::is_same_v<T, x_gate> )
        {
          return state ^ ( uint64_t{ 1 } << op.target );
        }
        else if constexpr ( std::is_same_v<T, cnot_gate> )
        {
          return ( ( state >> op.control ) & 1u ) ? state ^ ( uint64_t{ 1 } << op.target ) : state;
        }
        else
        {
          for ( auto const& c : op.controls )
          {
            if ( static_cast<bool>( ( state >> c.qubit ) & 1u ) != c.positive )
              return state;
          }
          return state ^ ( uint64_t{ 1 } << op.target );
        }
      },
      g );
}

} // namespace

void circuit::add( gate g )
{
  std::visit(
      [this]( auto const& op ) {
        using T = std::decay_t<decltype( op )>;
        check_qubit( op.target, width_ );
        if constexpr ( std::is_same_v<T, cnot_gate> )
        {
          check_qubit( op.control, width_ );
          if ( op.control == op.target )
            throw std::invalid_argument( "CNOT control equals target" );
        }
        else if constexpr ( std::is_same_v<T, mct_gate> )
        {
          uint64_t used = uint64_t{ 1 } << op.target;
          for ( auto const& c : op.controls )
          {
            check_qubit( c.qubit, width_ );
            if ( ( used >> c.qubit ) & 1u )
              throw std::invalid_argument( "MCT controls must be distinct and differ from the target" );
            used |= uint64_t{ 1 } << c.qubit;
          }
        }
      },
      g );
  gates_.push_back( std::move( g ) );
}

void circuit::append( circuit const& other )
{
  if ( other.width_ != width_ )
    throw std::invalid_argument( "cannot append circuits of different width" );
  auto const offset = gates_.size();
  for ( auto s : other.block_starts_ )
    block_starts_.push_back( s + offset );
  gates_.insert( gates_.end(), other.gates_.begin(), other.gates_.end() );
}

std::pair<uint32_t, bool> simulate( circuit const& c, uint32_t x, bool y )
{
  auto const n = c.width() - 1u;
  uint64_t state = 0;
  for ( uint32_t i = 0; i < n; ++i )
  {
    if ( ( x >> ( n - 1u - i ) ) & 1u )
      state |= uint64_t{ 1 } << i;
  }
  if ( y )
    state |= uint64_t{ 1 } << n;

  for ( auto const& g : c.gates() )
    state = apply( g, state );

  uint32_t out = 0;
  for ( uint32_t i = 0; i < n; ++i )
  {
    if ( ( state >> i ) & 1u )
      out |= 1u << ( n - 1u - i );
  }
  return { out, static_cast<bool>( ( state >> n ) & 1u ) };
}

bool verify_oracle( circuit const& c, bool_fn const& f )
{
  if ( c.width() != f.num_vars() + 1u )
    return false;
  for ( uint32_t x = 0; x < f.num_points(); ++x )
  {
    for ( bool y : { false, true } )
    {
      auto const [xo, yo] = simulate( c, x, y );
      if ( xo != x || yo != ( y != f( x ) ) )
        return false;
    }
  }
  return true;
}

circuit lowered( circuit const& c )
{
  circuit out( c.width() );
  std::size_t next_block = 0;
  auto const& starts = c.block_starts();
  for ( std::size_t i = 0; i < c.gates().size(); ++i )
  {
    while ( next_block < starts.size() && starts[next_block] == i )
    {
      out.begin_block();
      ++next_block;
    }
    auto const& g = c.gates()[i];
    auto const* mct = std::get_if<mct_gate>( &g );
    if ( !mct )
    {
      out.add( g );
      continue;
    }
    for ( auto const& ctl : mct->controls )
    {
      if ( !ctl.positive )
        out.add_x( ctl.qubit );
    }
    if ( mct->controls.empty() )
    {
      out.add_x( mct->target );
    }
    else if ( mct->controls.size() == 1u )
    {
      out.add_cnot( mct->controls.front().qubit, mct->target );
    }
    else
    {
      std::vector<control> pos;
      pos.reserve( mct->controls.size() );
      for ( auto const& ctl : mct->controls )
        pos.push_back( { ctl.qubit, true } );
      out.add_mct( std::move( pos ), mct->target );
    }
    for ( auto const& ctl : mct->controls )
    {
      if ( !ctl.positive )
        out.add_x( ctl.qubit );
    }
  }
  while ( next_block < starts.size() )
  {
    out.begin_block();
    ++next_block;
  }
  return out;
}

circuit build_block( parallelotope const& p, uint32_t n )
{
  if ( p.num_vars() != n )
    throw std::invalid_argument( "build_block: parallelotope lives in a different cube" );

  circuit block( n + 1u );
  block.begin_block();
  auto const a = p.anchor();
  auto bit = [a]( uint32_t c ) { return static_cast<bool>( ( a >> c ) & 1u ); };

  /* the representative of each block is its lowest qubit, i.e. its highest coordinate */
  std::vector<cnot_gate> layer;
  std::vector<control> controls;
  uint32_t in_blocks = 0;
  for ( auto b : p.blocks() )
  {
    in_blocks |= b;
    auto const rep = 31u - static_cast<uint32_t>( std::countl_zero( b ) );
    for ( uint32_t c = 0; c < n; ++c )
    {
      if ( c == rep || !( ( b >> c ) & 1u ) )
        continue;
      layer.push_back( { qubit_of_coordinate( n, rep ), qubit_of_coordinate( n, c ) } );
    }
  }
  for ( uint32_t c = 0; c < n; ++c )
  {
    if ( !( ( in_blocks >> c ) & 1u ) )
    {
      controls.push_back( { qubit_of_coordinate( n, c ), bit( c ) } );
      continue;
    }
    for ( auto b : p.blocks() )
    {
      auto const rep = 31u - static_cast<uint32_t>( std::countl_zero( b ) );
      if ( ( ( b >> c ) & 1u ) && c != rep )
        controls.push_back( { qubit_of_coordinate( n, c ), bit( c ) != bit( rep ) } );
    }
  }
  std::sort( controls.begin(), controls.end(), []( control const& l, control const& r ) { return l.qubit < r.qubit; } );
  std::sort( layer.begin(), layer.end(), []( cnot_gate const& l, cnot_gate const& r ) {
    return std::pair{ l.control, l.target } < std::pair{ r.control, r.target };
  } );

  for ( auto const& g : layer )
    block.add( g );
  if ( controls.empty() )
    block.add_x( n );
  else
    block.add_mct( std::move( controls ), n );
  for ( auto it = layer.rbegin(); it != layer.rend(); ++it )
    block.add( *it );
  return block;
}

} // namespace sshr
