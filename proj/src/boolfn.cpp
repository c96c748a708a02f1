#include "sshr/boolfn.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sshr
{

namespace
{

void check_num_vars( uint32_t n )
{
  if ( n < 1u || n > max_vars )
    throw std::invalid_argument( "variable count must be in [1, 8], got " + std::to_string( n ) );
}

bits256 full_mask( uint32_t n )
{
  bits256 m;
  for ( uint32_t x = 0; x < ( 1u << n ); ++x )
    m.set( x );
  return m;
}

/* unbiased draw from [0, bound) */
uint64_t uniform_below( std::mt19937_64& rng, uint64_t bound )
{
  auto const limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
  uint64_t v;
  do
  {
    v = rng();
  } while ( v >= limit );
  return v % bound;
}

} // namespace

minterm_set::minterm_set( uint32_t n ) : n_( n )
{
  check_num_vars( n );
}

minterm_set::minterm_set( uint32_t n, bits256 members ) : n_( n ), bits_( members )
{
  check_num_vars( n );
  if ( bits_.any_at_or_above( 1u << n ) )
    throw std::invalid_argument( "minterm outside of the cube" );
}

minterm_set::minterm_set( uint32_t n, std::vector<uint32_t> const& members ) : minterm_set( n )
{
  for ( auto x : members )
    insert( x );
}

void minterm_set::insert( uint32_t x )
{
  if ( x >= ( 1u << n_ ) )
    throw std::invalid_argument( "minterm " + std::to_string( x ) + " outside of the cube" );
  bits_.set( x );
}

std::vector<uint32_t> minterm_set::members() const
{
  std::vector<uint32_t> out;
  out.reserve( size() );
  bits_.for_each( [&]( uint32_t x ) { out.push_back( x ); } );
  return out;
}

minterm_set xor_indicator( minterm_set const& a, minterm_set const& p )
{
  if ( a.num_vars() != p.num_vars() )
    throw std::invalid_argument( "xor_indicator: mismatched variable counts" );
  return { a.num_vars(), a.bits() ^ p.bits() };
}

bool_fn::bool_fn( uint32_t n, bits256 truth ) : n_( n ), truth_( truth )
{
  check_num_vars( n );
  if ( truth_.any_at_or_above( 1u << n ) )
    throw std::invalid_argument( "truth table wider than 2^n bits" );
}

minterm_set bool_fn::off_set() const
{
  return { n_, truth_ ^ full_mask( n_ ) };
}

bool_fn from_hex_id( std::string_view id, uint32_t n )
{
  check_num_vars( n );
  auto digits = id;
  if ( digits.size() >= 2 && digits[0] == '0' && ( digits[1] == 'x' || digits[1] == 'X' ) )
    digits.remove_prefix( 2 );
  if ( digits.empty() )
    throw std::invalid_argument( "empty hex id" );

  bits256 truth;
  uint32_t pos = 0;
  for ( auto it = digits.rbegin(); it != digits.rend(); ++it, pos += 4 )
  {
    auto const c = static_cast<unsigned char>( *it );
    if ( !std::isxdigit( c ) )
      throw std::invalid_argument( "malformed hex id '" + std::string( id ) + "'" );
    uint32_t const v = std::isdigit( c ) ? c - '0' : std::tolower( c ) - 'a' + 10;
    for ( uint32_t b = 0; b < 4; ++b )
    {
      if ( !( ( v >> b ) & 1u ) )
        continue;
      if ( pos + b >= ( 1u << n ) )
        throw std::invalid_argument( "hex id '" + std::string( id ) + "' out of range for n = " + std::to_string( n ) );
      truth.set( pos + b );
    }
  }
  return { n, truth };
}

std::string to_hex_id( bool_fn const& f )
{
  static constexpr char hex[] = "0123456789abcdef";
  auto const num_digits = std::max( 1u, f.num_points() / 4u );
  std::string out( num_digits, '0' );
  for ( uint32_t d = 0; d < num_digits; ++d )
  {
    uint32_t v = 0;
    for ( uint32_t b = 0; b < 4; ++b )
    {
      auto const x = 4 * d + b;
      if ( x < f.num_points() && f( x ) )
        v |= 1u << b;
    }
    out[num_digits - 1 - d] = hex[v];
  }
  return "0x" + out;
}

bool_fn from_bit_string( std::string_view bits, uint32_t n )
{
  check_num_vars( n );
  if ( bits.size() != ( 1u << n ) )
    throw std::invalid_argument( "bit string must have exactly 2^n = " + std::to_string( 1u << n ) + " characters" );
  bits256 truth;
  for ( uint32_t i = 0; i < bits.size(); ++i )
  {
    auto const c = bits[bits.size() - 1 - i];
    if ( c == '1' )
      truth.set( i );
    else if ( c != '0' )
      throw std::invalid_argument( "bit string may only contain '0' and '1'" );
  }
  return { n, truth };
}

std::string to_bit_string( bool_fn const& f )
{
  std::string out( f.num_points(), '0' );
  for ( uint32_t x = 0; x < f.num_points(); ++x )
  {
    if ( f( x ) )
      out[f.num_points() - 1 - x] = '1';
  }
  return out;
}

bool_fn from_minterms( std::vector<uint32_t> const& minterms, uint32_t n )
{
  return { n, minterm_set( n, minterms ).bits() };
}

bool_fn parse_minterm_list( std::string_view text, uint32_t n )
{
  std::istringstream in{ std::string( text ) };
  std::vector<uint32_t> minterms;
  std::string line;
  while ( std::getline( in, line ) )
  {
    if ( auto const hash = line.find( '#' ); hash != std::string::npos )
      line.erase( hash );
    std::istringstream ls( line );
    std::string tok;
    while ( ls >> tok )
    {
      std::size_t used = 0;
      unsigned long v = 0;
      try
      {
        v = std::stoul( tok, &used, 0 );
      }
      catch ( std::exception const& )
      {
        throw std::invalid_argument( "malformed minterm '" + tok + "'" );
      }
      if ( used != tok.size() )
        throw std::invalid_argument( "malformed minterm '" + tok + "'" );
      if ( v >= ( 1ul << n ) )
        throw std::invalid_argument( "minterm " + tok + " outside of the cube" );
      minterms.push_back( static_cast<uint32_t>( v ) );
    }
  }
  return from_minterms( minterms, n );
}

std::vector<bool_fn> random_corpus( uint32_t n, uint32_t count, uint64_t seed )
{
  check_num_vars( n );
  std::mt19937_64 rng( seed );
  auto const points = 1u << n;
  auto const max_weight = std::max( 1u, points / 2u );

  std::vector<bool_fn> corpus;
  corpus.reserve( count );
  std::vector<uint32_t> pool( points );
  for ( uint32_t i = 0; i < count; ++i )
  {
    auto const weight = 1u + static_cast<uint32_t>( uniform_below( rng, max_weight ) );
    for ( uint32_t x = 0; x < points; ++x )
      pool[x] = x;
    bits256 truth;
    /* partial Fisher-Yates */
    for ( uint32_t k = 0; k < weight; ++k )
    {
      auto const j = k + static_cast<uint32_t>( uniform_below( rng, points - k ) );
      std::swap( pool[k], pool[j] );
      truth.set( pool[k] );
    }
    corpus.emplace_back( n, truth );
  }
  return corpus;
}

std::vector<bool_fn> all_functions( uint32_t n )
{
  check_num_vars( n );
  if ( n > 4u )
    throw std::invalid_argument( "all_functions is limited to n <= 4" );
  auto const points = 1u << n;
  std::vector<bool_fn> out;
  out.reserve( std::size_t{ 1 } << points );
  for ( uint64_t id = 0; id < ( uint64_t{ 1 } << points ); ++id )
  {
    bits256 truth;
    truth.set_word( 0, id );
    out.emplace_back( n, truth );
  }
  return out;
}

} // namespace sshr
