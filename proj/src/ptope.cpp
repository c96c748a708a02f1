#include "sshr/ptope.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace sshr
{

namespace
{

/* lexicographic comparison of two coordinate sets as ascending lists */
std::strong_ordering compare_block( uint32_t a, uint32_t b )
{
  while ( a && b )
  {
    auto const ca = std::countr_zero( a );
    auto const cb = std::countr_zero( b );
    if ( ca != cb )
      return ca <=> cb;
    a &= a - 1;
    b &= b - 1;
  }
  return ( a != 0 ) <=> ( b != 0 );
}

/* calls fn for every partial set partition of coordinates [0, n), blocks ordered by lowest coordinate */
template<typename Fn>
void for_each_partial_partition( uint32_t n, Fn&& fn )
{
  std::array<uint32_t, max_vars> blocks{};
  uint32_t m = 0;
  auto rec = [&]( auto&& self, uint32_t c ) -> void {
    if ( c == n )
    {
      fn( std::span<uint32_t const>( blocks.data(), m ) );
      return;
    }
    self( self, c + 1 );
    for ( uint32_t j = 0; j < m; ++j )
    {
      blocks[j] |= 1u << c;
      self( self, c + 1 );
      blocks[j] &= ~( 1u << c );
    }
    blocks[m++] = 1u << c;
    self( self, c + 1 );
    --m;
  };
  rec( rec, 0 );
}

} // namespace

std::string to_string( family_kind kind )
{
  switch ( kind )
  {
  case family_kind::full:
    return "full";
  case family_kind::subcube:
    return "subcube";
  case family_kind::minterm:
    return "minterm";
  }
  return "?";
}

family_kind family_kind_from_string( std::string const& name )
{
  if ( name == "full" )
    return family_kind::full;
  if ( name == "subcube" )
    return family_kind::subcube;
  if ( name == "minterm" )
    return family_kind::minterm;
  throw std::invalid_argument( "unknown family kind '" + name + "'" );
}

parallelotope::parallelotope( uint32_t n, uint32_t anchor, std::span<uint32_t const> blocks )
{
  if ( n < 1u || n > max_vars )
    throw std::invalid_argument( "parallelotope: variable count must be in [1, 8]" );
  if ( anchor >= ( 1u << n ) )
    throw std::invalid_argument( "parallelotope: anchor outside of the cube" );
  if ( blocks.size() > n )
    throw std::invalid_argument( "parallelotope: more blocks than coordinates" );

  uint32_t seen = 0;
  for ( auto b : blocks )
  {
    if ( b == 0u )
      throw std::invalid_argument( "parallelotope: empty block" );
    if ( b >= ( 1u << n ) )
      throw std::invalid_argument( "parallelotope: block coordinate out of range" );
    if ( seen & b )
      throw std::invalid_argument( "parallelotope: blocks must have disjoint supports" );
    seen |= b;
  }

  n_ = static_cast<uint8_t>( n );
  m_ = static_cast<uint8_t>( blocks.size() );
  std::copy( blocks.begin(), blocks.end(), blocks_.begin() );
  std::sort( blocks_.begin(), blocks_.begin() + m_,
             []( uint32_t a, uint32_t b ) { return std::countr_zero( a ) < std::countr_zero( b ); } );

  anchor_ = anchor;
  for ( uint32_t j = 0; j < m_; ++j )
  {
    auto const low = blocks_[j] & ( ~blocks_[j] + 1u );
    if ( anchor_ & low )
      anchor_ ^= blocks_[j];
  }
}

uint32_t parallelotope::support() const
{
  uint32_t s = 0;
  for ( auto b : blocks() )
    s |= b;
  return s;
}

uint32_t parallelotope::intra_block_links() const
{
  uint32_t links = 0;
  for ( auto b : blocks() )
    links += std::popcount( b ) - 1u;
  return links;
}

bits256 parallelotope::vertex_bits() const
{
  bits256 v;
  for ( uint32_t t = 0; t < ( 1u << m_ ); ++t )
  {
    auto x = anchor_;
    for ( uint32_t j = 0; j < m_; ++j )
    {
      if ( ( t >> j ) & 1u )
        x ^= blocks_[j];
    }
    v.set( x );
  }
  return v;
}

bool parallelotope::contains( uint32_t x ) const
{
  if ( x >= ( 1u << n_ ) )
    return false;
  auto const diff = x ^ anchor_;
  if ( diff & ~support() )
    return false;
  for ( auto b : blocks() )
  {
    auto const d = diff & b;
    if ( d != 0u && d != b )
      return false;
  }
  return true;
}

std::string parallelotope::to_string() const
{
  std::ostringstream os;
  os << "0x" << std::hex << anchor_ << std::dec << " :";
  for ( uint32_t j = 0; j < m_; ++j )
  {
    os << ( j == 0 ? " {" : ",{" );
    bool first = true;
    for ( uint32_t c = 0; c < n_; ++c )
    {
      if ( ( blocks_[j] >> c ) & 1u )
      {
        os << ( first ? "" : "," ) << 'x' << c;
        first = false;
      }
    }
    os << '}';
  }
  return os.str();
}

std::strong_ordering operator<=>( parallelotope const& a, parallelotope const& b )
{
  if ( a.n_ != b.n_ )
    return a.n_ <=> b.n_;
  if ( a.m_ != b.m_ )
    return b.m_ <=> a.m_;
  for ( uint32_t j = 0; j < a.m_; ++j )
  {
    if ( auto const c = compare_block( a.blocks_[j], b.blocks_[j] ); c != 0 )
      return c;
  }
  return a.anchor_ <=> b.anchor_;
}

parallelotope single_vertex( uint32_t n, uint32_t x )
{
  return { n, x, std::span<uint32_t const>{} };
}

ptope_family enumerate_all( uint32_t n, family_kind kind )
{
  if ( n < 1u || n > max_vars )
    throw std::invalid_argument( "enumerate_all: n must be in [1, 8]" );

  ptope_family family{ n, kind, {} };
  auto const all = ( 1u << n ) - 1u;
  family.members.reserve( kind == family_kind::full ? count_formula( n ) : subcube_count( n ) );

  auto emit = [&]( std::span<uint32_t const> blocks ) {
    uint32_t fixed = 0;
    for ( auto b : blocks )
      fixed |= b & ( ~b + 1u );
    auto const free = all & ~fixed;
    /* every subset of the free coordinates, including the empty one */
    for ( uint32_t a = free;; a = ( a - 1u ) & free )
    {
      family.members.emplace_back( n, a, blocks );
      if ( a == 0u )
        break;
    }
  };

  switch ( kind )
  {
  case family_kind::full:
    for_each_partial_partition( n, emit );
    break;
  case family_kind::subcube:
    for ( uint32_t mask = 0; mask <= all; ++mask )
    {
      std::array<uint32_t, max_vars> blocks{};
      uint32_t m = 0;
      for ( uint32_t c = 0; c < n; ++c )
      {
        if ( ( mask >> c ) & 1u )
          blocks[m++] = 1u << c;
      }
      emit( std::span<uint32_t const>( blocks.data(), m ) );
    }
    break;
  case family_kind::minterm:
    for ( uint32_t x = 0; x <= all; ++x )
      family.members.push_back( single_vertex( n, x ) );
    break;
  }

  std::sort( family.members.begin(), family.members.end() );
  return family;
}

uint64_t count_formula( uint32_t n )
{
  if ( n < 1u || n > 20u )
    throw std::invalid_argument( "count_formula: n out of range" );
  /* stirling[j][m]: partitions of a j-set into m blocks */
  std::vector<std::vector<uint64_t>> stirling( n + 1, std::vector<uint64_t>( n + 1, 0 ) );
  stirling[0][0] = 1;
  for ( uint32_t j = 1; j <= n; ++j )
  {
    for ( uint32_t m = 1; m <= j; ++m )
      stirling[j][m] = m * stirling[j - 1][m] + stirling[j - 1][m - 1];
  }
  std::vector<uint64_t> binom( n + 1, 0 );
  binom[0] = 1;
  for ( uint32_t j = 1; j <= n; ++j )
    binom[j] = binom[j - 1] * ( n - j + 1 ) / j;

  uint64_t total = 0;
  for ( uint32_t m = 0; m <= n; ++m )
  {
    uint64_t a = 0;
    for ( uint32_t j = m; j <= n; ++j )
      a += binom[j] * stirling[j][m];
    total += a << ( n - m );
  }
  return total;
}

uint64_t subcube_count( uint32_t n )
{
  uint64_t c = 1;
  for ( uint32_t i = 0; i < n; ++i )
    c *= 3u;
  return c;
}

std::string export_family( ptope_family const& family )
{
  std::string out;
  for ( auto const& p : family.members )
  {
    out += p.to_string();
    out += '\n';
  }
  return out;
}

} // namespace sshr
