#include "sshr/pattern_bound.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <stdexcept>

namespace sshr
{

namespace
{

/* 4-dim cells have 2^16 patterns; beyond n = 6 the candidate count makes them too slow to tabulate */
uint32_t cell_dim( uint32_t n )
{
  return n <= 6 ? std::min( n, 4u ) : 3u;
}

std::vector<int64_t> cell_distances( uint32_t dim, std::vector<int64_t> const& edge_weight )
{
  auto const states = std::size_t{ 1 } << ( 1u << dim );
  std::vector<std::pair<uint32_t, int64_t>> edges;
  for ( uint32_t s = 1; s < states; ++s )
  {
    if ( edge_weight[s] != pattern_bound::unreachable )
      edges.emplace_back( s, edge_weight[s] );
  }

  std::vector<int64_t> dist( states, pattern_bound::unreachable );
  using item = std::pair<int64_t, uint32_t>;
  std::priority_queue<item, std::vector<item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace( 0, 0u );
  while ( !queue.empty() )
  {
    auto const [d, s] = queue.top();
    queue.pop();
    if ( d != dist[s] )
      continue;
    for ( auto const& [e, w] : edges )
    {
      auto const next = s ^ e;
      if ( d + w < dist[next] )
      {
        dist[next] = d + w;
        queue.emplace( dist[next], next );
      }
    }
  }
  return dist;
}

/* subsets of {0..n-1} of size k in lexicographic order */
std::vector<std::vector<uint32_t>> combinations( uint32_t n, uint32_t k )
{
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur;
  auto rec = [&]( auto&& self, uint32_t from ) -> void {
    if ( cur.size() == k )
    {
      out.push_back( cur );
      return;
    }
    for ( auto i = from; i < n; ++i )
    {
      cur.push_back( i );
      self( self, i + 1 );
      cur.pop_back();
    }
  };
  rec( rec, 0 );
  return out;
}

} // namespace

pattern_bound::pattern_bound( uint32_t n, std::span<bits256 const> rows, std::span<int64_t const> weights, uint32_t max_partitions )
{
  if ( rows.size() != weights.size() )
    throw std::invalid_argument( "pattern_bound: one weight per row expected" );
  if ( std::any_of( weights.begin(), weights.end(), []( int64_t w ) { return w < 0; } ) )
    throw std::invalid_argument( "pattern_bound: weights must be nonnegative" );

  auto const dim = cell_dim( n );
  exact_ = n == dim;
  auto const fixed_count = n - dim;

  std::vector<uint32_t> sizes( rows.size() );
  for ( std::size_t c = 0; c < rows.size(); ++c )
    sizes[c] = rows[c].count();

  for ( auto const& fixed : combinations( n, fixed_count ) )
  {
    if ( partitions_.size() >= std::max( max_partitions, 1u ) )
      break;
    std::vector<uint32_t> free;
    for ( uint32_t c = 0; c < n; ++c )
    {
      if ( std::find( fixed.begin(), fixed.end(), c ) == fixed.end() )
        free.push_back( c );
    }

    std::vector<cell> cells;
    for ( uint32_t v = 0; v < ( 1u << fixed_count ); ++v )
    {
      cell cl;
      for ( uint32_t u = 0; u < ( 1u << dim ); ++u )
      {
        uint32_t point = 0;
        for ( uint32_t i = 0; i < fixed_count; ++i )
          point |= ( ( v >> i ) & 1u ) << fixed[i];
        for ( uint32_t i = 0; i < dim; ++i )
          point |= ( ( u >> i ) & 1u ) << free[i];
        cl.points.push_back( point );
      }

      std::vector<int64_t> edge_weight( std::size_t{ 1 } << ( 1u << dim ), unreachable );
      for ( std::size_t c = 0; c < rows.size(); ++c )
      {
        uint32_t pattern = 0, inside = 0;
        for ( uint32_t i = 0; i < cl.points.size(); ++i )
        {
          if ( rows[c].test( cl.points[i] ) )
          {
            pattern |= 1u << i;
            ++inside;
          }
        }
        if ( pattern == 0 )
          continue;
        auto const share = exact_ ? weights[c] : weights[c] * inside / sizes[c];
        edge_weight[pattern] = std::min( edge_weight[pattern], share );
      }
      cl.dist = cell_distances( dim, edge_weight );
      cells.push_back( std::move( cl ) );
    }
    partitions_.push_back( std::move( cells ) );
  }
}

int64_t pattern_bound::operator()( bits256 const& residual ) const
{
  int64_t best = 0;
  for ( auto const& cells : partitions_ )
  {
    int64_t sum = 0;
    for ( auto const& cl : cells )
    {
      uint32_t pattern = 0;
      for ( uint32_t i = 0; i < cl.points.size(); ++i )
        pattern |= static_cast<uint32_t>( residual.test( cl.points[i] ) ) << i;
      auto const d = cl.dist[pattern];
      if ( d == unreachable )
        return unreachable;
      sum += d;
    }
    best = std::max( best, sum );
  }
  return best;
}

} // namespace sshr
