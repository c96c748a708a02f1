#include "sshr/candidates.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace sshr
{

candidate_table make_candidate_table( ptope_family const& family, objective const& obj )
{
  candidate_table t;
  t.n = family.n;
  t.kind = family.kind;
  t.obj = obj;
  t.sets = family.members;

  auto const size = t.sets.size();
  t.rows.reserve( size );
  t.weights.reserve( size );
  t.primary.reserve( size );
  t.tie.reserve( size );
  t.index_of.reserve( size );
  for ( uint32_t i = 0; i < size; ++i )
  {
    auto const& p = t.sets[i];
    t.rows.push_back( p.vertex_bits() );
    auto const w = block_cost( p );
    t.weights.push_back( w );
    t.primary.push_back( obj.primary( w.cnot, w.t ) );
    t.tie.push_back( obj.tie( w.cnot, w.t ) );
    t.index_of.emplace( t.rows.back(), i );
  }

  t.scan_order.resize( size );
  std::iota( t.scan_order.begin(), t.scan_order.end(), 0u );
  std::stable_sort( t.scan_order.begin(), t.scan_order.end(), [&t]( uint32_t a, uint32_t b ) {
    return std::tuple{ -static_cast<int64_t>( t.sets[a].dimension() ), t.primary[a], t.tie[a] } <
           std::tuple{ -static_cast<int64_t>( t.sets[b].dimension() ), t.primary[b], t.tie[b] };
  } );
  return t;
}

std::shared_ptr<candidate_table const> cached_candidate_table( uint32_t n, family_kind kind, objective const& obj )
{
  using key_t = std::tuple<uint32_t, family_kind, int64_t, int64_t, int64_t, int64_t>;
  static std::mutex mutex;
  static std::map<key_t, std::shared_ptr<candidate_table const>> cache;

  key_t const key{ n, kind, obj.alpha, obj.beta, obj.tie_alpha, obj.tie_beta };
  std::lock_guard lock( mutex );
  if ( auto it = cache.find( key ); it != cache.end() )
    return it->second;
  auto table = std::make_shared<candidate_table const>( make_candidate_table( enumerate_all( n, kind ), obj ) );
  cache.emplace( key, table );
  return table;
}

} // namespace sshr
