#include "sshr/gf2.hpp"

#include <algorithm>

namespace sshr
{

bool gf2_basis::insert( bits256 row )
{
  row = reduce( row );
  if ( row.none() )
    return false;
  auto const pivot = row.lowest();
  /* keep the basis fully reduced on pivot columns */
  for ( auto& r : rows_ )
  {
    if ( r.test( pivot ) )
      r ^= row;
  }
  rows_.push_back( row );
  pivots_.push_back( pivot );
  return true;
}

bits256 gf2_basis::reduce( bits256 target ) const
{
  for ( std::size_t i = 0; i < rows_.size(); ++i )
  {
    if ( target.test( pivots_[i] ) )
      target ^= rows_[i];
  }
  return target;
}

std::optional<std::vector<std::size_t>> find_dependency( std::span<bits256 const> rows )
{
  /* each working row carries the set of original rows it combines */
  struct tracked
  {
    bits256 row;
    std::vector<bool> combo;
    uint32_t pivot;
  };
  std::vector<tracked> basis;
  for ( std::size_t i = 0; i < rows.size(); ++i )
  {
    tracked cur{ rows[i], std::vector<bool>( rows.size(), false ), 0 };
    cur.combo[i] = true;
    for ( auto const& b : basis )
    {
      if ( cur.row.test( b.pivot ) )
      {
        cur.row ^= b.row;
        for ( std::size_t k = 0; k < rows.size(); ++k )
          cur.combo[k] = cur.combo[k] != b.combo[k];
      }
    }
    if ( cur.row.none() )
    {
      std::vector<std::size_t> subset;
      for ( std::size_t k = 0; k < rows.size(); ++k )
      {
        if ( cur.combo[k] )
          subset.push_back( k );
      }
      return subset;
    }
    cur.pivot = cur.row.lowest();
    for ( auto& b : basis )
    {
      if ( b.row.test( cur.pivot ) )
      {
        b.row ^= cur.row;
        for ( std::size_t k = 0; k < rows.size(); ++k )
          b.combo[k] = b.combo[k] != cur.combo[k];
      }
    }
    basis.push_back( std::move( cur ) );
  }
  return std::nullopt;
}

} // namespace sshr
