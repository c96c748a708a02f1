#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include <sshr/ptope.hpp>

#include "oracles.hpp"

using namespace sshr;

namespace
{

uint32_t coord_mask( std::initializer_list<uint32_t> coords )
{
  uint32_t m = 0;
  for ( auto c : coords )
    m |= 1u << c;
  return m;
}

uint64_t as_word( bits256 const& b ) { return b.word( 0 ); }

} // namespace

TEST( ptope, worked_example_vertices )
{
  parallelotope const s3( 4, 0b0001, { coord_mask( { 1, 0 } ), coord_mask( { 3 } ) } );
  EXPECT_EQ( s3.vertices().members(), ( std::vector<uint32_t>{ 0b0001, 0b0010, 0b1001, 0b1010 } ) );
  EXPECT_EQ( s3.dimension(), 2u );
  EXPECT_TRUE( s3.contains( 0b1010 ) );
  EXPECT_FALSE( s3.contains( 0b0000 ) );
  EXPECT_TRUE( s3.contains( 0b0001 ) );

  parallelotope const s1( 4, 0, { coord_mask( { 2 } ), coord_mask( { 1 } ), coord_mask( { 0 } ) } );
  EXPECT_EQ( s1.vertices().members(), ( std::vector<uint32_t>{ 0, 1, 2, 3, 4, 5, 6, 7 } ) );
}

TEST( ptope, single_vertex )
{
  auto const p = single_vertex( 3, 5 );
  EXPECT_EQ( p.vertices().members(), ( std::vector<uint32_t>{ 5 } ) );
  EXPECT_TRUE( p.contains( p.anchor() ) );
  EXPECT_EQ( p.to_string(), "0x5 :" );
}

TEST( ptope, canonical_form_and_text )
{
  parallelotope const s3( 4, 0b0001, { coord_mask( { 3 } ), coord_mask( { 0, 1 } ) } );
  EXPECT_EQ( s3.anchor(), 0b0010u );
  EXPECT_EQ( s3.to_string(), "0x2 : {x0,x1},{x3}" );
  EXPECT_EQ( s3, parallelotope( 4, 0b1001, { coord_mask( { 0, 1 } ), coord_mask( { 3 } ) } ) );
}

TEST( ptope, rejects_overlapping_or_invalid_blocks )
{
  std::mt19937 rng( 3 );
  for ( int trial = 0; trial < 200; ++trial )
  {
    uint32_t const n = 2 + rng() % 7;
    uint32_t const a = 1 + rng() % ( ( 1u << n ) - 1u );
    uint32_t b = 1 + rng() % ( ( 1u << n ) - 1u );
    b |= a & ( ~a + 1u ); /* force a shared coordinate */
    EXPECT_THROW( parallelotope( n, 0, { a, b } ), std::invalid_argument );
  }
  EXPECT_THROW( parallelotope( 3, 0, { 0u } ), std::invalid_argument );
  EXPECT_THROW( parallelotope( 3, 0, { 8u } ), std::invalid_argument );
  EXPECT_THROW( parallelotope( 3, 8, { 1u } ), std::invalid_argument );
}

TEST( ptope, enumeration_counts_small )
{
  EXPECT_EQ( enumerate_all( 1, family_kind::full ).members.size(), 3u );
  EXPECT_EQ( enumerate_all( 2, family_kind::full ).members.size(), 11u );
  EXPECT_EQ( enumerate_all( 3, family_kind::full ).members.size(), 49u );
  EXPECT_EQ( enumerate_all( 4, family_kind::full ).members.size(), 257u );
  EXPECT_EQ( enumerate_all( 5, family_kind::full ).members.size(), 1539u );
  EXPECT_EQ( enumerate_all( 6, family_kind::full ).members.size(), 10299u );
  EXPECT_THROW( enumerate_all( 0, family_kind::full ), std::invalid_argument );
  EXPECT_THROW( enumerate_all( 9, family_kind::full ), std::invalid_argument );
}

TEST( ptope, count_formula_matches_enumeration )
{
  EXPECT_EQ( count_formula( 2 ), 11u );
  EXPECT_EQ( count_formula( 3 ), 49u );
  EXPECT_EQ( count_formula( 4 ), 257u );
  EXPECT_EQ( count_formula( 7 ), 75905u );
  EXPECT_EQ( count_formula( 8 ), 609441u );
  for ( uint32_t n = 1; n <= 6; ++n )
    EXPECT_EQ( enumerate_all( n, family_kind::full ).members.size(), count_formula( n ) );
}

TEST( ptope, subcube_family )
{
  for ( uint32_t n = 1; n <= 6; ++n )
  {
    auto const sub = enumerate_all( n, family_kind::subcube );
    EXPECT_EQ( sub.members.size(), subcube_count( n ) );
    std::set<bits256> full_sets;
    for ( auto const& p : enumerate_all( n, family_kind::full ).members )
      full_sets.insert( p.vertex_bits() );
    for ( auto const& p : sub.members )
    {
      for ( auto b : p.blocks() )
        EXPECT_EQ( std::popcount( b ), 1 );
      EXPECT_TRUE( full_sets.count( p.vertex_bits() ) );
    }
  }
  EXPECT_EQ( enumerate_all( 3, family_kind::minterm ).members.size(), 8u );
}

TEST( ptope, enumeration_equals_brute_force )
{
  for ( uint32_t n = 1; n <= 4; ++n )
  {
    auto const expected = oracle::brute_force_parallelotopes( n );
    std::set<uint64_t> got;
    for ( auto const& p : enumerate_all( n, family_kind::full ).members )
      EXPECT_TRUE( got.insert( as_word( p.vertex_bits() ) ).second ) << "duplicate vertex set " << p.to_string();
    EXPECT_EQ( got, expected ) << "n = " << n;
  }
}

TEST( ptope, canonical_form_sound_exhaustive )
{
  /* every (anchor, blocks) input maps to the enumerated representative with the same vertex set */
  for ( uint32_t n = 1; n <= 4; ++n )
  {
    auto const family = enumerate_all( n, family_kind::full );
    std::map<uint64_t, parallelotope> by_set;
    for ( auto const& p : family.members )
      by_set.emplace( as_word( p.vertex_bits() ), p );
    for ( auto const& p : family.members )
    {
      std::vector<uint32_t> blocks( p.blocks().begin(), p.blocks().end() );
      for ( uint32_t a = 0; a < ( 1u << n ); ++a )
      {
        parallelotope const q( n, a, blocks );
        auto const it = by_set.find( as_word( q.vertex_bits() ) );
        ASSERT_NE( it, by_set.end() );
        EXPECT_EQ( it->second, q );
        EXPECT_EQ( q.contains( a ), true );
      }
    }
  }
}

TEST( ptope, contains_agrees_with_vertices )
{
  auto const family = enumerate_all( 5, family_kind::full );
  for ( auto const& p : family.members )
  {
    auto const v = p.vertex_bits();
    EXPECT_EQ( v.count(), p.num_vertices() );
    for ( uint32_t x = 0; x < 32; ++x )
      ASSERT_EQ( p.contains( x ), v.test( x ) ) << p.to_string() << " x=" << x;
  }
}

TEST( ptope, deterministic_order )
{
  auto const family = enumerate_all( 4, family_kind::full );
  for ( std::size_t i = 1; i < family.members.size(); ++i )
  {
    EXPECT_LT( family.members[i - 1], family.members[i] );
    EXPECT_GE( family.members[i - 1].dimension(), family.members[i].dimension() );
  }
  EXPECT_EQ( family.members.front().dimension(), 4u );
  EXPECT_EQ( export_family( family ), export_family( enumerate_all( 4, family_kind::full ) ) );
}

TEST( ptope, export_format )
{
  auto const text = export_family( enumerate_all( 1, family_kind::full ) );
  EXPECT_EQ( text, "0x0 : {x0}\n0x0 :\n0x1 :\n" );
}
