#include <gtest/gtest.h>

#include <random>

#include <sshr/circuit.hpp>
#include <sshr/cost.hpp>
#include <sshr/netlist.hpp>

#include "fixtures.hpp"

using namespace sshr;

namespace
{

/* maps (x, y) -> (x, y ^ [x in p]) */
bool block_flips_exactly_vertices( parallelotope const& p, circuit const& c )
{
  for ( uint32_t x = 0; x < ( 1u << p.num_vars() ); ++x )
  {
    for ( bool y : { false, true } )
    {
      auto const [xo, yo] = simulate( c, x, y );
      if ( xo != x || yo != ( y != p.contains( x ) ) )
        return false;
    }
  }
  return true;
}

struct block_shape
{
  std::size_t cnots = 0;
  std::size_t core_gates = 0;
  std::size_t core_controls = 0;
};

block_shape shape_of( circuit const& c )
{
  block_shape s;
  for ( auto const& g : c.gates() )
  {
    if ( std::holds_alternative<cnot_gate>( g ) )
      ++s.cnots;
    else
    {
      ++s.core_gates;
      if ( auto const* m = std::get_if<mct_gate>( &g ) )
        s.core_controls = m->controls.size();
    }
  }
  return s;
}

circuit random_circuit( std::mt19937& rng, uint32_t width, std::size_t gates )
{
  circuit c( width );
  for ( std::size_t i = 0; i < gates; ++i )
  {
    if ( rng() % 5 == 0 )
      c.begin_block();
    auto const target = rng() % width;
    switch ( rng() % 3 )
    {
    case 0:
      c.add_x( target );
      break;
    case 1:
      c.add_cnot( ( target + 1 + rng() % ( width - 1 ) ) % width, target );
      break;
    default:
    {
      std::vector<control> ctl;
      for ( uint32_t q = 0; q < width; ++q )
      {
        if ( q != target && rng() % 2 )
          ctl.push_back( { q, static_cast<bool>( rng() % 2 ) } );
      }
      c.add_mct( ctl, target );
    }
    }
  }
  return c;
}

} // namespace

TEST( circuit, build_block_worked_example )
{
  auto const b3 = build_block( fixtures::s3(), 4 );
  circuit e3( 5 );
  e3.add_cnot( 2, 3 );
  e3.add_mct( { { 1, false }, { 3, true } }, 4 );
  e3.add_cnot( 2, 3 );
  EXPECT_EQ( b3, e3 );

  auto const b1 = build_block( fixtures::s1(), 4 );
  circuit e1( 5 );
  e1.add_mct( { { 0, false } }, 4 );
  EXPECT_EQ( b1, e1 );

  circuit joined( 5 );
  joined.append( b3 );
  joined.append( b1 );
  joined.append( build_block( fixtures::s2(), 4 ) );
  EXPECT_EQ( joined, fixtures::figure_circuit() );
  EXPECT_EQ( joined.block_starts(), ( std::vector<std::size_t>{ 0, 3, 4 } ) );
}

TEST( circuit, build_block_full_cube_is_single_x )
{
  for ( uint32_t n = 1; n <= 8; ++n )
  {
    std::vector<uint32_t> blocks;
    for ( uint32_t c = 0; c < n; ++c )
      blocks.push_back( 1u << c );
    auto const b = build_block( parallelotope( n, 0, blocks ), n );
    ASSERT_EQ( b.size(), 1u );
    EXPECT_EQ( std::get<x_gate>( b.gates()[0] ).target, n );
  }
  EXPECT_THROW( build_block( fixtures::s1(), 5 ), std::invalid_argument );
}

TEST( circuit, simulate_and_verify_worked_example )
{
  auto const c = fixtures::figure_circuit();
  auto const f = from_hex_id( "0x46B9", 4 );
  EXPECT_EQ( simulate( c, 0b0001, false ), std::pair( 0b0001u, false ) );
  EXPECT_EQ( simulate( c, 0b1110, true ), std::pair( 0b1110u, false ) );
  EXPECT_TRUE( verify_oracle( c, f ) );

  circuit const empty( 5 );
  EXPECT_EQ( simulate( empty, 9, true ), std::pair( 9u, true ) );
  EXPECT_TRUE( verify_oracle( circuit( 4 ), from_hex_id( "0x0", 3 ) ) );
  EXPECT_FALSE( verify_oracle( circuit( 4 ), from_hex_id( "0xE8", 3 ) ) );
  EXPECT_FALSE( verify_oracle( c, from_hex_id( "0x0", 3 ) ) );
}

TEST( circuit, gate_validation )
{
  circuit c( 3 );
  EXPECT_THROW( c.add_x( 3 ), std::invalid_argument );
  EXPECT_THROW( c.add_cnot( 1, 1 ), std::invalid_argument );
  EXPECT_THROW( c.add_mct( { { 0, true }, { 0, false } }, 2 ), std::invalid_argument );
  EXPECT_THROW( c.add_mct( { { 2, true } }, 2 ), std::invalid_argument );
  EXPECT_NO_THROW( c.add_mct( { { 0, true }, { 1, false } }, 2 ) );
}

TEST( circuit, every_block_realizes_its_parallelotope )
{
  for ( uint32_t n = 1; n <= 4; ++n )
  {
    for ( auto const& p : enumerate_all( n, family_kind::full ).members )
    {
      auto const b = build_block( p, n );
      ASSERT_TRUE( block_flips_exactly_vertices( p, b ) ) << p.to_string();
      auto const s = shape_of( b );
      EXPECT_EQ( s.core_gates, 1u );
      EXPECT_EQ( s.core_controls, n - p.dimension() );
      EXPECT_EQ( s.cnots, 2u * p.intra_block_links() );

      circuit twice( n + 1 );
      twice.append( b );
      twice.append( b );
      EXPECT_TRUE( verify_oracle( twice, bool_fn( n, bits256{} ) ) );
    }
  }
}

TEST( circuit, random_blocks_at_five_variables )
{
  auto const family = enumerate_all( 5, family_kind::full );
  std::mt19937 rng( 17 );
  for ( int i = 0; i < 2000; ++i )
  {
    auto const& p = family.members[rng() % family.members.size()];
    ASSERT_TRUE( block_flips_exactly_vertices( p, build_block( p, 5 ) ) ) << p.to_string();
  }
}

TEST( circuit, block_order_does_not_matter )
{
  auto const f = from_hex_id( "0x46B9", 4 );
  std::vector<parallelotope> blocks{ fixtures::s1(), fixtures::s2(), fixtures::s3() };
  std::sort( blocks.begin(), blocks.end() );
  do
  {
    circuit c( 5 );
    for ( auto const& p : blocks )
      c.append( build_block( p, 4 ) );
    EXPECT_TRUE( verify_oracle( c, f ) );
  } while ( std::next_permutation( blocks.begin(), blocks.end() ) );
}

TEST( cost, decomposition_table )
{
  EXPECT_EQ( mct_decomposition_cost( 2 ), ( mct_cost{ 7, 2, 6, 0 } ) );
  EXPECT_EQ( mct_decomposition_cost( 3 ), ( mct_cost{ 16, 6, 14, 1 } ) );
  EXPECT_EQ( mct_decomposition_cost( 4 ), ( mct_cost{ 24, 20, 10, 1 } ) );
  EXPECT_EQ( mct_decomposition_cost( 5 ), ( mct_cost{ 32, 28, 14, 2 } ) );
  EXPECT_EQ( mct_decomposition_cost( 8 ), ( mct_cost{ 56, 52, 26, 3 } ) );
  EXPECT_EQ( mct_decomposition_cost( 1 ), ( mct_cost{ 0, 0, 1, 0 } ) );
  EXPECT_EQ( mct_decomposition_cost( 0 ), ( mct_cost{} ) );
}

TEST( cost, stats_of_single_gates )
{
  circuit c3( 5 );
  c3.add_mct( { { 0, true }, { 1, true }, { 2, true } }, 4 );
  auto const s3 = stats( c3 );
  EXPECT_EQ( s3.t_count, 16u );
  EXPECT_EQ( s3.h_count, 6u );
  EXPECT_EQ( s3.cnot_total, 14u );
  EXPECT_EQ( s3.ancilla_max, 1u );
  EXPECT_EQ( s3.mct_histogram[3], 1u );

  circuit c5( 6 );
  c5.add_mct( { { 0, true }, { 1, true }, { 2, true }, { 3, true }, { 4, true } }, 5 );
  auto const s5 = stats( c5 );
  EXPECT_EQ( s5.t_count, 32u );
  EXPECT_EQ( s5.h_count, 28u );
  EXPECT_EQ( s5.cnot_total, 14u );
  EXPECT_EQ( s5.ancilla_max, 2u );
}

TEST( cost, stats_of_worked_example )
{
  auto const s = stats( fixtures::figure_circuit() );
  EXPECT_EQ( s.cnot_total, 23u );
  EXPECT_EQ( s.cnot_count, 3u );
  EXPECT_EQ( s.x_count, 6u );
  EXPECT_EQ( s.t_count, 23u );
  EXPECT_EQ( s.h_count, 8u );
  EXPECT_EQ( s.mct_histogram[2], 1u );
  EXPECT_EQ( s.mct_histogram[3], 1u );
  EXPECT_EQ( s.ancilla_max, 1u );
  EXPECT_EQ( s.ancilla_sum, 1u );
  EXPECT_EQ( stats( lowered( fixtures::figure_circuit() ) ), s );
}

TEST( cost, block_cost_without_circuit )
{
  auto const w2 = block_cost( fixtures::s2() );
  EXPECT_EQ( w2.cnot, 14 );
  EXPECT_EQ( w2.t, 16 );
  auto const w3 = block_cost( fixtures::s3() );
  EXPECT_EQ( w3.cnot, 8 );
  EXPECT_EQ( w3.t, 7 );
  auto const cube = block_cost( parallelotope( 4, 0, { 1u, 2u, 4u, 8u } ) );
  EXPECT_EQ( cube.cnot, 0 );
  EXPECT_EQ( cube.t, 0 );
  EXPECT_EQ( block_cost( fixtures::s3(), objective::weighted( 2, 3 ) ), 2 * 8 + 3 * 7 );

  for ( uint32_t n = 1; n <= 5; ++n )
  {
    for ( auto const& p : enumerate_all( n, family_kind::full ).members )
    {
      auto const s = stats( build_block( p, n ) );
      auto const w = block_cost( p );
      ASSERT_EQ( static_cast<uint64_t>( w.cnot ), s.cnot_total ) << p.to_string();
      ASSERT_EQ( static_cast<uint64_t>( w.t ), s.t_count ) << p.to_string();
    }
  }
}

TEST( cost, stats_are_additive )
{
  std::mt19937 rng( 5 );
  for ( int i = 0; i < 200; ++i )
  {
    auto const a = random_circuit( rng, 6, 1 + rng() % 10 );
    auto const b = random_circuit( rng, 6, 1 + rng() % 10 );
    circuit ab = a;
    ab.append( b );
    EXPECT_EQ( stats( ab ), stats( a ) + stats( b ) );
  }
}

TEST( cost, objective_parsing )
{
  EXPECT_EQ( objective_from_string( "cnot" ), objective::cnot() );
  EXPECT_EQ( objective_from_string( "tcount" ), objective::tcount() );
  EXPECT_EQ( objective_from_string( "weighted:2,5" ), objective::weighted( 2, 5 ) );
  EXPECT_THROW( objective_from_string( "weighted:2" ), std::invalid_argument );
  EXPECT_THROW( objective_from_string( "weighted:-1,2" ), std::invalid_argument );
  EXPECT_THROW( objective_from_string( "depth" ), std::invalid_argument );
}

TEST( netlist, gate_lines )
{
  circuit c( 5 );
  c.add_x( 0 );
  c.add_cnot( 2, 3 );
  EXPECT_EQ( emit_qasm( c ), "qreg q[5]\nx q[0]\ncx q[2],q[3]\n" );
}

TEST( netlist, worked_example_text )
{
  EXPECT_EQ( emit_qasm( fixtures::figure_circuit() ),
             "qreg q[5]\n"
             "// block\n"
             "cx q[2],q[3]\n"
             "x q[1]\n"
             "mcx q[1],q[3] -> q[4]\n"
             "x q[1]\n"
             "cx q[2],q[3]\n"
             "// block\n"
             "x q[0]\n"
             "cx q[0],q[4]\n"
             "x q[0]\n"
             "// block\n"
             "x q[3]\n"
             "mcx q[1],q[2],q[3] -> q[4]\n"
             "x q[3]\n" );
}

TEST( netlist, qasm_round_trip_is_lowering )
{
  std::mt19937 rng( 9 );
  for ( int i = 0; i < 300; ++i )
  {
    auto const c = random_circuit( rng, 2 + rng() % 8, rng() % 12 );
    auto const back = parse_qasm( emit_qasm( c ) );
    ASSERT_EQ( back, lowered( c ) );
    EXPECT_EQ( back.block_starts(), lowered( c ).block_starts() );
    for ( uint32_t x = 0; x < ( 1u << ( c.width() - 1 ) ); ++x )
      ASSERT_EQ( simulate( back, x, false ), simulate( c, x, false ) );
  }
}

TEST( netlist, json_round_trip )
{
  std::mt19937 rng( 10 );
  for ( int i = 0; i < 100; ++i )
  {
    auto const c = random_circuit( rng, 2 + rng() % 8, rng() % 12 );
    auto const back = parse_json( emit_json( c ) );
    EXPECT_EQ( back, c );
    EXPECT_EQ( back.block_starts(), c.block_starts() );
  }
  EXPECT_EQ( parse_netlist( emit( fixtures::figure_circuit(), netlist_format::json ) ), fixtures::figure_circuit() );
}

TEST( netlist, parse_errors )
{
  EXPECT_THROW( parse_qasm( "x q[0]\n" ), std::invalid_argument );
  EXPECT_NO_THROW( parse_qasm( "x q[0]\n", 5u ) );
  EXPECT_THROW( parse_qasm( "qreg q[5]\nh q[0]\n" ), std::invalid_argument );
  EXPECT_THROW( parse_qasm( "qreg q[5]\ncx q[0] q[1]\n" ), std::invalid_argument );
  EXPECT_THROW( parse_qasm( "qreg q[5]\nx q[7]\n" ), std::invalid_argument );
  EXPECT_THROW( parse_qasm( "qreg q[5]\nmcx q[0],q[1] q[4]\n" ), std::invalid_argument );
  EXPECT_THROW( parse_json( "{\"width\": 3}" ), std::invalid_argument );
  EXPECT_THROW( netlist_format_from_string( "blif" ), std::invalid_argument );
  EXPECT_EQ( parse_qasm( "", 4u ), circuit( 4 ) );
}

TEST( netlist, csv_row )
{
  auto const s = stats( fixtures::figure_circuit() );
  EXPECT_EQ( stats_csv_header(), "n,id,method,x,cnot,mct2,mct3,mct4,mct5,mct6,mct7,mct8,t,h,cnot_total,ancilla_max,ancilla_sum,wall_ms" );
  EXPECT_EQ( stats_csv_row( 4, "0x46b9", "sshr-i", s, 0.0 ), "4,0x46b9,sshr-i,6,3,1,1,0,0,0,0,0,23,8,23,1,1,0.000" );
}
