#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <sshr/netlist.hpp>
#include <sshr/paritycover.hpp>

#include "cli.hpp"

using namespace sshr;

namespace
{

struct outcome
{
  int code;
  std::string out, err;
};

outcome run( std::vector<std::string> args )
{
  std::ostringstream out, err;
  auto const code = run_cli( args, out, err );
  return { code, out.str(), err.str() };
}

std::filesystem::path scratch( std::string const& name )
{
  auto const dir = std::filesystem::temp_directory_path() / "sshr_cli_tests";
  std::filesystem::create_directories( dir );
  return dir / name;
}

void write( std::filesystem::path const& p, std::string const& text )
{
  std::ofstream( p ) << text;
}

std::string slurp( std::filesystem::path const& p )
{
  std::ifstream in( p );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST( cli, enum_counts )
{
  EXPECT_EQ( run( { "enum", "--n", "4" } ).out, "FULL=257 SUBCUBE=81 ratio=3.2\n" );
  EXPECT_EQ( run( { "enum", "--n", "3" } ).out, "FULL=49 SUBCUBE=27 ratio=1.8\n" );
  EXPECT_EQ( run( { "enum", "--n", "2" } ).out.substr( 0, 8 ), "FULL=11 " );
  auto const dump = run( { "enum", "--n", "1", "--dump", "-" } );
  EXPECT_EQ( dump.out, "FULL=3 SUBCUBE=3 ratio=1.0\n0x0 : {x0}\n0x0 :\n0x1 :\n" );
  EXPECT_EQ( run( { "enum", "--n", "9" } ).code, exit_bad_input );
  EXPECT_EQ( run( { "enum", "--n", "3", "--family", "cubes", "--dump", "-" } ).code, exit_bad_input );
}

TEST( cli, synth_worked_example )
{
  auto const netlist = scratch( "example.qasm" ), stats_file = scratch( "example.csv" );
  auto const r = run( { "synth", "--n", "4", "--id", "0x46B9", "--method", "sshr-i", "--objective", "cnot", "--time-limit", "120",
                        "-o", netlist.string(), "--stats", stats_file.string() } );
  ASSERT_EQ( r.code, exit_ok ) << r.err;
  EXPECT_TRUE( r.out.empty() );
  auto const c = parse_netlist( slurp( netlist ) );
  EXPECT_TRUE( verify_oracle( c, from_hex_id( "0x46B9", 4 ) ) );
  EXPECT_LE( sshr::stats( c ).cnot_total, 23u );

  std::istringstream csv( slurp( stats_file ) );
  std::string header, row;
  std::getline( csv, header );
  std::getline( csv, row );
  EXPECT_EQ( header, stats_csv_header() );
  EXPECT_EQ( row.substr( 0, 16 ), "4,0x46b9,sshr-i," );

  EXPECT_EQ( run( { "verify", "--n", "4", "--id", "0x46B9", "--netlist", netlist.string() } ).code, exit_ok );
  EXPECT_EQ( run( { "verify", "--n", "4", "--id", "0x46B8", "--netlist", netlist.string() } ).code, exit_mismatch );
}

TEST( cli, synth_constant_false )
{
  auto const r = run( { "synth", "--n", "3", "--id", "0x00", "--method", "sshr-h", "--stats-json", "-" } );
  ASSERT_EQ( r.code, exit_ok );
  EXPECT_EQ( r.out.substr( 0, 10 ), "qreg q[4]\n" );
  EXPECT_NE( r.out.find( "\"cnot_total\":0" ), std::string::npos );
  EXPECT_NE( r.out.find( "\"t\":0" ), std::string::npos );
}

TEST( cli, esop_never_beats_sshr )
{
  auto tc_of = []( std::string const& method ) {
    auto const r = run( { "synth", "--n", "3", "--id", "0xE8", "--method", method } );
    EXPECT_EQ( r.code, exit_ok );
    auto const pos = r.err.find( "tc=" );
    return std::stol( r.err.substr( pos + 3 ) );
  };
  EXPECT_LE( tc_of( "sshr-i" ), tc_of( "esop-i" ) );
}

TEST( cli, function_sources )
{
  auto const mt = scratch( "minterms.txt" );
  write( mt, "# majority\n3\n5\n6\n7\n" );
  auto const a = run( { "synth", "--n", "3", "--minterms", mt.string(), "--method", "sshr-h" } );
  auto const b = run( { "synth", "--n", "3", "--bits", "11101000", "--method", "sshr-h" } );
  auto const c = run( { "synth", "--n", "3", "--id", "0xE8", "--method", "sshr-h" } );
  ASSERT_EQ( a.code, exit_ok );
  EXPECT_EQ( a.out, b.out );
  EXPECT_EQ( a.out, c.out );

  EXPECT_EQ( run( { "synth", "--n", "3" } ).code, exit_bad_input );
  EXPECT_EQ( run( { "synth", "--n", "3", "--id", "0xE8", "--bits", "11101000" } ).code, exit_bad_input );
  EXPECT_EQ( run( { "synth", "--n", "3", "--id", "0x1E8" } ).code, exit_bad_input );
  EXPECT_EQ( run( { "synth", "--n", "3", "--minterms", scratch( "missing.txt" ).string() } ).code, exit_bad_input );
  EXPECT_EQ( run( { "synth", "--n", "3", "--id", "0xE8", "--method", "xag" } ).code, exit_bad_input );
  EXPECT_EQ( run( { "synth", "--n", "3", "--id", "0xE8", "--ratio", "5/4" } ).code, exit_bad_input );
  EXPECT_EQ( run( { "synth", "--n", "3", "--id", "0xE8", "--time-limit", "0" } ).code, exit_bad_input );
  EXPECT_EQ( run( { "synth", "--n", "3", "--id", "0xE8", "--objective", "weighted:0,0" } ).code, exit_bad_input );
  EXPECT_EQ( run( { "frobnicate" } ).code, exit_bad_input );
  EXPECT_EQ( run( { "--help" } ).code, exit_ok );
}

TEST( cli, help_documents_defaults )
{
  auto const r = run( { "synth", "--help" } );
  EXPECT_NE( r.out.find( "120" ), std::string::npos );
  EXPECT_NE( r.out.find( "3/4" ), std::string::npos );
  EXPECT_NE( r.out.find( "sshr-i" ), std::string::npos );
}

TEST( cli, verify_examples )
{
  auto const empty = scratch( "empty.qasm" ), bad = scratch( "bad.qasm" );
  write( empty, "" );
  write( bad, "qreg q[4]\nccx q[0]\n" );
  EXPECT_EQ( run( { "verify", "--n", "3", "--id", "0x0", "--netlist", empty.string() } ).code, exit_ok );
  EXPECT_EQ( run( { "verify", "--n", "3", "--id", "0xE8", "--netlist", empty.string() } ).code, exit_mismatch );
  EXPECT_EQ( run( { "verify", "--n", "3", "--id", "0xE8", "--netlist", bad.string() } ).code, exit_bad_input );
}

TEST( cli, bench_reports )
{
  auto const all = run( { "bench", "--n", "3", "--all", "--method", "sshr-h" } );
  ASSERT_EQ( all.code, exit_ok );
  std::istringstream in( all.out );
  std::string line, last;
  std::size_t lines = 0;
  while ( std::getline( in, line ) )
  {
    ++lines;
    last = line;
  }
  EXPECT_EQ( lines, 1u + 256u + 1u );
  EXPECT_EQ( last.substr( 0, 8 ), "3,total," );

  auto const none = run( { "bench", "--n", "5", "--random", "0" } );
  EXPECT_EQ( none.code, exit_ok );
  EXPECT_EQ( none.out, stats_csv_header() + "\n" );
}

TEST( cli, deterministic_runs_are_byte_identical )
{
  std::vector<std::string> const bench{ "bench", "--n", "5", "--random", "4", "--seed", "11", "--method", "sshr-i", "--time-limit", "0.5",
                                        "--deterministic" };
  auto const a = run( bench ), b = run( bench );
  ASSERT_EQ( a.code, exit_ok ) << a.err;
  EXPECT_EQ( a.out, b.out );
  EXPECT_NE( a.out.find( ",0.000\n" ), std::string::npos );

  auto jobs = bench;
  jobs.insert( jobs.end(), { "--jobs", "3" } );
  EXPECT_EQ( run( jobs ).out, a.out );

  std::vector<std::string> const synth{ "synth", "--n", "5", "--id", "0x1727b806", "--time-limit", "0.5", "--deterministic", "--format", "json" };
  EXPECT_EQ( run( synth ).out, run( synth ).out );
}

TEST( cli, compare_row )
{
  auto const r = run( { "compare", "--n", "4", "--random", "5", "--seed", "3", "--deterministic", "--time-limit", "5" } );
  ASSERT_EQ( r.code, exit_ok ) << r.err;
  std::istringstream in( r.out );
  std::string header, row;
  std::getline( in, header );
  EXPECT_NE( header.find( "gain_vs_esop-i" ), std::string::npos );
  std::size_t rows = 0;
  while ( std::getline( in, row ) )
    ++rows;
  EXPECT_EQ( rows, 6u );
}

TEST( cli, ilp_export_and_solution_check )
{
  auto const lp = scratch( "model.lp" );
  ASSERT_EQ( run( { "export-ilp", "--n", "4", "--id", "0x46B9", "-o", lp.string() } ).code, exit_ok );
  auto const text = slurp( lp );
  EXPECT_EQ( text.rfind( "End\n" ), text.size() - 4 );

  auto const f = from_hex_id( "0x46B9", 4 );
  auto const inst = build_instance( f, cached_candidate_table( 4, family_kind::full, objective::cnot() ) );
  auto const sol = solve( inst );
  std::string listing;
  for ( auto i : sol.selected )
    listing += "x" + std::to_string( i ) + " 1\n";
  auto const file = scratch( "solution.txt" );
  write( file, listing );
  auto const ok = run( { "check-solution", "--n", "4", "--id", "0x46B9", "--solution", file.string() } );
  EXPECT_EQ( ok.code, exit_ok );
  EXPECT_EQ( ok.out, "valid sets=" + std::to_string( sol.selected.size() ) + " tc=" + std::to_string( sol.tc ) + " tie=" +
                         std::to_string( sol.tie ) + "\n" );

  write( file, "x0 1\n" );
  EXPECT_EQ( run( { "check-solution", "--n", "4", "--id", "0x46B9", "--solution", file.string() } ).code, exit_mismatch );
  EXPECT_EQ( run( { "export-ilp", "--n", "4", "--id", "0x46B9", "--family", "cubes" } ).code, exit_bad_input );
}

TEST( cli, time_limit_from_environment )
{
  ::setenv( "SSHR_TIME_LIMIT", "-3", 1 );
  EXPECT_EQ( run( { "synth", "--n", "3", "--id", "0xE8" } ).code, exit_bad_input );
  ::setenv( "SSHR_TIME_LIMIT", "2", 1 );
  EXPECT_EQ( run( { "synth", "--n", "3", "--id", "0xE8" } ).code, exit_ok );
  ::unsetenv( "SSHR_TIME_LIMIT" );
}
