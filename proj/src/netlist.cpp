#include "sshr/netlist.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sshr
{

namespace
{

std::string qref( uint32_t q )
{
  return "q[" + std::to_string( q ) + "]";
}

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
    s.remove_prefix( 1 );
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
    s.remove_suffix( 1 );
  return s;
}

[[noreturn]] void parse_error( std::size_t line, std::string const& msg )
{
  throw std::invalid_argument( "netlist line " + std::to_string( line ) + ": " + msg );
}

/* parses "q[<int>]" at the front of s and advances past it */
uint32_t take_qubit( std::string_view& s, std::size_t line )
{
  s = trim( s );
  if ( s.size() < 4 || s.substr( 0, 2 ) != "q[" )
    parse_error( line, "expected q[<index>]" );
  s.remove_prefix( 2 );
  uint32_t v = 0;
  std::size_t i = 0;
  while ( i < s.size() && std::isdigit( static_cast<unsigned char>( s[i] ) ) )
  {
    v = v * 10u + static_cast<uint32_t>( s[i] - '0' );
    if ( v > 1024u )
      parse_error( line, "qubit index too large" );
    ++i;
  }
  if ( i == 0 || i >= s.size() || s[i] != ']' )
    parse_error( line, "expected q[<index>]" );
  s.remove_prefix( i + 1 );
  return v;
}

void expect_end( std::string_view s, std::size_t line )
{
  s = trim( s );
  if ( !s.empty() && s != ";" )
    parse_error( line, "trailing characters" );
}

} // namespace

netlist_format netlist_format_from_string( std::string const& name )
{
  if ( name == "qasm" )
    return netlist_format::qasm;
  if ( name == "json" )
    return netlist_format::json;
  throw std::invalid_argument( "unsupported netlist format '" + name + "'" );
}

std::string emit_qasm( circuit const& c )
{
  auto const low = lowered( c );
  std::string out = "qreg " + qref( low.width() ) + "\n";
  auto const& starts = low.block_starts();
  std::size_t next_block = 0;
  for ( std::size_t i = 0; i < low.gates().size(); ++i )
  {
    while ( next_block < starts.size() && starts[next_block] == i )
    {
      out += "// block\n";
      ++next_block;
    }
    std::visit(
        [&out]( auto const& op ) {
          using T = std::decay_t<decltype( op )>;
          if constexpr ( std::is_same_v<T, x_gate> )
          {
            out += "x " + qref( op.target );
          }
          else if constexpr ( std::is_same_v<T, cnot_gate> )
          {
            out += "cx " + qref( op.control ) + "," + qref( op.target );
          }
          else
          {
            out += "mcx ";
            for ( std::size_t k = 0; k < op.controls.size(); ++k )
              out += ( k ? "," : "" ) + qref( op.controls[k].qubit );
            out += " -> " + qref( op.target );
          }
        },
        low.gates()[i] );
    out += '\n';
  }
  for ( ; next_block < starts.size(); ++next_block )
    out += "// block\n";
  return out;
}

circuit parse_qasm( std::string_view text, std::optional<uint32_t> default_width )
{
  std::optional<circuit> result;
  if ( default_width )
    result.emplace( *default_width );

  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool pending_block = false;
  while ( pos <= text.size() )
  {
    auto const eol = std::min( text.find( '\n', pos ), text.size() );
    auto line = trim( text.substr( pos, eol - pos ) );
    pos = eol + 1;
    ++line_no;
    if ( line.empty() )
      continue;
    if ( line.substr( 0, 2 ) == "//" || line.front() == '#' )
    {
      if ( trim( line.substr( line.front() == '#' ? 1 : 2 ) ) == "block" )
        pending_block = true;
      continue;
    }

    auto const space = line.find_first_of( " \t" );
    auto const op = line.substr( 0, space );
    auto rest = space == std::string_view::npos ? std::string_view{} : line.substr( space );

    if ( op == "qreg" )
    {
      if ( result && result->size() > 0 )
        parse_error( line_no, "qreg after gates" );
      auto const w = take_qubit( rest, line_no );
      expect_end( rest, line_no );
      if ( w < 2u || w > max_vars + 1u )
        parse_error( line_no, "unsupported register width" );
      result.emplace( w );
      continue;
    }
    if ( !result )
      parse_error( line_no, "gate before qreg and no default width" );

    if ( pending_block )
    {
      result->begin_block();
      pending_block = false;
    }

    try
    {
      if ( op == "x" )
      {
        auto const t = take_qubit( rest, line_no );
        expect_end( rest, line_no );
        result->add_x( t );
      }
      else if ( op == "cx" )
      {
        auto const c = take_qubit( rest, line_no );
        rest = trim( rest );
        if ( rest.empty() || rest.front() != ',' )
          parse_error( line_no, "expected ','" );
        rest.remove_prefix( 1 );
        auto const t = take_qubit( rest, line_no );
        expect_end( rest, line_no );
        result->add_cnot( c, t );
      }
      else if ( op == "mcx" )
      {
        std::vector<control> controls;
        while ( true )
        {
          controls.push_back( { take_qubit( rest, line_no ), true } );
          rest = trim( rest );
          if ( !rest.empty() && rest.front() == ',' )
          {
            rest.remove_prefix( 1 );
            continue;
          }
          break;
        }
        if ( rest.substr( 0, 2 ) != "->" )
          parse_error( line_no, "expected '->'" );
        rest.remove_prefix( 2 );
        auto const t = take_qubit( rest, line_no );
        expect_end( rest, line_no );
        result->add_mct( std::move( controls ), t );
      }
      else
      {
        parse_error( line_no, "unknown gate '" + std::string( op ) + "'" );
      }
    }
    catch ( std::invalid_argument const& e )
    {
      std::string const msg = e.what();
      if ( msg.rfind( "netlist line", 0 ) == 0 )
        throw;
      parse_error( line_no, msg );
    }
  }
  if ( pending_block && result )
    result->begin_block();
  if ( !result )
    throw std::invalid_argument( "netlist has no qreg line and no default width" );
  return std::move( *result );
}

std::string stats_json( gate_stats const& s )
{
  nlohmann::ordered_json j;
  j["x"] = s.x_count;
  j["cnot"] = s.cnot_count;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for ( uint32_t k = 2; k <= max_controls; ++k )
    hist[std::to_string( k )] = s.mct_histogram[k];
  j["mct"] = hist;
  j["t"] = s.t_count;
  j["h"] = s.h_count;
  j["cnot_total"] = s.cnot_total;
  j["ancilla_max"] = s.ancilla_max;
  j["ancilla_sum"] = s.ancilla_sum;
  return j.dump();
}

std::string emit_json( circuit const& c )
{
  nlohmann::ordered_json doc;
  doc["width"] = c.width();
  auto gates = nlohmann::ordered_json::array();
  for ( auto const& g : c.gates() )
  {
    nlohmann::ordered_json jg;
    std::visit(
        [&jg]( auto const& op ) {
          using T = std::decay_t<decltype( op )>;
          if constexpr ( std::is_same_v<T, x_gate> )
          {
            jg["op"] = "x";
            jg["target"] = op.target;
          }
          else if constexpr ( std::is_same_v<T, cnot_gate> )
          {
            jg["op"] = "cx";
            jg["control"] = op.control;
            jg["target"] = op.target;
          }
          else
          {
            jg["op"] = "mcx";
            auto ctl = nlohmann::ordered_json::array();
            for ( auto const& c : op.controls )
              ctl.push_back( { { "qubit", c.qubit }, { "positive", c.positive } } );
            jg["controls"] = ctl;
            jg["target"] = op.target;
          }
        },
        g );
    gates.push_back( jg );
  }
  doc["gates"] = gates;
  doc["blocks"] = c.block_starts();
  doc["stats"] = nlohmann::ordered_json::parse( stats_json( stats( c ) ) );
  return doc.dump( 2 ) + "\n";
}

circuit parse_json( std::string_view text )
{
  try
  {
    auto const doc = nlohmann::json::parse( text );
    circuit c( doc.at( "width" ).get<uint32_t>() );
    std::vector<std::size_t> blocks;
    if ( doc.contains( "blocks" ) )
      blocks = doc.at( "blocks" ).get<std::vector<std::size_t>>();
    std::size_t next_block = 0;
    for ( auto const& jg : doc.at( "gates" ) )
    {
      while ( next_block < blocks.size() && blocks[next_block] == c.size() )
      {
        c.begin_block();
        ++next_block;
      }
      auto const op = jg.at( "op" ).get<std::string>();
      auto const target = jg.at( "target" ).get<uint32_t>();
      if ( op == "x" )
        c.add_x( target );
      else if ( op == "cx" )
        c.add_cnot( jg.at( "control" ).get<uint32_t>(), target );
      else if ( op == "mcx" )
      {
        std::vector<control> controls;
        for ( auto const& jc : jg.at( "controls" ) )
          controls.push_back( { jc.at( "qubit" ).get<uint32_t>(), jc.at( "positive" ).get<bool>() } );
        c.add_mct( std::move( controls ), target );
      }
      else
        throw std::invalid_argument( "unknown gate '" + op + "'" );
    }
    for ( ; next_block < blocks.size(); ++next_block )
      c.begin_block();
    return c;
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw std::invalid_argument( std::string( "malformed JSON netlist: " ) + e.what() );
  }
}

std::string emit( circuit const& c, netlist_format format )
{
  return format == netlist_format::qasm ? emit_qasm( c ) : emit_json( c );
}

circuit parse_netlist( std::string_view text, std::optional<uint32_t> default_width )
{
  auto const t = trim( text );
  if ( !t.empty() && t.front() == '{' )
    return parse_json( t );
  return parse_qasm( text, default_width );
}

std::string stats_csv_header()
{
  std::string h = "n,id,method,x,cnot";
  for ( uint32_t k = 2; k <= max_controls; ++k )
    h += ",mct" + std::to_string( k );
  return h + ",t,h,cnot_total,ancilla_max,ancilla_sum,wall_ms";
}

std::string stats_csv_row( uint32_t n, std::string const& id, std::string const& method, gate_stats const& s, double wall_ms )
{
  std::ostringstream os;
  os << n << ',' << id << ',' << method << ',' << s.x_count << ',' << s.cnot_count;
  for ( uint32_t k = 2; k <= max_controls; ++k )
    os << ',' << s.mct_histogram[k];
  os << ',' << s.t_count << ',' << s.h_count << ',' << s.cnot_total << ',' << s.ancilla_max << ',' << s.ancilla_sum << ','
     << std::fixed << std::setprecision( 3 ) << wall_ms;
  return os.str();
}

} // namespace sshr
