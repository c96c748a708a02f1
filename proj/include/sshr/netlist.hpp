/*!
  \file netlist.hpp
  \brief Text and JSON netlists, and the per-run statistics row
*/

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "circuit.hpp"
#include "cost.hpp"

namespace sshr
{

enum class netlist_format
{
  qasm,
  json
};

netlist_format netlist_format_from_string( std::string const& name );

/*! \brief Line-oriented netlist of the lowered circuit.

  First line "qreg q[W]", then one gate per line: "x q[i]", "cx q[i],q[j]",
  "mcx q[i],...,q[j] -> q[t]". Block boundaries are written as "// block" lines.
*/
std::string emit_qasm( circuit const& c );

/*! \brief { "width", "gates": [...], "stats": {...} }; gates keep their control polarities. */
std::string emit_json( circuit const& c );

std::string emit( circuit const& c, netlist_format format );

/*! \brief Parses emit_qasm output (comments and blank lines ignored).

  Without a qreg line the width is default_width. Throws std::invalid_argument
  on malformed input.
*/
circuit parse_qasm( std::string_view text, std::optional<uint32_t> default_width = std::nullopt );
circuit parse_json( std::string_view text );

/* dispatches on the first non-blank character */
circuit parse_netlist( std::string_view text, std::optional<uint32_t> default_width = std::nullopt );

std::string stats_json( gate_stats const& s );

/* n,id,method,x,cnot,mct2..mct8,t,h,cnot_total,ancilla_max,ancilla_sum,wall_ms */
std::string stats_csv_header();
std::string stats_csv_row( uint32_t n, std::string const& id, std::string const& method, gate_stats const& s, double wall_ms );

} // namespace sshr
