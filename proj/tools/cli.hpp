/*!
  \file cli.hpp
  \brief The sshr command-line driver, callable in-process

  Exit codes: 0 success, 1 mismatch (verify, check-solution), 2 bad input,
  3 a synthesized circuit failed verification, 4 internal error.
*/

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sshr
{

enum exit_code : int
{
  exit_ok = 0,
  exit_mismatch = 1,
  exit_bad_input = 2,
  exit_unverified = 3,
  exit_internal = 4
};

/* args excludes the program name */
int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace sshr
