#pragma once

#include <sshr/circuit.hpp>
#include <sshr/ptope.hpp>

namespace fixtures
{

/* the three blocks of the 0x46B9 worked example, in figure order */
inline sshr::parallelotope s1() { return { 4, 0b0000, { 0b0100u, 0b0010u, 0b0001u } }; }
inline sshr::parallelotope s2() { return { 4, 0b0110, { 0b1000u } }; }
inline sshr::parallelotope s3() { return { 4, 0b0001, { 0b0011u, 0b1000u } }; }

/* circuit drawn for the worked example: S3 block, S1 block, S2 block */
inline sshr::circuit figure_circuit()
{
  sshr::circuit c( 5 );
  c.begin_block();
  c.add_cnot( 2, 3 );
  c.add_mct( { { 1, false }, { 3, true } }, 4 );
  c.add_cnot( 2, 3 );
  c.begin_block();
  c.add_mct( { { 0, false } }, 4 );
  c.begin_block();
  c.add_mct( { { 1, true }, { 2, true }, { 3, false } }, 4 );
  return c;
}

} // namespace fixtures
