/*!
  \file circuit.hpp
  \brief Reversible X / CNOT / multi-controlled Toffoli netlists over n+1 qubits

  Qubit q_i carries input bit x_{n-1-i} (q_0 is the most significant input),
  and q_n is the output qubit.
*/

#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "boolfn.hpp"
#include "ptope.hpp"

namespace sshr
{

struct control
{
  uint32_t qubit = 0;
  bool positive = true;

  friend bool operator==( control const&, control const& ) = default;
};

struct x_gate
{
  uint32_t target = 0;
  friend bool operator==( x_gate const&, x_gate const& ) = default;
};

struct cnot_gate
{
  uint32_t control = 0;
  uint32_t target = 0;
  friend bool operator==( cnot_gate const&, cnot_gate const& ) = default;
};

/* fires iff every control qubit equals its polarity */
struct mct_gate
{
  std::vector<control> controls;
  uint32_t target = 0;
  friend bool operator==( mct_gate const&, mct_gate const& ) = default;
};

using gate = std::variant<x_gate, cnot_gate, mct_gate>;

inline uint32_t qubit_of_coordinate( uint32_t n, uint32_t c ) { return n - 1u - c; }

class circuit
{
public:
  circuit() = default;
  explicit circuit( uint32_t width ) : width_( width ) {}

  uint32_t width() const { return width_; }
  std::vector<gate> const& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  /* first gate index of each block */
  std::vector<std::size_t> const& block_starts() const { return block_starts_; }

  /* throws std::invalid_argument on bad indices or repeated qubits */
  void add( gate g );
  void add_x( uint32_t target ) { add( x_gate{ target } ); }
  void add_cnot( uint32_t c, uint32_t target ) { add( cnot_gate{ c, target } ); }
  void add_mct( std::vector<control> controls, uint32_t target ) { add( mct_gate{ std::move( controls ), target } ); }

  void begin_block() { block_starts_.push_back( gates_.size() ); }

  /* appends gates and block markers of another circuit of the same width */
  void append( circuit const& other );

  friend bool operator==( circuit const& a, circuit const& b ) { return a.width_ == b.width_ && a.gates_ == b.gates_; }

private:
  uint32_t width_ = 0;
  std::vector<gate> gates_;
  std::vector<std::size_t> block_starts_;
};

/*! \brief Classical basis-state simulation; returns (inputs, output bit). */
std::pair<uint32_t, bool> simulate( circuit const& c, uint32_t x, bool y );

/*! \brief True iff c maps (x, y) to (x, y ^ f(x)) for all 2^(n+1) basis states. */
bool verify_oracle( circuit const& c, bool_fn const& f );

/*! \brief Negative controls become X pairs, 1-control MCTs become CNOTs, 0-control MCTs become X. */
circuit lowered( circuit const& c );

/*! \brief Oracle block for one parallelotope: CNOT layer, one (n-m)-control gate, mirrored CNOT layer. */
circuit build_block( parallelotope const& p, uint32_t n );

} // namespace sshr
