/*!
  \file boolfn.hpp
  \brief Truth tables of single-output Boolean functions with n <= 8 inputs
*/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bits.hpp"

namespace sshr
{

inline constexpr uint32_t max_vars = 8u;

/*! \brief Set of points of the n-cube (minterms, residual sets, vertex sets). */
class minterm_set
{
public:
  minterm_set() = default;
  explicit minterm_set( uint32_t n );
  minterm_set( uint32_t n, bits256 members );
  minterm_set( uint32_t n, std::vector<uint32_t> const& members );

  uint32_t num_vars() const { return n_; }
  uint32_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains( uint32_t x ) const { return x < ( 1u << n_ ) && bits_.test( x ); }
  bits256 const& bits() const { return bits_; }

  void insert( uint32_t x );
  std::vector<uint32_t> members() const;

  friend bool operator==( minterm_set const&, minterm_set const& ) = default;

private:
  uint32_t n_ = 0;
  bits256 bits_;
};

/*! \brief Symmetric difference A xor P; throws on mismatched variable counts. */
minterm_set xor_indicator( minterm_set const& a, minterm_set const& p );

/*! \brief Truth table of f : {0,1}^n -> {0,1}; bit x holds f(x). */
class bool_fn
{
public:
  bool_fn() = default;
  bool_fn( uint32_t n, bits256 truth );

  uint32_t num_vars() const { return n_; }
  uint32_t num_points() const { return 1u << n_; }
  bool operator()( uint32_t x ) const { return truth_.test( x ); }
  bits256 const& truth() const { return truth_; }

  /* satisfaction count |f| */
  uint32_t weight() const { return truth_.count(); }

  minterm_set on_set() const { return { n_, truth_ }; }
  minterm_set off_set() const;

  friend bool operator==( bool_fn const&, bool_fn const& ) = default;

private:
  uint32_t n_ = 0;
  bits256 truth_;
};

/*! \brief Parses a hex ID such as "0x46B9" (prefix optional, any case).

  Bit x of the parsed integer becomes f(x). Throws std::invalid_argument on
  malformed digits, on n outside [1, 8] or when the value needs more than 2^n bits.
*/
bool_fn from_hex_id( std::string_view id, uint32_t n );

/*! \brief Lowercase "0x" ID padded to exactly ceil(2^n / 4) digits. */
std::string to_hex_id( bool_fn const& f );

/*! \brief Parses a 2^n character string of '0'/'1', most significant (f_{2^n-1}) first. */
bool_fn from_bit_string( std::string_view bits, uint32_t n );
std::string to_bit_string( bool_fn const& f );

/*! \brief Builds f from an explicit on-set. */
bool_fn from_minterms( std::vector<uint32_t> const& minterms, uint32_t n );

/*! \brief Parses a whitespace/newline separated list of minterms; '#' starts a comment. */
bool_fn parse_minterm_list( std::string_view text, uint32_t n );

/*! \brief Random corpus: |f| uniform in [1, 2^(n-1)], then |f| distinct minterms uniformly.

  Deterministic in (n, count, seed) on every platform. Duplicate functions are allowed.
*/
std::vector<bool_fn> random_corpus( uint32_t n, uint32_t count, uint64_t seed );

/*! \brief All 2^(2^n) functions of n variables, in ID order (n <= 4). */
std::vector<bool_fn> all_functions( uint32_t n );

} // namespace sshr
