/*!
  \file ptope.hpp
  \brief Parallelotopes embedded in the Boolean n-cube

  A parallelotope of dimension m is the vertex set
  { anchor ^ (XOR of a subset of alpha_1..alpha_m) } where the basis vectors
  alpha_j have pairwise-disjoint supports. The support of alpha_j is called a
  block. Coordinate c is bit c of a point, i.e. x = x_{n-1} ... x_1 x_0.
*/

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bits.hpp"
#include "boolfn.hpp"

namespace sshr
{

enum class family_kind
{
  full,    /*!< every parallelotope */
  subcube, /*!< singleton blocks only (ESOP product terms) */
  minterm  /*!< single vertices only */
};

std::string to_string( family_kind kind );
family_kind family_kind_from_string( std::string const& name );

class parallelotope
{
public:
  parallelotope() = default;

  /*! \brief Validates and canonicalizes.

    Blocks are coordinate bitmasks. Throws std::invalid_argument if a block is
    empty, reaches beyond n coordinates, or overlaps another block. The stored
    anchor has a 0 at each block's lowest coordinate, which identifies the
    vertex set uniquely.
  */
  parallelotope( uint32_t n, uint32_t anchor, std::span<uint32_t const> blocks );
  parallelotope( uint32_t n, uint32_t anchor, std::initializer_list<uint32_t> blocks )
      : parallelotope( n, anchor, std::span<uint32_t const>( blocks.begin(), blocks.size() ) )
  {
  }

  uint32_t num_vars() const { return n_; }
  uint32_t anchor() const { return anchor_; }
  uint32_t dimension() const { return m_; }
  uint32_t num_vertices() const { return 1u << m_; }

  /* blocks sorted by lowest coordinate */
  std::span<uint32_t const> blocks() const { return { blocks_.data(), m_ }; }

  /* union of all blocks */
  uint32_t support() const;

  /* sum over blocks of (|block| - 1) */
  uint32_t intra_block_links() const;

  bits256 vertex_bits() const;
  minterm_set vertices() const { return { n_, vertex_bits() }; }
  bool contains( uint32_t x ) const;

  /* "anchor_hex : {x0,x1},{x3}" */
  std::string to_string() const;

  friend bool operator==( parallelotope const&, parallelotope const& ) = default;

  /* dimension descending, then blocks lexicographically, then anchor */
  friend std::strong_ordering operator<=>( parallelotope const& a, parallelotope const& b );

private:
  uint8_t n_ = 0;
  uint8_t m_ = 0;
  uint32_t anchor_ = 0;
  std::array<uint32_t, max_vars> blocks_{};
};

parallelotope single_vertex( uint32_t n, uint32_t x );

struct ptope_family
{
  uint32_t n = 0;
  family_kind kind = family_kind::full;
  std::vector<parallelotope> members;
};

/*! \brief All parallelotopes of the given kind, canonical and sorted; n in [1, 8]. */
ptope_family enumerate_all( uint32_t n, family_kind kind );

/*! \brief Size of the full family from the partial set-partition count. */
uint64_t count_formula( uint32_t n );

/*! \brief 3^n; subcubes including single vertices. */
uint64_t subcube_count( uint32_t n );

/*! \brief One line per member in to_string() form. */
std::string export_family( ptope_family const& family );

} // namespace sshr
