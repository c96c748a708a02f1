/*!
  \file gf2.hpp
  \brief Gaussian elimination over GF(2) for point-indicator rows
*/

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bits.hpp"

namespace sshr
{

/*! \brief Incrementally built echelon basis; every stored row has a distinct pivot. */
class gf2_basis
{
public:
  /* returns false if row is already in the span */
  bool insert( bits256 row );

  /* target reduced against the basis; zero iff target is in the span */
  bits256 reduce( bits256 target ) const;

  bool in_span( bits256 const& target ) const { return reduce( target ).none(); }
  std::size_t rank() const { return rows_.size(); }

private:
  std::vector<bits256> rows_;
  std::vector<uint32_t> pivots_;
};

/*! \brief Indices of a nonempty subset of rows whose XOR is zero, if the rows are dependent. */
std::optional<std::vector<std::size_t>> find_dependency( std::span<bits256 const> rows );

} // namespace sshr
