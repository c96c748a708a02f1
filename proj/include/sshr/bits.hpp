/*!
  \file bits.hpp
  \brief Fixed-width 256-bit set over the points of an n-cube (n <= 8)
*/

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>

namespace sshr
{

/*! \brief Indicator row over the 2^n points of the cube.

  Bit x is set iff point x is a member. Every cube of up to eight variables
  fits, so the storage is a fixed array of four words.
*/
class bits256
{
public:
  static constexpr uint32_t capacity = 256u;

  constexpr bits256() = default;

  constexpr bool test( uint32_t i ) const { return ( words_[i >> 6] >> ( i & 63u ) ) & 1u; }
  constexpr void set( uint32_t i ) { words_[i >> 6] |= uint64_t{ 1 } << ( i & 63u ); }
  constexpr void reset( uint32_t i ) { words_[i >> 6] &= ~( uint64_t{ 1 } << ( i & 63u ) ); }
  constexpr void flip( uint32_t i ) { words_[i >> 6] ^= uint64_t{ 1 } << ( i & 63u ); }

  constexpr uint32_t count() const
  {
    uint32_t c = 0;
    for ( auto w : words_ )
      c += std::popcount( w );
    return c;
  }

  constexpr bool none() const { return ( words_[0] | words_[1] | words_[2] | words_[3] ) == 0u; }
  constexpr bool any() const { return !none(); }

  /* index of the lowest member, or capacity when empty */
  constexpr uint32_t lowest() const
  {
    for ( uint32_t i = 0; i < 4; ++i )
    {
      if ( words_[i] )
        return i * 64u + std::countr_zero( words_[i] );
    }
    return capacity;
  }

  /* true iff some member is >= limit */
  constexpr bool any_at_or_above( uint32_t limit ) const
  {
    for ( uint32_t i = 0; i < 4; ++i )
    {
      uint64_t w = words_[i];
      if ( limit > i * 64u )
      {
        auto const off = limit - i * 64u;
        if ( off >= 64u )
          continue;
        w &= ~uint64_t{ 0 } << off;
      }
      if ( w )
        return true;
    }
    return false;
  }

  template<typename Fn>
  constexpr void for_each( Fn&& fn ) const
  {
    for ( uint32_t i = 0; i < 4; ++i )
    {
      for ( auto w = words_[i]; w; w &= w - 1 )
        fn( i * 64u + static_cast<uint32_t>( std::countr_zero( w ) ) );
    }
  }

  constexpr uint64_t word( uint32_t i ) const { return words_[i]; }
  constexpr void set_word( uint32_t i, uint64_t w ) { words_[i] = w; }

  constexpr bits256& operator^=( bits256 const& o )
  {
    for ( uint32_t i = 0; i < 4; ++i )
      words_[i] ^= o.words_[i];
    return *this;
  }
  constexpr bits256& operator&=( bits256 const& o )
  {
    for ( uint32_t i = 0; i < 4; ++i )
      words_[i] &= o.words_[i];
    return *this;
  }
  constexpr bits256& operator|=( bits256 const& o )
  {
    for ( uint32_t i = 0; i < 4; ++i )
      words_[i] |= o.words_[i];
    return *this;
  }

  friend constexpr bits256 operator^( bits256 a, bits256 const& b ) { return a ^= b; }
  friend constexpr bits256 operator&( bits256 a, bits256 const& b ) { return a &= b; }
  friend constexpr bits256 operator|( bits256 a, bits256 const& b ) { return a |= b; }

  /* |a & b| without materializing the intersection */
  friend constexpr uint32_t intersection_count( bits256 const& a, bits256 const& b )
  {
    uint32_t c = 0;
    for ( uint32_t i = 0; i < 4; ++i )
      c += std::popcount( a.words_[i] & b.words_[i] );
    return c;
  }

  friend constexpr bool operator==( bits256 const&, bits256 const& ) = default;
  friend constexpr auto operator<=>( bits256 const&, bits256 const& ) = default;

private:
  std::array<uint64_t, 4> words_{};
};

} // namespace sshr

template<>
struct std::hash<sshr::bits256>
{
  std::size_t operator()( sshr::bits256 const& b ) const noexcept
  {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for ( uint32_t i = 0; i < 4; ++i )
    {
      h ^= b.word( i ) + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
    }
    return static_cast<std::size_t>( h );
  }
};
