/*!
  \file gf2m.hpp
  \brief GF(2^m) arithmetic for 1 ≤ m ≤ 16.

  Field elements are m-bit integers; bit j is the coefficient of X^j.  The
  reduction polynomials are the primitive polynomials of Lin & Costello
  (Error Control Coding, Table 2.7), fixed here so that encodings are
  bit-exact across implementations:

      m :  1      2      3      4      5      6      7      8
           0x3    0x7    0xb    0x13   0x25   0x43   0x89   0x11d
      m :  9      10     11     12     13     14     15     16
           0x211  0x409  0x805  0x1053 0x201b 0x4443 0x8003 0x1100b
*/

#pragma once

#include "common.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace ccirc
{

inline constexpr uint32_t gf2m_max_log = 16;

inline constexpr uint32_t gf2m_polynomials[gf2m_max_log] = {
    0x3,    0x7,    0xb,    0x13,   0x25,   0x43,   0x89,   0x11d,
    0x211,  0x409,  0x805,  0x1053, 0x201b, 0x4443, 0x8003, 0x1100b };

class gf2m
{
public:
  explicit gf2m( uint32_t m ) : m_( m )
  {
    if ( m == 0 || m > gf2m_max_log )
      throw validation_error( "gf2m supports 1 <= m <= " + std::to_string( gf2m_max_log ) );
    poly_ = gf2m_polynomials[m - 1];
  }

  uint32_t m() const { return m_; }
  uint32_t order() const { return 1u << m_; }
  uint32_t modulus() const { return poly_; }

  static uint32_t add( uint32_t a, uint32_t b ) { return a ^ b; }

  uint32_t mul( uint32_t a, uint32_t b ) const
  {
    uint32_t r = 0;
    while ( b )
    {
      if ( b & 1u )
        r ^= a;
      b >>= 1;
      a <<= 1;
      if ( a & ( 1u << m_ ) )
        a ^= poly_;
    }
    return r;
  }

  uint32_t pow( uint32_t a, uint64_t e ) const
  {
    uint32_t r = 1;
    while ( e )
    {
      if ( e & 1u )
        r = mul( r, a );
      a = mul( a, a );
      e >>= 1;
    }
    return r;
  }

  /*! \brief Horner evaluation; coeffs[j] is the coefficient of X^j. */
  uint32_t poly_eval( std::span<uint32_t const> coeffs, uint32_t x ) const
  {
    uint32_t r = 0;
    for ( size_t j = coeffs.size(); j-- > 0; )
      r = add( mul( r, x ), coeffs[j] );
    return r;
  }

private:
  uint32_t m_;
  uint32_t poly_;
};

} // namespace ccirc
