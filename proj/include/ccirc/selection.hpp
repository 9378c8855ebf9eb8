/*!
  \file selection.hpp
  \brief p-regular random selections: i.i.d. and k-wise independent samplers.
*/

#pragma once

#include "common.hpp"
#include "gf2m.hpp"
#include "restriction.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ccirc
{

/*! \brief i.i.d. selection: each coordinate free with probability p; deterministic per seed. */
inline selection sample_selection_random( uint32_t n, double p, uint64_t seed )
{
  if ( p < 0.0 || p > 1.0 )
    throw validation_error( "selection: p must lie in [0,1]" );
  std::mt19937_64 rng( seed );
  selection s;
  s.bits.resize( n );
  for ( uint32_t i = 0; i < n; ++i )
  {
    double const u = static_cast<double>( rng() >> 11 ) * 0x1.0p-53;
    s.bits[i] = u < p ? 1 : 0;
  }
  return s;
}

/*! \brief k-wise independent selection with exact bias 2^-t.
 *
 * The seed encodes a degree-(k−1) polynomial over GF(2^m) as k coefficients
 * of m bits each (low bits first).  Coordinate i is free iff the top t bits
 * of the polynomial evaluated at point i−1 are all zero.  Evaluations at up
 * to k distinct points are jointly uniform, so any k coordinates are
 * mutually independent with marginal exactly 2^-t.
 */
struct kwise_selection_sampler
{
  uint32_t independence{ 2 }; /* k */
  uint32_t field_log{ 1 };    /* m */
  uint32_t bias_exp{ 0 };     /* t: p = 2^-t */
  uint32_t n{ 0 };

  uint32_t seed_bits() const { return independence * field_log; }

  double p() const { return 1.0 / static_cast<double>( uint64_t( 1 ) << bias_exp ); }

  void check() const
  {
    if ( independence == 0 )
      throw validation_error( "kwise sampler: independence must be positive" );
    if ( field_log == 0 || field_log > gf2m_max_log )
      throw validation_error( "kwise sampler: field log out of range" );
    if ( bias_exp > field_log )
      throw validation_error( "kwise sampler: bias exponent exceeds field log" );
    if ( n == 0 || uint64_t( n ) > ( uint64_t( 1 ) << field_log ) )
      throw validation_error( "kwise sampler: need n <= 2^m for distinct evaluation points" );
    if ( seed_bits() > 64 )
      throw guard_error( "kwise sampler: seed length " + std::to_string( seed_bits() ) + " exceeds 64 bits" );
  }

  selection sample( uint64_t seed ) const
  {
    check();
    uint32_t const r = seed_bits();
    if ( r < 64 && ( seed >> r ) != 0 )
      throw validation_error( "kwise sampler: seed has more than " + std::to_string( r ) + " bits" );

    gf2m field( field_log );
    uint32_t const mask = ( field_log == 32 ) ? ~0u : ( ( 1u << field_log ) - 1 );
    std::vector<uint32_t> coeffs( independence );
    for ( uint32_t j = 0; j < independence; ++j )
      coeffs[j] = static_cast<uint32_t>( seed >> ( j * field_log ) ) & mask;

    selection s;
    s.bits.resize( n );
    for ( uint32_t i = 0; i < n; ++i )
    {
      uint32_t const value = field.poly_eval( coeffs, i );
      s.bits[i] = ( bias_exp == 0 || ( value >> ( field_log - bias_exp ) ) == 0 ) ? 1 : 0;
    }
    return s;
  }
};

} // namespace ccirc
