/*!
  \file andreev.hpp
  \brief Generalized Andreev hard function over a Reed–Solomon ∘ Hadamard code.

  Enc maps n message bits to a codeword of length 2^k: the message is chunked
  into ⌈n/m⌉ coefficients over GF(2^m) with m = k/2; position z = (z1, z2)
  carries ⟨P_x(z1), z2⟩ over GF(2), where z1 is the low and z2 the high m bits
  of z.  A_k(x, y) indexes Enc(x) at the block-parity selector α(y).  Every
  bit is computable in time polynomial in n and k.
*/

#pragma once

#include "circuit.hpp"
#include "common.hpp"
#include "gf2m.hpp"
#include "partition.hpp"
#include "truth_table.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ccirc
{

struct code_params
{
  uint32_t n{ 0 };         /* message bits */
  uint32_t k{ 0 };         /* codeword length 2^k */
  uint32_t m{ 0 };         /* field log, k/2 */
  uint32_t rs_degree{ 0 }; /* number of field coefficients, ⌈n/m⌉ */

  static code_params make( uint32_t n, uint32_t k )
  {
    if ( n == 0 )
      throw validation_error( "code: message must have at least one bit" );
    if ( k < 2 || k % 2 != 0 )
      throw validation_error( "code: k must be even and at least 2" );
    if ( k / 2 > gf2m_max_log )
      throw validation_error( "code: field log k/2 exceeds " + std::to_string( gf2m_max_log ) );
    code_params p;
    p.n = n;
    p.k = k;
    p.m = k / 2;
    p.rs_degree = ( n + p.m - 1 ) / p.m;
    return p;
  }

  /*! \brief True when the evaluation points of the outer code are not oversubscribed.
   *
   * Outside this regime Enc is still well defined, but the distance bound
   * 1/2 − rs_degree/2^m is meaningless.
   */
  bool distance_regime() const { return rs_degree <= ( 1u << m ) && n <= m * ( 1u << m ); }

  uint64_t codeword_bits() const { return pow2( k ); }
};

namespace detail
{

inline std::vector<uint32_t> message_coefficients( code_params const& p, std::vector<uint8_t> const& x )
{
  if ( x.size() != p.n )
    throw validation_error( "code: message length does not match parameters" );
  std::vector<uint32_t> coeffs( p.rs_degree, 0 );
  for ( uint32_t i = 0; i < p.n; ++i )
  {
    if ( x[i] )
      coeffs[i / p.m] |= 1u << ( i % p.m );
  }
  return coeffs;
}

} // namespace detail

/*! \brief The z-th bit of Enc(x), z ∈ [0, 2^k). */
inline bool enc_bit( code_params const& p, std::vector<uint8_t> const& x, uint64_t z )
{
  if ( z >= p.codeword_bits() )
    throw validation_error( "code: position out of range" );
  gf2m field( p.m );
  auto coeffs = detail::message_coefficients( p, x );
  uint32_t const z1 = static_cast<uint32_t>( z & ( ( 1u << p.m ) - 1 ) );
  uint32_t const z2 = static_cast<uint32_t>( ( z >> p.m ) & ( ( 1u << p.m ) - 1 ) );
  uint32_t const e = field.poly_eval( coeffs, z1 );
  return ( std::popcount( e & z2 ) & 1 ) != 0;
}

/*! \brief Block-parity selector: bit j is the parity of the j-th of k consecutive blocks of y. */
inline uint64_t alpha( std::vector<uint8_t> const& y, uint32_t k )
{
  uint32_t const n = static_cast<uint32_t>( y.size() );
  if ( k == 0 || k > 63 || n == 0 || n % k != 0 )
    throw validation_error( "alpha: k must divide n (k <= 63)" );
  uint32_t const block = n / k;
  uint64_t out = 0;
  for ( uint32_t j = 0; j < k; ++j )
  {
    uint32_t parity = 0;
    for ( uint32_t i = 0; i < block; ++i )
      parity ^= y[j * block + i] & 1u;
    out |= uint64_t( parity ) << j;
  }
  return out;
}

/*! \brief Selector of the A_{S,k} variant: bit j is the parity over
 *         B_j = { j-th smallest variable of each part of the partition }. */
inline uint64_t alpha_partitioned( std::vector<uint8_t> const& y, block_partition const& parts )
{
  uint32_t const n = static_cast<uint32_t>( y.size() );
  if ( parts.n != n || parts.blocks.empty() )
    throw validation_error( "alpha_partitioned: partition does not match y" );
  size_t const k = parts.blocks.front().size();
  if ( k == 0 || k > 63 )
    throw validation_error( "alpha_partitioned: part size out of range" );
  for ( auto const& part : parts.blocks )
  {
    if ( part.size() != k )
      throw validation_error( "alpha_partitioned: parts must have equal size" );
  }
  uint64_t out = 0;
  for ( size_t j = 0; j < k; ++j )
  {
    uint32_t parity = 0;
    for ( auto const& part : parts.blocks )
      parity ^= y[part[j] - 1] & 1u;
    out |= uint64_t( parity ) << j;
  }
  return out;
}

/*! \brief A_k(x, y) = Enc(x) indexed at α(y). */
inline bool andreev_eval( code_params const& p, std::vector<uint8_t> const& x, std::vector<uint8_t> const& y )
{
  if ( x.size() != p.n || y.size() != p.n )
    throw validation_error( "andreev_eval: x and y must both have n bits" );
  return enc_bit( p, x, alpha( y, p.k ) );
}

/*! \brief A_{S,k}(x, y): the selector uses an explicit partition instead of consecutive blocks. */
inline bool andreev_eval_partitioned( code_params const& p, std::vector<uint8_t> const& x,
                                      std::vector<uint8_t> const& y, block_partition const& parts )
{
  if ( x.size() != p.n || y.size() != p.n )
    throw validation_error( "andreev_eval: x and y must both have n bits" );
  return enc_bit( p, x, alpha_partitioned( y, parts ) );
}

namespace detail
{

inline std::vector<uint8_t> index_bits( uint64_t index, uint32_t n, uint32_t offset )
{
  std::vector<uint8_t> bits( n );
  for ( uint32_t i = 0; i < n; ++i )
    bits[i] = static_cast<uint8_t>( ( index >> ( offset + i ) ) & 1u );
  return bits;
}

} // namespace detail

/*! \brief Truth table of A_k over 2n variables: x is variables 1..n, y is n+1..2n. */
inline truth_table andreev_truth_table( uint32_t n, uint32_t k )
{
  if ( 2 * n > truth_table_max_vars )
    throw guard_error( "andreev_truth_table limited to 2n <= " + std::to_string( truth_table_max_vars ) );
  auto params = code_params::make( n, k );
  truth_table tt( 2 * n );
  for ( uint64_t idx = 0; idx < tt.size_bits(); ++idx )
  {
    auto x = detail::index_bits( idx, n, 0 );
    auto y = detail::index_bits( idx, n, n );
    tt.set_bit( idx, andreev_eval( params, x, y ) );
  }
  return tt;
}

/*! \brief Truth table over y of A_k(x, ·) for a fixed message x. */
inline truth_table andreev_truth_table_fixed_x( code_params const& p, std::vector<uint8_t> const& x )
{
  if ( p.n > truth_table_max_vars )
    throw guard_error( "andreev_truth_table_fixed_x limited to n <= " + std::to_string( truth_table_max_vars ) );
  truth_table tt( p.n );
  for ( uint64_t idx = 0; idx < tt.size_bits(); ++idx )
    tt.set_bit( idx, andreev_eval( p, x, detail::index_bits( idx, p.n, 0 ) ) );
  return tt;
}

/*! \brief Exact fraction of inputs on which the circuit agrees with the table. */
inline rational correlation( comparator_circuit const& c, truth_table const& f )
{
  if ( c.num_vars != f.num_vars() )
    throw validation_error( "correlation: circuit and table have different variable counts" );
  auto tt = truth_table_of( c );
  uint64_t agree = 0;
  uint64_t const mask = sim_block_mask( f.num_vars() );
  for ( size_t b = 0; b < f.words().size(); ++b )
    agree += std::popcount( ~( tt.words()[b] ^ f.words()[b] ) & mask );
  return rational::of( agree, f.size_bits() );
}

/*! \brief Minimum relative Hamming distance over all pairs of distinct codewords.
 *
 * All-pairs enumeration; in the distance regime the result should be at
 * least 1/2 − rs_degree/2^m.
 */
inline rational code_min_distance( code_params const& p )
{
  if ( p.n > 10 || p.k > 10 )
    throw guard_error( "code_min_distance limited to n <= 10, k <= 10" );
  uint64_t const messages = pow2( p.n );
  uint64_t const bits = p.codeword_bits();
  size_t const words = static_cast<size_t>( ( bits + 63 ) / 64 );
  uint64_t const tail = bits % 64 == 0 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << ( bits % 64 ) ) - 1 );

  std::vector<std::vector<uint64_t>> codewords( messages, std::vector<uint64_t>( words, 0 ) );
  for ( uint64_t msg = 0; msg < messages; ++msg )
  {
    std::vector<uint8_t> x( p.n );
    for ( uint32_t i = 0; i < p.n; ++i )
      x[i] = static_cast<uint8_t>( ( msg >> i ) & 1u );
    for ( uint64_t z = 0; z < bits; ++z )
    {
      if ( enc_bit( p, x, z ) )
        codewords[msg][z >> 6] |= uint64_t( 1 ) << ( z & 63 );
    }
  }

  uint64_t best = bits + 1;
  for ( uint64_t a = 0; a < messages; ++a )
  {
    for ( uint64_t b = a + 1; b < messages; ++b )
    {
      uint64_t dist = 0;
      for ( size_t w = 0; w < words; ++w )
      {
        uint64_t x = codewords[a][w] ^ codewords[b][w];
        if ( w + 1 == words )
          x &= tail;
        dist += std::popcount( x );
      }
      if ( dist < best )
        best = dist;
    }
  }
  if ( messages < 2 )
    throw validation_error( "code_min_distance: need at least two codewords" );
  return rational::of( best, bits );
}

} // namespace ccirc
