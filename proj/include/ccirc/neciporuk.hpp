/*!
  \file neciporuk.hpp
  \brief Executable Nečiporuk method: subfunction counting per block and a
         syntactic counting function inverted into a wire lower bound.

  The counting function N(ℓ, k) bounds how many distinct non-constant
  functions circuits with ℓ wires over k variables can compute: (2k)^ℓ
  labellings × all-useful gate sequences of length at most ℓ(ℓ−1)/2 × ℓ
  output choices.  It deliberately counts syntax, so the per-block inversion
  min{ ℓ : N(ℓ, k) ≥ m } is an unconditional lower bound on the number of
  wires labelled inside the block.  Constant subfunctions need no wire from
  the block (the whole block may be eliminated by the restriction), so the
  inversion targets the count of distinct non-constant subfunctions.
*/

#pragma once

#include "common.hpp"
#include "partition.hpp"
#include "truth_table.hpp"

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace ccirc
{

struct subfunction_census
{
  uint64_t distinct{ 0 };
  uint64_t distinct_nonconstant{ 0 };
};

namespace detail
{

struct word_vec_hash
{
  size_t operator()( std::vector<uint64_t> const& v ) const
  {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for ( auto w : v )
      h = splitmix64( h ^ w );
    return static_cast<size_t>( h );
  }
};

} // namespace detail

/*! \brief Distinct subfunctions on the block variables over all outside assignments. */
inline subfunction_census subfunction_census_of( truth_table const& f, std::vector<uint32_t> const& block )
{
  if ( f.num_vars() > 20 )
    throw guard_error( "subfunction counting limited to 20 variables" );
  if ( block.empty() || block.size() > 16 )
    throw guard_error( "subfunction counting limited to blocks of 1..16 variables" );
  std::vector<uint8_t> in_block( f.num_vars() + 1, 0 );
  for ( auto v : block )
  {
    if ( v == 0 || v > f.num_vars() )
      throw validation_error( "subfunction census: block variable out of range" );
    if ( in_block[v]++ )
      throw validation_error( "subfunction census: block variable repeated" );
  }
  std::vector<uint32_t> outside;
  for ( uint32_t v = 1; v <= f.num_vars(); ++v )
  {
    if ( !in_block[v] )
      outside.push_back( v );
  }

  uint32_t const b = static_cast<uint32_t>( block.size() );
  uint64_t const inner = pow2( b );
  uint64_t const outer = pow2( static_cast<uint32_t>( outside.size() ) );
  size_t const words = static_cast<size_t>( ( inner + 63 ) / 64 );

  std::unordered_set<std::vector<uint64_t>, detail::word_vec_hash> seen;
  subfunction_census census;
  for ( uint64_t w = 0; w < outer; ++w )
  {
    uint64_t base = 0;
    for ( size_t j = 0; j < outside.size(); ++j )
      base |= ( ( w >> j ) & 1u ) << ( outside[j] - 1 );

    std::vector<uint64_t> sub( words, 0 );
    bool all_zero = true, all_one = true;
    for ( uint64_t z = 0; z < inner; ++z )
    {
      uint64_t index = base;
      for ( uint32_t t = 0; t < b; ++t )
        index |= ( ( z >> t ) & 1u ) << ( block[t] - 1 );
      if ( f.bit( index ) )
      {
        sub[z >> 6] |= uint64_t( 1 ) << ( z & 63 );
        all_zero = false;
      }
      else
      {
        all_one = false;
      }
    }
    if ( seen.insert( std::move( sub ) ).second )
    {
      ++census.distinct;
      if ( !all_zero && !all_one )
        ++census.distinct_nonconstant;
    }
  }
  return census;
}

inline uint64_t subfunction_count( truth_table const& f, std::vector<uint32_t> const& block )
{
  return subfunction_census_of( f, block ).distinct;
}

inline constexpr uint64_t count_saturated = uint64_t( 1 ) << 63;

namespace detail
{

inline uint64_t sat_mul( uint64_t a, uint64_t b )
{
  if ( a == 0 || b == 0 )
    return 0;
  if ( a >= count_saturated || b >= count_saturated || a > count_saturated / b )
    return count_saturated;
  return a * b;
}

inline uint64_t sat_add( uint64_t a, uint64_t b )
{
  uint64_t s = a + b;
  return ( s < a || s >= count_saturated ) ? count_saturated : s;
}

} // namespace detail

/*! \brief N(ℓ, k) = (2k)^ℓ · Σ_{t=0}^{ℓ(ℓ−1)/2} (ℓ(ℓ−1))^t · ℓ, saturated at 2^63. */
inline uint64_t circuits_count_upper( uint32_t wires, uint32_t k )
{
  if ( k == 0 )
    throw validation_error( "circuits_count_upper: need at least one variable" );
  if ( wires == 0 )
    return 0;
  uint64_t labels = 1;
  for ( uint32_t i = 0; i < wires; ++i )
    labels = detail::sat_mul( labels, 2ull * k );
  uint64_t const pairs = uint64_t( wires ) * ( wires - 1 );
  uint64_t const max_gates = pairs / 2;
  uint64_t sequences = 0;
  uint64_t term = 1;
  for ( uint64_t t = 0; t <= max_gates; ++t )
  {
    sequences = detail::sat_add( sequences, term );
    term = detail::sat_mul( term, pairs );
  }
  return detail::sat_mul( detail::sat_mul( labels, sequences ), wires );
}

/*! \brief Smallest ℓ with N(ℓ, k) ≥ target. */
inline uint32_t invert_circuits_count( uint64_t target, uint32_t k )
{
  uint32_t wires = 0;
  while ( circuits_count_upper( wires, k ) < target )
    ++wires;
  return wires;
}

struct necip_block_result
{
  uint64_t subfunctions{ 0 };
  uint64_t subfunctions_nonconstant{ 0 };
  uint32_t wire_bound{ 0 };
};

struct necip_result
{
  std::vector<necip_block_result> per_block;
  uint64_t total_wire_bound{ 0 };
};

/*! \brief Block-by-block wire lower bound: Σ_i min{ ℓ : N(ℓ, |block_i|) ≥ m_i^{nc} }. */
inline necip_result necip_wire_bound( truth_table const& f, block_partition const& partition )
{
  if ( partition.n != f.num_vars() )
    throw validation_error( "necip_wire_bound: partition does not match table" );
  necip_result result;
  for ( auto const& block : partition.blocks )
  {
    necip_block_result r;
    auto census = subfunction_census_of( f, block );
    r.subfunctions = census.distinct;
    r.subfunctions_nonconstant = census.distinct_nonconstant;
    r.wire_bound = invert_circuits_count( census.distinct_nonconstant, static_cast<uint32_t>( block.size() ) );
    result.total_wire_bound += r.wire_bound;
    result.per_block.push_back( r );
  }
  return result;
}

} // namespace ccirc
