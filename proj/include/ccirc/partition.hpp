/*!
  \file partition.hpp
  \brief Variable block partitions used by the #SAT algorithm and the hard function.
*/

#pragma once

#include "common.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ccirc
{

enum class partition_style
{
  consecutive,
  interleaved
};

/*! \brief A partition of [1,n] into variable blocks.
 *
 * consecutive: ⌊n/k⌋ contiguous blocks, almost-even (sizes differ by at most
 * one; the first n mod ⌊n/k⌋ blocks take the extra variable).  interleaved:
 * requires k | n; block i is the i-th variable of each of the k consecutive
 * chunks of size n/k.
 */
struct block_partition
{
  partition_style style{ partition_style::consecutive };
  uint32_t n{ 0 };
  uint32_t k{ 0 };
  std::vector<std::vector<uint32_t>> blocks; /* 1-based variables, ascending within a block */

  static block_partition consecutive( uint32_t n, uint32_t k )
  {
    if ( k == 0 || k > n )
      throw validation_error( "block partition requires 1 <= k <= n" );
    block_partition p{ partition_style::consecutive, n, k, {} };
    uint32_t const m = n / k;
    uint32_t const base = n / m;
    uint32_t const extra = n % m;
    uint32_t v = 1;
    for ( uint32_t i = 0; i < m; ++i )
    {
      uint32_t size = base + ( i < extra ? 1 : 0 );
      std::vector<uint32_t> block;
      block.reserve( size );
      for ( uint32_t j = 0; j < size; ++j )
        block.push_back( v++ );
      p.blocks.push_back( std::move( block ) );
    }
    return p;
  }

  static block_partition interleaved( uint32_t n, uint32_t k )
  {
    if ( k == 0 || k > n || n % k != 0 )
      throw validation_error( "interleaved partition requires k to divide n" );
    block_partition p{ partition_style::interleaved, n, k, {} };
    uint32_t chunk = n / k;
    for ( uint32_t i = 1; i <= chunk; ++i )
    {
      std::vector<uint32_t> block;
      block.reserve( k );
      for ( uint32_t j = 0; j < k; ++j )
        block.push_back( j * chunk + i );
      p.blocks.push_back( std::move( block ) );
    }
    return p;
  }

  static block_partition make( uint32_t n, uint32_t k, partition_style style )
  {
    return style == partition_style::consecutive ? consecutive( n, k ) : interleaved( n, k );
  }

  /*! \brief Validates that explicit blocks partition [1,n]. */
  static block_partition from_blocks( uint32_t n, std::vector<std::vector<uint32_t>> blocks )
  {
    std::vector<uint8_t> seen( n + 1, 0 );
    uint32_t total = 0;
    for ( auto const& block : blocks )
    {
      if ( block.empty() )
        throw validation_error( "block partition: empty block" );
      for ( auto v : block )
      {
        if ( v == 0 || v > n )
          throw validation_error( "block partition: variable " + std::to_string( v ) + " out of range" );
        if ( seen[v]++ )
          throw validation_error( "block partition: variable " + std::to_string( v ) + " repeated" );
        ++total;
      }
    }
    if ( total != n )
      throw validation_error( "block partition: blocks do not cover all variables" );
    block_partition p{ partition_style::consecutive, n, 0, std::move( blocks ) };
    return p;
  }
};

} // namespace ccirc
