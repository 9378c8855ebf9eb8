/*!
  \file truth_table.hpp
  \brief Packed truth tables and exhaustive extraction from circuits.
*/

#pragma once

#include "circuit.hpp"
#include "common.hpp"

#include <bit>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ccirc
{

inline constexpr uint32_t truth_table_max_vars = 24; /* 2^24 bits = 2 MiB */

/*! \brief Bit vector of length 2^n; bit i is the function value on input index i. */
class truth_table
{
public:
  explicit truth_table( uint32_t num_vars ) : num_vars_( num_vars )
  {
    if ( num_vars > truth_table_max_vars )
      throw guard_error( "truth table limited to " + std::to_string( truth_table_max_vars ) + " variables" );
    words_.assign( sim_num_blocks( num_vars ), 0 );
  }

  uint32_t num_vars() const { return num_vars_; }
  uint64_t size_bits() const { return uint64_t( 1 ) << num_vars_; }

  bool bit( uint64_t index ) const { return ( words_[index >> 6] >> ( index & 63 ) ) & 1u; }

  void set_bit( uint64_t index, bool value )
  {
    if ( value )
      words_[index >> 6] |= uint64_t( 1 ) << ( index & 63 );
    else
      words_[index >> 6] &= ~( uint64_t( 1 ) << ( index & 63 ) );
  }

  std::vector<uint64_t> const& words() const { return words_; }
  std::vector<uint64_t>& words() { return words_; }

  uint64_t count_ones() const
  {
    uint64_t total = 0;
    for ( auto w : words_ )
      total += std::popcount( w );
    return total;
  }

  bool operator==( truth_table const& other ) const = default;

  /* Hex export: lowercase, the most-significant bit of the first digit is
   * input index 0.  For n < 2 the single digit is padded with zeros. */
  std::string to_hex() const
  {
    uint64_t bits = size_bits();
    uint64_t digits = ( bits + 3 ) / 4;
    std::string out( digits, '0' );
    for ( uint64_t d = 0; d < digits; ++d )
    {
      uint32_t nibble = 0;
      for ( uint32_t j = 0; j < 4; ++j )
      {
        uint64_t i = 4 * d + j;
        if ( i < bits && bit( i ) )
          nibble |= 8u >> j;
      }
      out[d] = "0123456789abcdef"[nibble];
    }
    return out;
  }

  static truth_table from_hex( std::string_view hex, uint32_t num_vars )
  {
    truth_table tt( num_vars );
    uint64_t bits = tt.size_bits();
    uint64_t digits = ( bits + 3 ) / 4;
    if ( hex.size() != digits )
      throw validation_error( "truth table hex has " + std::to_string( hex.size() ) + " digits, expected " +
                              std::to_string( digits ) );
    for ( uint64_t d = 0; d < digits; ++d )
    {
      char ch = static_cast<char>( std::tolower( static_cast<unsigned char>( hex[d] ) ) );
      uint32_t nibble;
      if ( ch >= '0' && ch <= '9' )
        nibble = static_cast<uint32_t>( ch - '0' );
      else if ( ch >= 'a' && ch <= 'f' )
        nibble = static_cast<uint32_t>( ch - 'a' ) + 10;
      else
        throw validation_error( std::string( "invalid hex digit '" ) + hex[d] + "'" );
      for ( uint32_t j = 0; j < 4; ++j )
      {
        uint64_t i = 4 * d + j;
        bool value = ( nibble & ( 8u >> j ) ) != 0;
        if ( i < bits )
          tt.set_bit( i, value );
        else if ( value )
          throw validation_error( "nonzero padding bit in truth table hex" );
      }
    }
    return tt;
  }

private:
  uint32_t num_vars_;
  std::vector<uint64_t> words_;
};

/*! \brief Exhaustive truth table of a circuit (word-parallel sweep; guard n ≤ 24). */
inline truth_table truth_table_of( comparator_circuit const& c )
{
  validate( c );
  if ( c.num_vars > truth_table_max_vars )
    throw guard_error( "truth_table_of: circuit has too many variables" );
  truth_table tt( c.num_vars );
  std::vector<uint64_t> words;
  uint64_t mask = sim_block_mask( c.num_vars );
  for ( uint64_t b = 0; b < sim_num_blocks( c.num_vars ); ++b )
  {
    simulate_block( c, b, words );
    tt.words()[b] = words[c.output - 1] & mask;
  }
  return tt;
}

/*! \brief True if the table is monotone (checked along all single-bit edges). */
inline bool is_monotone( truth_table const& tt )
{
  for ( uint32_t v = 0; v < tt.num_vars(); ++v )
  {
    uint64_t step = uint64_t( 1 ) << v;
    for ( uint64_t i = 0; i < tt.size_bits(); ++i )
    {
      if ( ( i & step ) == 0 && tt.bit( i ) && !tt.bit( i | step ) )
        return false;
    }
  }
  return true;
}

} // namespace ccirc
