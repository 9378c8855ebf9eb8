/* Independent reference implementations the unit and acceptance suites check
 * the library against.  Everything here is written the slow, obvious way and
 * stays independent of the word-parallel paths in the library. */

#pragma once

#include <ccirc/circuit.hpp>
#include <ccirc/gf2m.hpp>
#include <ccirc/restriction.hpp>

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracles
{

/* random instance that tolerates a 1-wire draw (gates need two wires) */
inline ccirc::comparator_circuit random_test_circuit( uint32_t num_vars, uint32_t num_wires,
                                                      uint32_t num_gates, uint64_t seed )
{
  if ( num_wires < 2 )
    num_gates = 0;
  return ccirc::random_circuit( num_vars, num_wires, num_gates, seed );
}

/* per-input scalar evaluation, one wire value at a time */
inline bool naive_evaluate( ccirc::comparator_circuit const& c, uint64_t input )
{
  std::vector<bool> value;
  for ( auto const& lit : c.wires )
  {
    bool b = ( ( input >> ( lit.var - 1 ) ) & 1u ) != 0;
    value.push_back( lit.negated ? !b : b );
  }
  for ( auto const& g : c.gates )
  {
    bool const u = value[g.and_wire - 1];
    bool const w = value[g.or_wire - 1];
    value[g.and_wire - 1] = u && w;
    value[g.or_wire - 1] = u || w;
  }
  return value[c.output - 1];
}

inline std::vector<uint8_t> naive_truth_table( ccirc::comparator_circuit const& c )
{
  std::vector<uint8_t> bits( uint64_t( 1 ) << c.num_vars );
  for ( uint64_t i = 0; i < bits.size(); ++i )
    bits[i] = naive_evaluate( c, i ) ? 1 : 0;
  return bits;
}

inline uint64_t naive_count_sat( ccirc::comparator_circuit const& c )
{
  uint64_t count = 0;
  for ( uint64_t i = 0; i < ( uint64_t( 1 ) << c.num_vars ); ++i )
    count += naive_evaluate( c, i ) ? 1 : 0;
  return count;
}

/* the slice of f's truth table selected by rho: entry z is f(merge(rho, z)) */
inline std::vector<uint8_t> naive_slice( ccirc::comparator_circuit const& c, ccirc::restriction const& rho )
{
  std::vector<uint8_t> bits( uint64_t( 1 ) << rho.num_free() );
  for ( uint64_t z = 0; z < bits.size(); ++z )
    bits[z] = naive_evaluate( c, rho.merge_bits( z ) ) ? 1 : 0;
  return bits;
}

/* transcription of the two uselessness clauses: collect every in-value pair
 * the gate sees and test set membership directly */
struct naive_gate_class
{
  bool useful;
  bool type1_applies;
  bool type2_applies;
};

inline naive_gate_class naive_classify( ccirc::comparator_circuit const& c, uint32_t gate_index )
{
  std::set<std::pair<bool, bool>> pairs;
  for ( uint64_t input = 0; input < ( uint64_t( 1 ) << c.num_vars ); ++input )
  {
    std::vector<bool> value;
    for ( auto const& lit : c.wires )
    {
      bool b = ( ( input >> ( lit.var - 1 ) ) & 1u ) != 0;
      value.push_back( lit.negated ? !b : b );
    }
    for ( uint32_t gi = 0; gi < gate_index; ++gi )
    {
      bool const u = value[c.gates[gi].and_wire - 1];
      bool const w = value[c.gates[gi].or_wire - 1];
      value[c.gates[gi].and_wire - 1] = u && w;
      value[c.gates[gi].or_wire - 1] = u || w;
    }
    pairs.insert( { value[c.gates[gate_index].and_wire - 1], value[c.gates[gate_index].or_wire - 1] } );
  }
  bool const type1 = !pairs.count( { true, false } );
  bool const type2 = !pairs.count( { false, true } );
  return { !type1 && !type2, type1, type2 };
}

/* codeword table built with naive power sums instead of Horner */
inline std::vector<uint8_t> naive_codeword( uint32_t n, uint32_t k, std::vector<uint8_t> const& x )
{
  uint32_t const m = k / 2;
  ccirc::gf2m field( m );
  uint32_t const degree = ( n + m - 1 ) / m;
  std::vector<uint32_t> coeffs( degree, 0 );
  for ( uint32_t i = 0; i < n; ++i )
  {
    if ( x[i] )
      coeffs[i / m] |= 1u << ( i % m );
  }
  std::vector<uint8_t> bits( uint64_t( 1 ) << k );
  for ( uint32_t z1 = 0; z1 < ( 1u << m ); ++z1 )
  {
    uint32_t e = 0;
    for ( uint32_t j = 0; j < degree; ++j )
      e ^= field.mul( coeffs[j], field.pow( z1, j ) );
    for ( uint32_t z2 = 0; z2 < ( 1u << m ); ++z2 )
    {
      uint32_t parity = 0;
      for ( uint32_t b = 0; b < m; ++b )
        parity ^= ( ( e >> b ) & 1u ) & ( ( z2 >> b ) & 1u );
      bits[( uint64_t( z2 ) << m ) | z1] = static_cast<uint8_t>( parity );
    }
  }
  return bits;
}

} // namespace oracles
