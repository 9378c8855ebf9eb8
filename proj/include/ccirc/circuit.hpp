/*!
  \file circuit.hpp
  \brief Comparator-circuit IR, validation, evaluation and random instance generation.

  A comparator circuit is a list of wires, each labelled by an input literal,
  an ordered sequence of gates, and a designated output wire.  A gate is an
  ordered pair of wires: the first receives the conjunction of the two wire
  values, the second the disjunction.  Wire and variable indices are 1-based.
*/

#pragma once

#include "common.hpp"

#include <cassert>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ccirc
{

/*! \brief A variable or its negation. Variables are 1-based. */
struct literal
{
  uint32_t var{ 1 };
  bool negated{ false };

  bool operator==( literal const& other ) const = default;
};

/*! \brief Ordered wire pair: \c and_wire receives u∧w, \c or_wire receives u∨w. */
struct gate
{
  uint32_t and_wire{ 0 };
  uint32_t or_wire{ 0 };

  bool operator==( gate const& other ) const = default;
};

struct comparator_circuit
{
  uint32_t num_vars{ 0 };
  std::vector<literal> wires;
  std::vector<gate> gates;
  uint32_t output{ 1 }; /* 1-based wire index, read after all gates */

  uint32_t num_wires() const { return static_cast<uint32_t>( wires.size() ); }
  uint32_t num_gates() const { return static_cast<uint32_t>( gates.size() ); }

  bool operator==( comparator_circuit const& other ) const = default;
};

/*! \brief Checks all structural invariants; throws validation_error on the first violation. */
inline void validate( comparator_circuit const& c )
{
  if ( c.num_vars == 0 )
    throw validation_error( "circuit must have at least one variable" );
  if ( c.wires.empty() )
    throw validation_error( "circuit must have at least one wire" );
  for ( auto const& l : c.wires )
  {
    if ( l.var == 0 || l.var > c.num_vars )
      throw validation_error( "wire label variable " + std::to_string( l.var ) + " out of range" );
  }
  for ( auto const& g : c.gates )
  {
    if ( g.and_wire == 0 || g.and_wire > c.num_wires() || g.or_wire == 0 || g.or_wire > c.num_wires() )
      throw validation_error( "gate wire index out of range" );
    if ( g.and_wire == g.or_wire )
      throw validation_error( "gate connects a wire to itself" );
  }
  if ( c.output == 0 || c.output > c.num_wires() )
    throw validation_error( "output wire index out of range" );
}

/* Input convention: input index i assigns to variable v the bit (i >> (v-1)) & 1,
 * i.e. variable 1 is the least-significant bit of the truth-table index. */

inline bool evaluate( comparator_circuit const& c, uint64_t input )
{
  if ( c.num_vars > 64 )
    throw guard_error( "evaluate: more than 64 variables" );
  std::vector<uint8_t> v( c.wires.size() );
  for ( size_t w = 0; w < c.wires.size(); ++w )
  {
    uint8_t b = static_cast<uint8_t>( ( input >> ( c.wires[w].var - 1 ) ) & 1u );
    v[w] = c.wires[w].negated ? b ^ 1u : b;
  }
  for ( auto const& g : c.gates )
  {
    uint8_t u = v[g.and_wire - 1];
    uint8_t w = v[g.or_wire - 1];
    v[g.and_wire - 1] = u & w;
    v[g.or_wire - 1] = u | w;
  }
  return v[c.output - 1] != 0;
}

/*! \brief Evaluates on an explicit assignment; \c input[i] is the value of variable i+1. */
inline bool evaluate( comparator_circuit const& c, std::vector<uint8_t> const& input )
{
  if ( input.size() != c.num_vars )
    throw validation_error( "evaluate: input length does not match variable count" );
  uint64_t bits = 0;
  for ( size_t i = 0; i < input.size(); ++i )
  {
    if ( input[i] )
      bits |= uint64_t( 1 ) << i;
  }
  return evaluate( c, bits );
}

/* --- word-parallel simulation ------------------------------------------- */
/* Inputs are processed in blocks of 64: bit j of a word corresponds to input
 * index 64*block + j.  Variables 1..6 cycle inside a word; higher variables
 * are constant per block. */

inline constexpr uint64_t sim_projections[6] = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };

inline uint64_t sim_var_word( uint32_t var, uint64_t block )
{
  if ( var <= 6 )
    return sim_projections[var - 1];
  return ( ( block >> ( var - 7 ) ) & 1u ) ? ~uint64_t( 0 ) : uint64_t( 0 );
}

/*! \brief Number of 64-input blocks covering all 2^n inputs. */
inline uint64_t sim_num_blocks( uint32_t num_vars )
{
  return num_vars <= 6 ? 1 : uint64_t( 1 ) << ( num_vars - 6 );
}

/*! \brief Mask of valid input positions within a block (partial only when n < 6). */
inline uint64_t sim_block_mask( uint32_t num_vars )
{
  if ( num_vars >= 6 )
    return ~uint64_t( 0 );
  return ( uint64_t( 1 ) << ( uint64_t( 1 ) << num_vars ) ) - 1;
}

/*! \brief Simulates one 64-input block; \c words receives one word per wire. */
inline void simulate_block( comparator_circuit const& c, uint64_t block, std::vector<uint64_t>& words )
{
  words.resize( c.wires.size() );
  for ( size_t w = 0; w < c.wires.size(); ++w )
  {
    uint64_t x = sim_var_word( c.wires[w].var, block );
    words[w] = c.wires[w].negated ? ~x : x;
  }
  for ( auto const& g : c.gates )
  {
    uint64_t u = words[g.and_wire - 1];
    uint64_t w = words[g.or_wire - 1];
    words[g.and_wire - 1] = u & w;
    words[g.or_wire - 1] = u | w;
  }
}

/* --- random circuits ----------------------------------------------------- */

/* std::uniform_int_distribution is not portable across standard libraries;
 * bounded draws below use plain modulo so that a seed pins the circuit
 * bit-exactly everywhere. */
inline uint64_t bounded_draw( std::mt19937_64& rng, uint64_t bound )
{
  assert( bound > 0 );
  return rng() % bound;
}

/*! \brief Deterministic random circuit: uniform labels, uniform ordered distinct gate pairs. */
inline comparator_circuit random_circuit( uint32_t num_vars, uint32_t num_wires, uint32_t num_gates,
                                          uint64_t seed )
{
  if ( num_vars == 0 )
    throw validation_error( "random_circuit: need at least one variable" );
  if ( num_wires == 0 )
    throw validation_error( "random_circuit: need at least one wire" );
  if ( num_gates > 0 && num_wires < 2 )
    throw validation_error( "random_circuit: gates require at least two wires" );

  std::mt19937_64 rng( seed );
  comparator_circuit c;
  c.num_vars = num_vars;
  c.wires.reserve( num_wires );
  for ( uint32_t w = 0; w < num_wires; ++w )
  {
    uint64_t pick = bounded_draw( rng, 2ull * num_vars );
    c.wires.push_back( { static_cast<uint32_t>( pick / 2 ) + 1, ( pick & 1 ) != 0 } );
  }
  c.gates.reserve( num_gates );
  for ( uint32_t g = 0; g < num_gates; ++g )
  {
    uint32_t a = static_cast<uint32_t>( bounded_draw( rng, num_wires ) ) + 1;
    uint32_t b = static_cast<uint32_t>( bounded_draw( rng, num_wires - 1 ) ) + 1;
    if ( b >= a )
      ++b;
    c.gates.push_back( { a, b } );
  }
  c.output = static_cast<uint32_t>( bounded_draw( rng, num_wires ) ) + 1;
  return c;
}

/*! \brief The repository's 4-wire parity witness: (x1∨x2)∧(¬x1∨¬x2) on wire 2. */
inline comparator_circuit parity_witness()
{
  comparator_circuit c;
  c.num_vars = 2;
  c.wires = { { 1, false }, { 2, false }, { 1, true }, { 2, true } };
  c.gates = { { 1, 2 }, { 3, 4 }, { 2, 4 } };
  c.output = 2;
  return c;
}

} // namespace ccirc
