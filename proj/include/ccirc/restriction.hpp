/*!
  \file restriction.hpp
  \brief Restrictions ρ ∈ {0,1,*}^n and their application to comparator circuits.

  Applying a restriction eliminates every wire labelled by a fixed variable.
  A single left-to-right pass keeps a constant marker per wire; a gate with a
  constant operand either acts as the identity on its inputs (dropped) or as a
  swap (dropped, with the two wire names exchanged in everything downstream).
*/

#pragma once

#include "circuit.hpp"
#include "common.hpp"

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ccirc
{

/*! \brief Characteristic vector of unrestricted coordinates: bits[i] = 1 means variable i+1 is free. */
struct selection
{
  std::vector<uint8_t> bits;

  uint32_t size() const { return static_cast<uint32_t>( bits.size() ); }

  uint32_t count_free() const
  {
    uint32_t total = 0;
    for ( auto b : bits )
      total += b ? 1 : 0;
    return total;
  }
};

enum class rvalue : uint8_t
{
  zero = 0,
  one = 1,
  star = 2
};

class restriction
{
public:
  explicit restriction( uint32_t num_vars ) : values_( num_vars, rvalue::star ) {}

  /*! \brief Builds ρ from the (σ, β) pair: free where σ is 1, else fixed to β. */
  static restriction from_sigma_beta( selection const& sigma, std::vector<uint8_t> const& beta )
  {
    if ( sigma.bits.size() != beta.size() )
      throw validation_error( "restriction: selection and value vector lengths differ" );
    restriction rho( sigma.size() );
    for ( uint32_t i = 0; i < sigma.size(); ++i )
    {
      if ( !sigma.bits[i] )
        rho.set( i + 1, beta[i] ? rvalue::one : rvalue::zero );
    }
    return rho;
  }

  uint32_t num_vars() const { return static_cast<uint32_t>( values_.size() ); }

  rvalue at( uint32_t var ) const { return values_[var - 1]; }

  void set( uint32_t var, rvalue v ) { values_[var - 1] = v; }

  bool is_free( uint32_t var ) const { return values_[var - 1] == rvalue::star; }

  uint32_t num_free() const
  {
    uint32_t total = 0;
    for ( auto v : values_ )
      total += v == rvalue::star ? 1 : 0;
    return total;
  }

  /*! \brief Free variables in ascending order; position j corresponds to live variable j+1. */
  std::vector<uint32_t> free_vars() const
  {
    std::vector<uint32_t> vars;
    for ( uint32_t v = 1; v <= num_vars(); ++v )
    {
      if ( is_free( v ) )
        vars.push_back( v );
    }
    return vars;
  }

  selection sigma() const
  {
    selection s;
    s.bits.resize( num_vars() );
    for ( uint32_t i = 0; i < num_vars(); ++i )
      s.bits[i] = values_[i] == rvalue::star ? 1 : 0;
    return s;
  }

  /*! \brief Fills the * positions with z (in variable order) and returns the full assignment. */
  std::vector<uint8_t> merge( std::vector<uint8_t> const& z ) const
  {
    if ( z.size() != num_free() )
      throw validation_error( "merge: assignment length does not match number of free variables" );
    std::vector<uint8_t> full( num_vars() );
    size_t zi = 0;
    for ( uint32_t i = 0; i < num_vars(); ++i )
    {
      if ( values_[i] == rvalue::star )
        full[i] = z[zi++];
      else
        full[i] = values_[i] == rvalue::one ? 1 : 0;
    }
    return full;
  }

  /*! \brief Packed variant of merge: bit j of z fills the j-th free variable. */
  uint64_t merge_bits( uint64_t z ) const
  {
    uint64_t full = 0;
    uint32_t zi = 0;
    for ( uint32_t i = 0; i < num_vars(); ++i )
    {
      if ( values_[i] == rvalue::star )
        full |= ( ( z >> zi++ ) & 1u ) << i;
      else if ( values_[i] == rvalue::one )
        full |= uint64_t( 1 ) << i;
    }
    return full;
  }

  bool operator==( restriction const& other ) const = default;

private:
  std::vector<rvalue> values_;
};

/*! \brief Result of applying a restriction: a constant, or a circuit over the live variables. */
struct restricted_result
{
  bool constant{ false };
  bool constant_value{ false };
  comparator_circuit circuit;
  std::vector<uint32_t> wire_map; /* new wire index (0-based position) -> original wire index (1-based) */
  std::vector<uint32_t> var_map;  /* new variable (0-based position) -> original variable (1-based) */

  bool is_constant() const { return constant; }
};

/*! \brief Restricts a circuit; live variables are renumbered 1..q in ascending original order.
 *
 * Semantics: for every assignment z to the live variables,
 * evaluate(result, z) == evaluate(circuit, merge(ρ, z)).
 */
inline restricted_result apply_restriction( comparator_circuit const& c, restriction const& rho )
{
  validate( c );
  if ( rho.num_vars() != c.num_vars )
    throw validation_error( "apply_restriction: restriction length does not match variable count" );

  uint32_t const nw = c.num_wires();
  std::vector<int8_t> marker( nw, -1 ); /* -1 live, 0/1 constant */
  for ( uint32_t w = 0; w < nw; ++w )
  {
    rvalue rv = rho.at( c.wires[w].var );
    if ( rv != rvalue::star )
    {
      uint8_t b = rv == rvalue::one ? 1 : 0;
      marker[w] = static_cast<int8_t>( c.wires[w].negated ? b ^ 1u : b );
    }
  }

  std::vector<gate> pending( c.gates );
  std::vector<gate> kept;
  kept.reserve( pending.size() );
  uint32_t out = c.output;

  auto swap_refs = [&]( size_t from, uint32_t a, uint32_t b ) {
    for ( size_t j = from; j < pending.size(); ++j )
    {
      if ( pending[j].and_wire == a )
        pending[j].and_wire = b;
      else if ( pending[j].and_wire == b )
        pending[j].and_wire = a;
      if ( pending[j].or_wire == a )
        pending[j].or_wire = b;
      else if ( pending[j].or_wire == b )
        pending[j].or_wire = a;
    }
    if ( out == a )
      out = b;
    else if ( out == b )
      out = a;
  };

  for ( size_t i = 0; i < pending.size(); ++i )
  {
    gate g = pending[i];
    int8_t ca = marker[g.and_wire - 1];
    int8_t cb = marker[g.or_wire - 1];
    if ( ca >= 0 && cb >= 0 )
    {
      marker[g.and_wire - 1] = static_cast<int8_t>( ca & cb );
      marker[g.or_wire - 1] = static_cast<int8_t>( ca | cb );
    }
    else if ( ca == 0 || cb == 1 )
    {
      /* identity on both inputs: just drop */
    }
    else if ( ca == 1 || cb == 0 )
    {
      /* swap: downstream reads of one wire must go to the other */
      swap_refs( i + 1, g.and_wire, g.or_wire );
    }
    else
    {
      kept.push_back( g );
    }
  }

  restricted_result res;
  if ( marker[out - 1] >= 0 )
  {
    res.constant = true;
    res.constant_value = marker[out - 1] != 0;
    return res;
  }

  /* constants only ever sit on wires whose label variable was fixed */
  for ( uint32_t w = 0; w < nw; ++w )
    assert( ( marker[w] >= 0 ) == !rho.is_free( c.wires[w].var ) );

  std::vector<uint32_t> new_var_of( c.num_vars + 1, 0 );
  for ( auto v : rho.free_vars() )
  {
    res.var_map.push_back( v );
    new_var_of[v] = static_cast<uint32_t>( res.var_map.size() );
  }

  std::vector<uint32_t> new_wire_of( nw + 1, 0 );
  res.circuit.num_vars = static_cast<uint32_t>( res.var_map.size() );
  for ( uint32_t w = 0; w < nw; ++w )
  {
    if ( marker[w] < 0 )
    {
      res.wire_map.push_back( w + 1 );
      new_wire_of[w + 1] = static_cast<uint32_t>( res.wire_map.size() );
      res.circuit.wires.push_back( { new_var_of[c.wires[w].var], c.wires[w].negated } );
    }
  }
  for ( auto const& g : kept )
  {
    assert( new_wire_of[g.and_wire] != 0 && new_wire_of[g.or_wire] != 0 );
    res.circuit.gates.push_back( { new_wire_of[g.and_wire], new_wire_of[g.or_wire] } );
  }
  res.circuit.output = new_wire_of[out];
  assert( res.circuit.output != 0 );
  return res;
}

} // namespace ccirc
