/*!
  \file simplify.hpp
  \brief Useless-gate detection and removal.

  A gate is useless when, over all inputs, its in-value pair never hits (1,0)
  (TYPE-1: the gate acts as the identity) or never hits (0,1) (TYPE-2: the
  gate acts as a swap).  TYPE-1 gates are deleted outright; deleting a TYPE-2
  gate exchanges its two wires in every later gate and in the output choice.
  Repeating this drives any circuit to an all-useful form with at most
  ℓ(ℓ−1)/2 gates.
*/

#pragma once

#include "circuit.hpp"
#include "common.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ccirc
{

inline constexpr uint32_t simplify_max_vars = 20; /* uselessness needs a full 2^n sweep */

/*! \brief Which in-value pairs a gate sees over all inputs. */
struct gate_profile
{
  bool seen_01{ false };
  bool seen_10{ false };

  bool useful() const { return seen_01 && seen_10; }
};

enum class useless_type : uint8_t
{
  type1,
  type2
};

struct gate_class
{
  bool useful{ false };
  useless_type type{ useless_type::type1 };
};

/*! \brief Profiles every gate in one exhaustive sweep. */
inline std::vector<gate_profile> gate_profiles( comparator_circuit const& c )
{
  validate( c );
  if ( c.num_vars > simplify_max_vars )
    throw guard_error( "gate profiling limited to " + std::to_string( simplify_max_vars ) + " variables" );

  std::vector<gate_profile> profiles( c.gates.size() );
  std::vector<uint64_t> words( c.wires.size() );
  uint64_t mask = sim_block_mask( c.num_vars );
  for ( uint64_t b = 0; b < sim_num_blocks( c.num_vars ); ++b )
  {
    for ( size_t w = 0; w < c.wires.size(); ++w )
    {
      uint64_t x = sim_var_word( c.wires[w].var, b );
      words[w] = c.wires[w].negated ? ~x : x;
    }
    for ( size_t i = 0; i < c.gates.size(); ++i )
    {
      uint64_t u = words[c.gates[i].and_wire - 1];
      uint64_t w = words[c.gates[i].or_wire - 1];
      if ( ( ~u & w & mask ) != 0 )
        profiles[i].seen_01 = true;
      if ( ( u & ~w & mask ) != 0 )
        profiles[i].seen_10 = true;
      words[c.gates[i].and_wire - 1] = u & w;
      words[c.gates[i].or_wire - 1] = u | w;
    }
  }
  return profiles;
}

inline gate_class classify_profile( gate_profile const& p )
{
  if ( p.useful() )
    return { true, useless_type::type1 };
  /* when neither pair occurs both definitions apply; TYPE-1 avoids re-wiring */
  if ( !p.seen_10 )
    return { false, useless_type::type1 };
  return { false, useless_type::type2 };
}

/*! \brief Classifies one gate by exhaustive evaluation of the prefix before it. */
inline gate_class classify_gate( comparator_circuit const& c, uint32_t gate_index )
{
  if ( gate_index >= c.num_gates() )
    throw validation_error( "classify_gate: gate index out of range" );
  return classify_profile( gate_profiles( c )[gate_index] );
}

/*! \brief Removes a useless gate of the stated type (Prop.-style removal / re-wiring). */
inline comparator_circuit remove_gate( comparator_circuit const& c, uint32_t gate_index, useless_type type )
{
  if ( gate_index >= c.num_gates() )
    throw validation_error( "remove_gate: gate index out of range" );
  comparator_circuit r( c );
  gate const removed = r.gates[gate_index];
  r.gates.erase( r.gates.begin() + gate_index );
  if ( type == useless_type::type2 )
  {
    uint32_t const a = removed.and_wire;
    uint32_t const b = removed.or_wire;
    for ( size_t j = gate_index; j < r.gates.size(); ++j )
    {
      if ( r.gates[j].and_wire == a )
        r.gates[j].and_wire = b;
      else if ( r.gates[j].and_wire == b )
        r.gates[j].and_wire = a;
      if ( r.gates[j].or_wire == a )
        r.gates[j].or_wire = b;
      else if ( r.gates[j].or_wire == b )
        r.gates[j].or_wire = a;
    }
    if ( r.output == a )
      r.output = b;
    else if ( r.output == b )
      r.output = a;
  }
  return r;
}

/*! \brief Removes the leftmost useless gate until every gate is useful.
 *
 * The result computes the same function over the same wires and has at most
 * ℓ(ℓ−1)/2 gates, ℓ being the wire count.
 */
inline comparator_circuit simplify_full( comparator_circuit const& c )
{
  comparator_circuit cur( c );
  uint32_t removals = 0;
  for ( ;; )
  {
    auto profiles = gate_profiles( cur );
    bool removed = false;
    for ( uint32_t i = 0; i < profiles.size(); ++i )
    {
      auto cls = classify_profile( profiles[i] );
      if ( !cls.useful )
      {
        cur = remove_gate( cur, i, cls.type );
        removed = true;
        ++removals;
        break;
      }
    }
    if ( !removed )
      break;
  }
  assert( removals <= c.num_gates() );
  (void)removals;
  assert( cur.num_gates() <= uint64_t( cur.num_wires() ) * ( cur.num_wires() - 1 ) / 2 );
  return cur;
}

} // namespace ccirc
