#include <catch2/catch_amalgamated.hpp>

#include <ccirc/restriction.hpp>
#include <ccirc/truth_table.hpp>

#include "oracles.hpp"

#include <random>

using namespace ccirc;

namespace
{

restriction random_restriction( uint32_t n, std::mt19937_64& rng )
{
  restriction rho( n );
  for ( uint32_t v = 1; v <= n; ++v )
  {
    switch ( rng() % 3 )
    {
    case 0:
      rho.set( v, rvalue::zero );
      break;
    case 1:
      rho.set( v, rvalue::one );
      break;
    default:
      break; /* stays free */
    }
  }
  return rho;
}

} // namespace

TEST_CASE( "merge fills the free positions in variable order" )
{
  restriction all_free( 3 );
  CHECK( all_free.merge( { 1, 0, 1 } ) == std::vector<uint8_t>{ 1, 0, 1 } );

  restriction total( 2 );
  total.set( 1, rvalue::one );
  total.set( 2, rvalue::zero );
  CHECK( total.merge( {} ) == std::vector<uint8_t>{ 1, 0 } );

  restriction mixed( 3 );
  mixed.set( 2, rvalue::zero );
  CHECK( mixed.merge( { 1, 1 } ) == std::vector<uint8_t>{ 1, 0, 1 } );
  CHECK( mixed.merge_bits( 0b11 ) == 0b101u );

  CHECK_THROWS_AS( mixed.merge( { 1 } ), validation_error );
}

TEST_CASE( "sigma/beta view agrees with the assignment view" )
{
  selection sigma{ { 1, 0, 1, 0 } };
  auto rho = restriction::from_sigma_beta( sigma, { 0, 1, 0, 0 } );
  CHECK( rho.is_free( 1 ) );
  CHECK( rho.at( 2 ) == rvalue::one );
  CHECK( rho.is_free( 3 ) );
  CHECK( rho.at( 4 ) == rvalue::zero );
  CHECK( rho.sigma().bits == sigma.bits );
  CHECK( rho.num_free() == 2 );
}

TEST_CASE( "empty restriction returns the circuit unchanged" )
{
  auto c = parity_witness();
  auto res = apply_restriction( c, restriction( 2 ) );
  REQUIRE( !res.is_constant() );
  CHECK( res.circuit == c );
  CHECK( res.wire_map == std::vector<uint32_t>{ 1, 2, 3, 4 } );
  CHECK( res.var_map == std::vector<uint32_t>{ 1, 2 } );
}

TEST_CASE( "total restriction yields the evaluated constant" )
{
  auto c = parity_witness();
  for ( uint64_t bits = 0; bits < 4; ++bits )
  {
    restriction rho( 2 );
    rho.set( 1, ( bits & 1 ) ? rvalue::one : rvalue::zero );
    rho.set( 2, ( bits & 2 ) ? rvalue::one : rvalue::zero );
    auto res = apply_restriction( c, rho );
    REQUIRE( res.is_constant() );
    CHECK( res.constant_value == evaluate( c, bits ) );
  }
}

TEST_CASE( "restricted truth table equals the slice of the original" )
{
  std::mt19937_64 rng( 13 );
  for ( int inst = 0; inst < 200; ++inst )
  {
    uint32_t n = 1 + static_cast<uint32_t>( rng() % 10 );
    auto c = oracles::random_test_circuit( n, 1 + rng() % 8, rng() % 25, rng() );
    auto rho = random_restriction( n, rng );
    auto res = apply_restriction( c, rho );
    auto slice = oracles::naive_slice( c, rho );
    if ( res.is_constant() )
    {
      for ( auto b : slice )
        REQUIRE( ( b != 0 ) == res.constant_value );
    }
    else
    {
      REQUIRE( res.circuit.num_vars == rho.num_free() );
      auto tt = truth_table_of( res.circuit );
      REQUIRE( tt.size_bits() == slice.size() );
      for ( uint64_t z = 0; z < slice.size(); ++z )
        REQUIRE( tt.bit( z ) == ( slice[z] != 0 ) );
    }
  }
}

TEST_CASE( "restriction output is structurally clean" )
{
  std::mt19937_64 rng( 99 );
  for ( int inst = 0; inst < 100; ++inst )
  {
    uint32_t n = 2 + static_cast<uint32_t>( rng() % 8 );
    auto c = random_circuit( n, 2 + rng() % 7, rng() % 20, rng() );
    auto rho = random_restriction( n, rng );
    auto res = apply_restriction( c, rho );
    if ( res.is_constant() )
      continue;

    /* no wire labelled by a fixed variable survives */
    uint32_t live_wires = 0;
    for ( auto const& lit : c.wires )
      live_wires += rho.is_free( lit.var ) ? 1 : 0;
    REQUIRE( res.circuit.num_wires() == live_wires );
    for ( size_t w = 0; w < res.circuit.wires.size(); ++w )
    {
      auto orig = c.wires[res.wire_map[w] - 1];
      REQUIRE( rho.is_free( orig.var ) );
      REQUIRE( res.var_map[res.circuit.wires[w].var - 1] == orig.var );
      REQUIRE( res.circuit.wires[w].negated == orig.negated );
    }

    /* gate count never increases, relative wire order is preserved */
    REQUIRE( res.circuit.num_gates() <= c.num_gates() );
    for ( size_t w = 1; w < res.wire_map.size(); ++w )
      REQUIRE( res.wire_map[w - 1] < res.wire_map[w] );
    validate( res.circuit );
  }
}

TEST_CASE( "length mismatch is rejected" )
{
  CHECK_THROWS_AS( apply_restriction( parity_witness(), restriction( 3 ) ), validation_error );
}
