#include <catch2/catch_amalgamated.hpp>

#include <ccirc/circuit.hpp>
#include <ccirc/truth_table.hpp>

#include "oracles.hpp"

using namespace ccirc;

TEST_CASE( "single-wire identity circuit" )
{
  comparator_circuit c;
  c.num_vars = 1;
  c.wires = { { 1, false } };
  c.output = 1;
  CHECK( evaluate( c, std::vector<uint8_t>{ 1 } ) );
  CHECK( !evaluate( c, std::vector<uint8_t>{ 0 } ) );
}

TEST_CASE( "gate semantics: and on the first wire, or on the second" )
{
  comparator_circuit c;
  c.num_vars = 2;
  c.wires = { { 1, false }, { 2, false } };
  c.gates = { { 1, 2 } };
  c.output = 1;
  CHECK( !evaluate( c, std::vector<uint8_t>{ 1, 0 } ) );
  c.output = 2;
  CHECK( evaluate( c, std::vector<uint8_t>{ 1, 0 } ) );
}

TEST_CASE( "parity witness computes xor" )
{
  auto c = parity_witness();
  auto tt = truth_table_of( c );
  REQUIRE( tt.size_bits() == 4 );
  CHECK( !tt.bit( 0 ) );
  CHECK( tt.bit( 1 ) );
  CHECK( tt.bit( 2 ) );
  CHECK( !tt.bit( 3 ) );
  CHECK( tt.to_hex() == "6" );

  for ( uint64_t i = 0; i < 4; ++i )
    CHECK( tt.bit( i ) == oracles::naive_evaluate( c, i ) );
}

TEST_CASE( "negated single-wire truth table" )
{
  comparator_circuit c;
  c.num_vars = 1;
  c.wires = { { 1, true } };
  c.output = 1;
  auto tt = truth_table_of( c );
  CHECK( tt.bit( 0 ) );
  CHECK( !tt.bit( 1 ) );
  CHECK( tt.to_hex() == "8" );
}

TEST_CASE( "contradiction wire pair is constant zero" )
{
  comparator_circuit c;
  c.num_vars = 1;
  c.wires = { { 1, false }, { 1, true } };
  c.gates = { { 1, 2 } };
  c.output = 1;
  auto tt = truth_table_of( c );
  CHECK( tt.count_ones() == 0 );
}

TEST_CASE( "evaluation agrees with the scalar oracle on random circuits" )
{
  for ( uint64_t seed = 0; seed < 40; ++seed )
  {
    auto c = oracles::random_test_circuit( 2 + seed % 7, 1 + seed % 6, seed % 25, seed );
    validate( c );
    auto tt = truth_table_of( c );
    auto ref = oracles::naive_truth_table( c );
    for ( uint64_t i = 0; i < ref.size(); ++i )
      REQUIRE( tt.bit( i ) == ( ref[i] != 0 ) );
  }
}

TEST_CASE( "random circuits are deterministic per seed" )
{
  auto a = random_circuit( 8, 6, 20, 1 );
  auto b = random_circuit( 8, 6, 20, 1 );
  CHECK( a == b );
  CHECK( !( a == random_circuit( 8, 6, 20, 2 ) ) );

  auto tiny = random_circuit( 2, 1, 0, 7 );
  CHECK( tiny.num_wires() == 1 );
  CHECK( tiny.num_gates() == 0 );
}

TEST_CASE( "random circuits validate and evaluate everywhere" )
{
  auto c = random_circuit( 8, 6, 20, 1 );
  validate( c );
  for ( uint64_t i = 0; i < 256; ++i )
    (void)evaluate( c, i );
}

TEST_CASE( "negation-free circuits are monotone" )
{
  for ( uint64_t seed = 0; seed < 30; ++seed )
  {
    auto c = oracles::random_test_circuit( 2 + seed % 9, 1 + seed % 7, seed % 20, 1000 + seed );
    for ( auto& w : c.wires )
      w.negated = false;
    CHECK( is_monotone( truth_table_of( c ) ) );
  }
}

TEST_CASE( "truth table hex round trip" )
{
  for ( uint64_t seed = 0; seed < 20; ++seed )
  {
    auto c = random_circuit( 1 + seed % 9, 2 + seed % 5, seed % 15, 77 * seed + 3 );
    auto tt = truth_table_of( c );
    CHECK( truth_table::from_hex( tt.to_hex(), tt.num_vars() ) == tt );
  }
  CHECK_THROWS_AS( truth_table::from_hex( "123", 2 ), validation_error );
  CHECK_THROWS_AS( truth_table::from_hex( "g", 2 ), validation_error );
  /* padding bits beyond 2^n must be zero */
  CHECK_THROWS_AS( truth_table::from_hex( "1", 1 ), validation_error );
}

TEST_CASE( "validation rejects broken circuits" )
{
  comparator_circuit c;
  c.num_vars = 2;
  c.wires = { { 1, false }, { 2, false } };
  c.output = 1;

  auto bad = c;
  bad.gates = { { 1, 1 } };
  CHECK_THROWS_AS( validate( bad ), validation_error );

  bad = c;
  bad.gates = { { 1, 3 } };
  CHECK_THROWS_AS( validate( bad ), validation_error );

  bad = c;
  bad.output = 3;
  CHECK_THROWS_AS( validate( bad ), validation_error );

  bad = c;
  bad.wires[0].var = 3;
  CHECK_THROWS_AS( validate( bad ), validation_error );

  bad = c;
  bad.wires.clear();
  CHECK_THROWS_AS( validate( bad ), validation_error );
}

TEST_CASE( "truth table guard" )
{
  CHECK_THROWS_AS( truth_table( 25 ), guard_error );
  comparator_circuit c;
  c.num_vars = 25;
  c.wires = { { 1, false } };
  c.output = 1;
  CHECK_THROWS_AS( truth_table_of( c ), guard_error );
}
