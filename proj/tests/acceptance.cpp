/* Acceptance suite: one line per criterion, nonzero exit if any fails.
 *
 * Usage: ccirc_acceptance <path-to-cli-binary> <path-to-data-dir>
 */

#include <ccirc/ccirc.hpp>

#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

using namespace ccirc;

namespace
{

std::string cli_path;
std::string data_dir;

double seconds_since( std::chrono::steady_clock::time_point t0 )
{
  return std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
}

std::string read_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw validation_error( "cannot open '" + path + "'" );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct cli_run
{
  int exit_code;
  std::string out;
};

cli_run run_cli( std::string const& args )
{
  std::string cmd = cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen( cmd.c_str(), "r" );
  if ( !pipe )
    throw std::runtime_error( "popen failed" );
  std::string out;
  std::array<char, 512> buf{};
  size_t got;
  while ( ( got = fread( buf.data(), 1, buf.size(), pipe ) ) > 0 )
    out.append( buf.data(), got );
  int status = pclose( pipe );
  return { WEXITSTATUS( status ), out };
}

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
      break;
    }
  }
  return rho;
}

/* --- criteria ------------------------------------------------------------ */

bool sat_oracle_equality( std::string& detail )
{
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng( 101 );
  for ( int inst = 0; inst < 200; ++inst )
  {
    uint32_t n = 4 + static_cast<uint32_t>( rng() % 9 ); /* 4..12 */
    auto c = oracles::random_test_circuit( n, 1 + rng() % 8, rng() % 31, rng() );
    uint64_t expected = count_sat_brute( c );
    for ( uint32_t k = 2; k <= 4; ++k )
    {
      auto rep = count_sat_memo( c, k );
      if ( rep.count != expected )
      {
        detail = "instance " + std::to_string( inst ) + " k=" + std::to_string( k ) + ": memo " +
                 std::to_string( rep.count ) + " vs brute " + std::to_string( expected );
        return false;
      }
    }
  }
  double elapsed = seconds_since( t0 );
  if ( elapsed >= 120.0 )
  {
    detail = "took " + std::to_string( elapsed ) + "s (budget 120s)";
    return false;
  }
  return true;
}

bool restriction_soundness( std::string& detail )
{
  std::mt19937_64 rng( 102 );
  for ( int inst = 0; inst < 100; ++inst )
  {
    uint32_t n = 1 + static_cast<uint32_t>( rng() % 10 );
    auto c = oracles::random_test_circuit( n, 1 + rng() % 8, rng() % 26, rng() );
    for ( int rep = 0; rep < 100; ++rep )
    {
      auto rho = random_restriction( n, rng );
      auto res = apply_restriction( c, rho );
      auto slice = oracles::naive_slice( c, rho );
      if ( res.is_constant() )
      {
        for ( auto b : slice )
        {
          if ( ( b != 0 ) != res.constant_value )
          {
            detail = "constant result disagrees with slice";
            return false;
          }
        }
      }
      else
      {
        auto tt = truth_table_of( res.circuit );
        for ( uint64_t z = 0; z < slice.size(); ++z )
        {
          if ( tt.bit( z ) != ( slice[z] != 0 ) )
          {
            detail = "restricted table differs from slice at index " + std::to_string( z );
            return false;
          }
        }
        for ( auto const& lit : res.circuit.wires )
        {
          if ( !rho.is_free( res.var_map[lit.var - 1] ) )
          {
            detail = "fixed-variable wire survived";
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool simplification_bound( std::string& detail )
{
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng( 103 );
  for ( int inst = 0; inst < 100; ++inst )
  {
    uint32_t wires = 2 + static_cast<uint32_t>( rng() % 5 ); /* 2..6 */
    auto c = random_circuit( 6, wires, 1 + rng() % 30, rng() );
    auto s = simplify_full( c );
    if ( !( truth_table_of( s ) == truth_table_of( c ) ) )
    {
      detail = "simplification changed the function";
      return false;
    }
    if ( s.num_gates() > wires * ( wires - 1 ) / 2 )
    {
      detail = "gate count " + std::to_string( s.num_gates() ) + " above the bound for " +
               std::to_string( wires ) + " wires";
      return false;
    }
  }
  double elapsed = seconds_since( t0 );
  if ( elapsed >= 30.0 )
  {
    detail = "took " + std::to_string( elapsed ) + "s (budget 30s)";
    return false;
  }
  return true;
}

bool memo_tree_structure( std::string& detail )
{
  std::vector<wire_context> contexts = {
      { 1, { { 1, false } } },
      { 2, { { 1, false }, { 2, false } } },
      { 3, { { 1, false }, { 2, true }, { 3, false } } },
      { 4, { { 1, false }, { 2, false }, { 3, true }, { 4, false } } },
      { 3, { { 1, false }, { 1, true }, { 2, false }, { 3, true } } },
  };
  std::mt19937_64 rng( 104 );
  for ( auto const& ctx : contexts )
  {
    memo_tree eager( ctx, memo_tree::mode_t::eager );
    if ( eager.stats().max_depth > ctx.depth_bound() )
    {
      detail = "eager tree depth " + std::to_string( eager.stats().max_depth ) + " above " +
               std::to_string( ctx.depth_bound() );
      return false;
    }

    memo_tree lazy( ctx );
    uint32_t const l = ctx.num_wires();
    for ( int inst = 0; inst < 500; ++inst )
    {
      comparator_circuit c;
      c.num_vars = ctx.num_vars;
      c.wires = ctx.labels;
      uint32_t gates = static_cast<uint32_t>( rng() % 31 );
      for ( uint32_t g = 0; g < gates && l >= 2; ++g )
      {
        uint32_t a = static_cast<uint32_t>( rng() % l ) + 1;
        uint32_t b = static_cast<uint32_t>( rng() % ( l - 1 ) ) + 1;
        if ( b >= a )
          ++b;
        c.gates.push_back( { a, b } );
      }
      c.output = static_cast<uint32_t>( rng() % l ) + 1;
      auto res = lazy.lookup( c );
      if ( res.count != oracles::naive_count_sat( c ) )
      {
        detail = "lookup count mismatch";
        return false;
      }
    }
    if ( lazy.stats().max_depth > ctx.depth_bound() )
    {
      detail = "lazy tree depth above the bound";
      return false;
    }
  }
  return true;
}

bool parity_witness_reproduction( std::string& detail )
{
  auto c = parse_circuit( read_file( data_dir + "/parity4.cc" ) );
  if ( c.num_vars != 2 || c.num_wires() != 4 )
  {
    detail = "witness is not a 2-input, 4-wire circuit";
    return false;
  }
  auto tt = truth_table_of( c );
  if ( tt.bit( 0 ) || !tt.bit( 1 ) || !tt.bit( 2 ) || tt.bit( 3 ) )
  {
    detail = "witness truth table is not (0,1,1,0)";
    return false;
  }
  auto s = simplify_full( c );
  if ( s.num_gates() > 6 )
  {
    detail = "simplified witness has " + std::to_string( s.num_gates() ) + " gates";
    return false;
  }

  /* the 4-gate variant with the output on the third wire computes the same function */
  auto padded = parse_circuit( read_file( data_dir + "/parity4_padded.cc" ) );
  if ( padded.num_wires() != 4 || padded.num_gates() != 4 || padded.output != 3 )
  {
    detail = "padded variant has the wrong shape";
    return false;
  }
  if ( !( truth_table_of( padded ) == tt ) )
  {
    detail = "padded variant computes a different function";
    return false;
  }
  return true;
}

bool selection_statistics( std::string& detail )
{
  kwise_selection_sampler sampler{ 2, 4, 1, 8 };
  uint32_t const n = sampler.n;
  std::vector<uint64_t> ones( n, 0 );
  std::vector<std::vector<std::array<uint64_t, 4>>> joint(
      n, std::vector<std::array<uint64_t, 4>>( n, { 0, 0, 0, 0 } ) );
  for ( uint64_t seed = 0; seed < 256; ++seed )
  {
    auto s = sampler.sample( seed );
    for ( uint32_t i = 0; i < n; ++i )
    {
      ones[i] += s.bits[i];
      for ( uint32_t j = i + 1; j < n; ++j )
        ++joint[i][j][( s.bits[i] << 1 ) | s.bits[j]];
    }
  }
  for ( uint32_t i = 0; i < n; ++i )
  {
    if ( ones[i] != 128 )
    {
      detail = "marginal of coordinate " + std::to_string( i + 1 ) + " is " + std::to_string( ones[i] ) +
               "/256";
      return false;
    }
    for ( uint32_t j = i + 1; j < n; ++j )
    {
      for ( auto cnt : joint[i][j] )
      {
        if ( cnt != 64 )
        {
          detail = "pair (" + std::to_string( i + 1 ) + "," + std::to_string( j + 1 ) +
                   ") is not exactly independent";
          return false;
        }
      }
    }
  }

  /* i.i.d. mean surviving wires within 4 sigma / sqrt(T) of p·ℓ */
  auto c = random_circuit( 10, 8, 20, 777 );
  double const p = 0.5;
  uint64_t const trials = 10000;
  std::vector<uint32_t> per_var( c.num_vars + 1, 0 );
  for ( auto const& lit : c.wires )
    ++per_var[lit.var];
  uint64_t survived_total = 0;
  for ( uint64_t seed = 0; seed < trials; ++seed )
  {
    auto sel = sample_selection_random( c.num_vars, p, seed );
    for ( auto const& lit : c.wires )
      survived_total += sel.bits[lit.var - 1];
  }
  double variance = 0.0;
  for ( uint32_t v = 1; v <= c.num_vars; ++v )
    variance += static_cast<double>( per_var[v] ) * per_var[v] * p * ( 1 - p );
  double const mean = static_cast<double>( survived_total ) / static_cast<double>( trials );
  double const slack = 4.0 * std::sqrt( variance / static_cast<double>( trials ) );
  if ( std::abs( mean - p * c.num_wires() ) > slack )
  {
    detail = "mean " + std::to_string( mean ) + " outside " + std::to_string( p * c.num_wires() ) +
             " +- " + std::to_string( slack );
    return false;
  }
  return true;
}

comparator_circuit constant_circuit( uint32_t n, bool value, uint32_t free_var )
{
  comparator_circuit c;
  c.num_vars = n;
  c.wires = { { free_var, false }, { free_var, true } };
  c.gates = { { 1, 2 } };
  c.output = value ? 2 : 1;
  return c;
}

bool cube_combination( std::string& detail )
{
  std::mt19937_64 rng( 107 );
  for ( int inst = 0; inst < 50; ++inst )
  {
    uint32_t const n = 4 + static_cast<uint32_t>( rng() % 3 );
    auto c = random_circuit( n, 2 + rng() % 5, rng() % 16, rng() );
    uint32_t const q = 1 + static_cast<uint32_t>( rng() % 3 );

    std::vector<uint32_t> cube;
    while ( cube.size() < q )
    {
      uint32_t v = 1 + static_cast<uint32_t>( rng() % n );
      bool dup = false;
      for ( auto u : cube )
        dup |= u == v;
      if ( !dup )
        cube.push_back( v );
    }
    std::sort( cube.begin(), cube.end() );
    uint32_t spare = 1;
    while ( std::find( cube.begin(), cube.end(), spare ) != cube.end() )
      ++spare;

    std::vector<comparator_circuit> subs;
    uint32_t max_sub = 0;
    for ( uint64_t h = 0; h < ( uint64_t( 1 ) << q ); ++h )
    {
      restriction rho( n );
      for ( uint32_t t = 0; t < q; ++t )
        rho.set( cube[t], ( ( h >> t ) & 1u ) ? rvalue::one : rvalue::zero );
      auto res = apply_restriction( c, rho );
      comparator_circuit sub;
      if ( res.is_constant() )
      {
        sub = constant_circuit( n, res.constant_value, spare );
      }
      else
      {
        sub = res.circuit;
        sub.num_vars = n;
        for ( auto& w : sub.wires )
          w.var = res.var_map[w.var - 1];
      }
      max_sub = std::max( max_sub, sub.num_wires() );
      subs.push_back( std::move( sub ) );
    }

    auto combined = combine_over_cube( n, cube, subs );
    if ( !( truth_table_of( combined ) == truth_table_of( c ) ) )
    {
      detail = "combined circuit computes a different function";
      return false;
    }
    if ( combined.num_wires() > ( uint64_t( 1 ) << q ) * ( max_sub + q ) + 1 )
    {
      detail = "wire bound violated: " + std::to_string( combined.num_wires() );
      return false;
    }
  }
  return true;
}

bool code_correctness( std::string& detail )
{
  auto p8 = code_params::make( 8, 8 );
  std::mt19937_64 rng( 108 );
  for ( int i = 0; i < 10; ++i )
  {
    std::vector<uint8_t> x( 8 );
    for ( auto& b : x )
      b = static_cast<uint8_t>( rng() & 1u );
    auto table = oracles::naive_codeword( 8, 8, x );
    for ( uint64_t z = 0; z < 256; ++z )
    {
      if ( enc_bit( p8, x, z ) != ( table[z] != 0 ) )
      {
        detail = "enc_bit disagrees with the whole-table encoder at position " + std::to_string( z );
        return false;
      }
    }
  }

  for ( uint32_t n = 1; n <= 8; ++n )
  {
    auto p = code_params::make( n, 8 );
    auto d = code_min_distance( p );
    double const bound = 0.5 - static_cast<double>( p.rs_degree ) / static_cast<double>( 1u << p.m );
    if ( d.to_double() < bound )
    {
      detail = "distance " + std::to_string( d.to_double() ) + " below " + std::to_string( bound ) +
               " at n=" + std::to_string( n );
      return false;
    }
  }

  auto p10 = code_params::make( 10, 8 );
  for ( int i = 0; i < 1000; ++i )
  {
    uint64_t a = rng() & 0x3ff, b = rng() & 0x3ff, z = rng() & 0xff;
    std::vector<uint8_t> xa( 10 ), xb( 10 ), xs( 10 );
    for ( uint32_t t = 0; t < 10; ++t )
    {
      xa[t] = static_cast<uint8_t>( ( a >> t ) & 1u );
      xb[t] = static_cast<uint8_t>( ( b >> t ) & 1u );
      xs[t] = xa[t] ^ xb[t];
    }
    if ( enc_bit( p10, xs, z ) != ( enc_bit( p10, xa, z ) != enc_bit( p10, xb, z ) ) )
    {
      detail = "linearity identity failed";
      return false;
    }
  }
  return true;
}

bool neciporuk_soundness( std::string& detail )
{
  /* exhaustive family: wire counts 1..4 over n = 2..5 variables, every
   * labelling and output, gate sequences up to a documented cap (complete for
   * up to 3 wires, 2 gates at 4 wires) */
  for ( uint32_t n = 2; n <= 5; ++n )
  {
    std::unordered_map<uint64_t, uint32_t> min_wires; /* packed truth table -> fewest wires seen */
    for ( uint32_t l = 1; l <= 4; ++l )
    {
      uint32_t const cap = std::min( l * ( l - 1 ) / 2, 2u + ( l < 4 ? 1u : 0u ) );

      std::vector<gate> pool;
      for ( uint32_t a = 1; a <= l; ++a )
        for ( uint32_t b = 1; b <= l; ++b )
          if ( a != b )
            pool.push_back( { a, b } );

      uint64_t labelings = 1;
      for ( uint32_t w = 0; w < l; ++w )
        labelings *= 2ull * n;

      uint64_t const mask = sim_block_mask( n );
      for ( uint64_t lab = 0; lab < labelings; ++lab )
      {
        comparator_circuit c;
        c.num_vars = n;
        uint64_t v = lab;
        for ( uint32_t w = 0; w < l; ++w )
        {
          c.wires.push_back( { static_cast<uint32_t>( v % n ) + 1, ( ( v / n ) % 2 ) != 0 } );
          v /= 2ull * n;
        }

        std::vector<uint32_t> seq;
        std::vector<uint64_t> words;
        auto emit = [&]() {
          c.gates.clear();
          for ( auto idx : seq )
            c.gates.push_back( pool[idx] );
          simulate_block( c, 0, words );
          for ( uint32_t out = 0; out < l; ++out )
          {
            uint64_t const tt = words[out] & mask;
            auto it = min_wires.find( tt );
            if ( it == min_wires.end() )
              min_wires.emplace( tt, l );
            else if ( l < it->second )
              it->second = l;
          }
        };
        emit();
        while ( true )
        {
          if ( seq.size() < cap )
          {
            seq.push_back( 0 );
          }
          else
          {
            while ( !seq.empty() && seq.back() + 1 == pool.size() )
              seq.pop_back();
            if ( seq.empty() )
              break;
            ++seq.back();
          }
          emit();
        }
      }
    }

    for ( auto const& [packed, wires] : min_wires )
    {
      truth_table tt( n );
      tt.words()[0] = packed;
      for ( uint32_t k = 1; k <= std::min( n, 3u ); ++k )
      {
        auto bound = necip_wire_bound( tt, block_partition::consecutive( n, k ) );
        if ( bound.total_wire_bound > wires )
        {
          detail = "bound " + std::to_string( bound.total_wire_bound ) + " exceeds " +
                   std::to_string( wires ) + " wires (n=" + std::to_string( n ) +
                   ", k=" + std::to_string( k ) + ")";
          return false;
        }
      }
    }
  }
  return true;
}

bool fooling_tester( std::string& detail )
{
  auto c = random_circuit( 8, 6, 14, 109 );
  if ( !( fool_test( c, []( uint64_t z ) { return z; }, 8 ) == rational::of( 0, 1 ) ) )
  {
    detail = "identity generator should have zero error";
    return false;
  }

  comparator_circuit lit;
  lit.num_vars = 4;
  lit.wires = { { 1, false } };
  lit.output = 1;
  if ( !( fool_test( lit, []( uint64_t ) { return uint64_t( 0 ); }, 4 ) == rational::of( 1, 2 ) ) )
  {
    detail = "constant generator against a literal should give 1/2";
    return false;
  }

  std::mt19937_64 rng( 110 );
  for ( int inst = 0; inst < 100; ++inst )
  {
    uint32_t const n = 3 + static_cast<uint32_t>( rng() % 4 );
    auto rc = random_circuit( n, 4, rng() % 12, rng() );
    auto gen = make_kwise_generator( n, 2 );
    auto eps = fool_test( rc, gen, gen.seed_bits() );

    uint64_t hit_gen = 0;
    uint64_t const seeds = uint64_t( 1 ) << gen.seed_bits();
    for ( uint64_t z = 0; z < seeds; ++z )
      hit_gen += oracles::naive_evaluate( rc, gen( z ) ) ? 1 : 0;
    uint64_t const hit_uni = oracles::naive_count_sat( rc );
    uint64_t const lhs = hit_gen << n;
    uint64_t const rhs = hit_uni * seeds;
    auto expected = rational::of( lhs > rhs ? lhs - rhs : rhs - lhs, seeds << n );
    if ( !( eps == expected ) )
    {
      detail = "fooling error differs from the recount";
      return false;
    }
  }
  return true;
}

bool cli_determinism( std::string& detail )
{
  if ( cli_path.empty() )
  {
    detail = "no CLI path given";
    return false;
  }

  auto gen = run_cli( "random-circuit --n 9 --wires 6 --gates 18 --seed 11" );
  auto gen2 = run_cli( "random-circuit --n 9 --wires 6 --gates 18 --seed 11" );
  if ( gen.exit_code != 0 || gen.out != gen2.out )
  {
    detail = "random-circuit is not reproducible";
    return false;
  }
  std::ofstream( "acceptance_rand.cc" ) << gen.out;

  std::vector<std::pair<std::string, std::string>> runs = {
      { "count-sat acceptance_rand.cc --method memo --k 3 --report csv --threads 1",
        "count-sat acceptance_rand.cc --method memo --k 3 --report csv --threads 4" },
      { "count-sat acceptance_rand.cc --method memo --k 3 --style interleaved --threads 1",
        "count-sat acceptance_rand.cc --method memo --k 3 --style interleaved --threads 3" },
      { "shrinkage acceptance_rand.cc --p 0.5 --trials 50 --seed 5 --csv acceptance_a.csv --threads 1",
        "shrinkage acceptance_rand.cc --p 0.5 --trials 50 --seed 5 --csv acceptance_b.csv --threads 4" },
      { "truthtable acceptance_rand.cc --threads 1", "truthtable acceptance_rand.cc --threads 4" },
  };
  for ( auto const& [a, b] : runs )
  {
    auto ra = run_cli( a );
    auto rb = run_cli( b );
    if ( ra.exit_code != 0 || rb.exit_code != 0 || ra.out != rb.out )
    {
      detail = "outputs differ for: " + a;
      return false;
    }
  }
  if ( read_file( "acceptance_a.csv" ) != read_file( "acceptance_b.csv" ) )
  {
    detail = "shrinkage CSV differs across thread counts";
    return false;
  }

  /* brute and memo agree end to end through the CLI */
  auto brute = run_cli( "count-sat acceptance_rand.cc --method brute" );
  auto memo = run_cli( "count-sat acceptance_rand.cc --method memo --k 3" );
  if ( brute.out != memo.out )
  {
    detail = "CLI memo and brute counts differ";
    return false;
  }
  return true;
}

} // namespace

int main( int argc, char** argv )
{
  if ( argc > 1 )
    cli_path = argv[1];
  data_dir = argc > 2 ? argv[2] : "data";

  using criterion = std::pair<std::string, std::function<bool( std::string& )>>;
  std::vector<criterion> criteria = {
      { "#SAT oracle equality (200 circuits, k in {2,3,4})", sat_oracle_equality },
      { "restriction soundness (100 circuits x 100 restrictions)", restriction_soundness },
      { "simplification bound (100 circuits, <= l(l-1)/2 gates)", simplification_bound },
      { "memo tree depth and lookup oracle (500 circuits/context)", memo_tree_structure },
      { "parity witness reproduction", parity_witness_reproduction },
      { "selection statistics (exact k-wise, iid mean)", selection_statistics },
      { "cube combination (50 instances, wire bound)", cube_combination },
      { "code correctness (per-bit, distance, linearity)", code_correctness },
      { "Neciporuk soundness (exhaustive small circuits)", neciporuk_soundness },
      { "fooling tester (endpoints and recount)", fooling_tester },
      { "CLI determinism across thread counts", cli_determinism },
  };

  int failures = 0;
  for ( auto& [name, fn] : criteria )
  {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try
    {
      ok = fn( detail );
    }
    catch ( std::exception const& e )
    {
      detail = std::string( "exception: " ) + e.what();
    }
    char timing[32];
    std::snprintf( timing, sizeof timing, "%.1fs", seconds_since( t0 ) );
    if ( ok )
    {
      std::cout << "[PASS] " << name << " (" << timing << ")\n";
    }
    else
    {
      std::cout << "[FAIL] " << name << " (" << timing << "): " << detail << "\n";
      ++failures;
    }
  }
  std::cout << ( failures == 0 ? "all criteria passed" : std::to_string( failures ) + " criteria failed" )
            << "\n";
  return failures == 0 ? 0 : 1;
}
