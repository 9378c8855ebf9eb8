/*!
  \file ccirc.cpp
  \brief Command-line front end.

  Exit codes: 0 success, 1 validation error (bad input or flags), 2 scale
  guard violation.  All randomness is seeded through --seed (default 0) and
  stdout is byte-identical for a fixed seed, regardless of --threads.
*/

#include <ccirc/ccirc.hpp>

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{

constexpr char const* version_string = "ccirc 0.1.0 (format ccv1)";

std::string read_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw ccirc::validation_error( "cannot open '" + path + "'" );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file( std::string const& path, std::string const& content )
{
  std::ofstream out( path, std::ios::binary );
  if ( !out )
    throw ccirc::validation_error( "cannot write '" + path + "'" );
  out << content;
}

/* every file input goes through parse -> serialize -> parse, so anything the
 * tool accepts is exactly what the canonical format describes */
ccirc::comparator_circuit load_circuit( std::string const& path )
{
  auto first = ccirc::parse_circuit( read_file( path ) );
  auto second = ccirc::parse_circuit( ccirc::serialize_circuit( first ) );
  if ( !( first == second ) )
    throw ccirc::validation_error( "'" + path + "': canonical round-trip mismatch" );
  return second;
}

std::vector<uint8_t> parse_bit_string( std::string const& s, uint32_t expected )
{
  if ( s.size() != expected )
    throw ccirc::validation_error( "expected " + std::to_string( expected ) + " input bits, got " +
                                   std::to_string( s.size() ) );
  std::vector<uint8_t> bits( s.size() );
  for ( size_t i = 0; i < s.size(); ++i )
  {
    if ( s[i] != '0' && s[i] != '1' )
      throw ccirc::validation_error( "input bits must be 0 or 1" );
    bits[i] = s[i] == '1' ? 1 : 0;
  }
  return bits;
}

/* message hex: integer value, bit i-1 of the value is x_i */
std::vector<uint8_t> parse_message_hex( std::string const& hex, uint32_t n )
{
  uint32_t const digits = ( n + 3 ) / 4;
  if ( hex.size() != digits )
    throw ccirc::validation_error( "message hex must have " + std::to_string( digits ) + " digits" );
  uint64_t value = 0;
  for ( char ch : hex )
  {
    value <<= 4;
    if ( ch >= '0' && ch <= '9' )
      value |= static_cast<uint64_t>( ch - '0' );
    else if ( ch >= 'a' && ch <= 'f' )
      value |= static_cast<uint64_t>( ch - 'a' ) + 10;
    else if ( ch >= 'A' && ch <= 'F' )
      value |= static_cast<uint64_t>( ch - 'A' ) + 10;
    else
      throw ccirc::validation_error( "invalid hex digit in message" );
  }
  if ( n < 64 && ( value >> n ) != 0 )
    throw ccirc::validation_error( "message has more than " + std::to_string( n ) + " bits" );
  std::vector<uint8_t> bits( n );
  for ( uint32_t i = 0; i < n; ++i )
    bits[i] = static_cast<uint8_t>( ( value >> i ) & 1u );
  return bits;
}

ccirc::restriction parse_fix_spec( std::string const& spec, uint32_t n )
{
  ccirc::restriction rho( n );
  std::stringstream ss( spec );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    if ( item.empty() )
      continue;
    auto eq = item.find( '=' );
    if ( eq == std::string::npos || item.size() < 4 || item[0] != 'x' )
      throw ccirc::validation_error( "bad --fix entry '" + item + "' (want x<i>=0|1)" );
    uint32_t var = 0;
    try
    {
      var = static_cast<uint32_t>( std::stoul( item.substr( 1, eq - 1 ) ) );
    }
    catch ( ... )
    {
      throw ccirc::validation_error( "bad --fix entry '" + item + "'" );
    }
    if ( var == 0 || var > n )
      throw ccirc::validation_error( "--fix variable x" + std::to_string( var ) + " out of range" );
    std::string value = item.substr( eq + 1 );
    if ( value != "0" && value != "1" )
      throw ccirc::validation_error( "--fix value for x" + std::to_string( var ) + " must be 0 or 1" );
    if ( !rho.is_free( var ) )
      throw ccirc::validation_error( "--fix repeats x" + std::to_string( var ) );
    rho.set( var, value == "1" ? ccirc::rvalue::one : ccirc::rvalue::zero );
  }
  return rho;
}

std::vector<std::vector<uint32_t>> parse_block_spec( std::string const& spec )
{
  std::vector<std::vector<uint32_t>> blocks;
  std::stringstream ss( spec );
  std::string item;
  while ( std::getline( ss, item, ',' ) )
  {
    if ( item.empty() )
      continue;
    auto dash = item.find( '-' );
    try
    {
      if ( dash == std::string::npos )
      {
        blocks.push_back( { static_cast<uint32_t>( std::stoul( item ) ) } );
      }
      else
      {
        uint32_t lo = static_cast<uint32_t>( std::stoul( item.substr( 0, dash ) ) );
        uint32_t hi = static_cast<uint32_t>( std::stoul( item.substr( dash + 1 ) ) );
        if ( lo == 0 || hi < lo )
          throw ccirc::validation_error( "bad block range '" + item + "'" );
        std::vector<uint32_t> block;
        for ( uint32_t v = lo; v <= hi; ++v )
          block.push_back( v );
        blocks.push_back( std::move( block ) );
      }
    }
    catch ( ccirc::validation_error const& )
    {
      throw;
    }
    catch ( ... )
    {
      throw ccirc::validation_error( "bad block spec '" + item + "'" );
    }
  }
  if ( blocks.empty() )
    throw ccirc::validation_error( "--blocks must list at least one block" );
  return blocks;
}

std::string format_double( double v )
{
  char buf[64];
  std::snprintf( buf, sizeof buf, "%.6f", v );
  return buf;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "comparator-circuit toolkit" };
  app.fallthrough();
  app.set_version_flag( "--version", version_string );

  uint32_t threads = 1;
  uint64_t seed = 0;
  app.add_option( "--threads", threads, "worker count (output is independent of it)" )->capture_default_str();
  app.add_option( "--seed", seed, "seed for all randomness" )->capture_default_str();

  /* eval */
  auto* cmd_eval = app.add_subcommand( "eval", "evaluate a circuit on one input" );
  std::string eval_file, eval_input;
  cmd_eval->add_option( "file", eval_file, "ccv1 circuit file" )->required();
  cmd_eval->add_option( "--input", eval_input, "assignment, one 0/1 per variable (x1 first)" )->required();

  /* truthtable */
  auto* cmd_tt = app.add_subcommand( "truthtable", "print the full truth table as hex" );
  std::string tt_file;
  cmd_tt->add_option( "file", tt_file )->required();

  /* simplify */
  auto* cmd_simplify = app.add_subcommand( "simplify", "remove all useless gates" );
  std::string simplify_file, simplify_out;
  cmd_simplify->add_option( "file", simplify_file )->required();
  cmd_simplify->add_option( "-o,--output", simplify_out, "write the simplified circuit here" );

  /* restrict */
  auto* cmd_restrict = app.add_subcommand( "restrict", "apply a restriction" );
  std::string restrict_file, restrict_fix;
  cmd_restrict->add_option( "file", restrict_file )->required();
  cmd_restrict->add_option( "--fix", restrict_fix, "e.g. \"x1=0,x3=1\"" )->required();

  /* count-sat */
  auto* cmd_sat = app.add_subcommand( "count-sat", "count satisfying assignments" );
  std::string sat_file, sat_method = "memo", sat_style = "consecutive", sat_report;
  uint32_t sat_k = 0;
  cmd_sat->add_option( "file", sat_file )->required();
  cmd_sat->add_option( "--method", sat_method )->check( CLI::IsMember( { "brute", "memo" } ) );
  cmd_sat->add_option( "--k", sat_k, "block size parameter (default: min(4, n))" );
  cmd_sat->add_option( "--style", sat_style )->check( CLI::IsMember( { "consecutive", "interleaved" } ) );
  cmd_sat->add_option( "--report", sat_report )->check( CLI::IsMember( { "csv" } ) );

  /* random-circuit */
  auto* cmd_random = app.add_subcommand( "random-circuit", "emit a seeded random circuit" );
  uint32_t rc_n = 0, rc_wires = 0, rc_gates = 0;
  std::string rc_out;
  cmd_random->add_option( "--n", rc_n, "variables" )->required();
  cmd_random->add_option( "--wires", rc_wires )->required();
  cmd_random->add_option( "--gates", rc_gates )->required();
  cmd_random->add_option( "-o,--output", rc_out );

  /* andreev */
  auto* cmd_andreev = app.add_subcommand( "andreev", "generalized Andreev function" );
  uint32_t an_n = 0, an_k = 0;
  std::string an_x;
  bool an_emit = false;
  cmd_andreev->add_option( "--n", an_n )->required();
  cmd_andreev->add_option( "--k", an_k )->required();
  cmd_andreev->add_option( "--x", an_x, "fixed message as hex (bit i-1 of the value is x_i)" );
  cmd_andreev->add_flag( "--emit-truth-table", an_emit );

  /* correlation */
  auto* cmd_corr = app.add_subcommand( "correlation", "agreement of a circuit with a reference function" );
  std::string corr_file, corr_against = "andreev";
  uint32_t corr_k = 0;
  cmd_corr->add_option( "file", corr_file )->required();
  cmd_corr->add_option( "--against", corr_against )->check( CLI::IsMember( { "andreev" } ) );
  cmd_corr->add_option( "--k", corr_k )->required();

  /* shrinkage */
  auto* cmd_shrink = app.add_subcommand( "shrinkage", "random-restriction shrinkage trials" );
  std::string shrink_file, shrink_selection = "random", shrink_csv;
  bool shrink_random = false;
  uint32_t shrink_n = 0, shrink_wires = 0, shrink_gates = 0;
  double shrink_p = -1.0, shrink_c = 1.0;
  uint64_t shrink_trials = 100;
  cmd_shrink->add_option( "file", shrink_file, "ccv1 circuit file" );
  cmd_shrink->add_flag( "--random", shrink_random, "use a seeded random circuit instead of a file" );
  cmd_shrink->add_option( "--n", shrink_n );
  cmd_shrink->add_option( "--wires", shrink_wires );
  cmd_shrink->add_option( "--gates", shrink_gates );
  cmd_shrink->add_option( "--p", shrink_p, "free probability (default: wires^(-2/3))" );
  cmd_shrink->add_option( "--trials", shrink_trials )->capture_default_str();
  cmd_shrink->add_option( "--selection", shrink_selection )->check( CLI::IsMember( { "random", "kwise" } ) );
  std::string shrink_beta = "uniform";
  cmd_shrink->add_option( "--beta", shrink_beta, "value-vector distribution" )
      ->check( CLI::IsMember( { "uniform", "kwise" } ) );
  cmd_shrink->add_option( "--c", shrink_c, "independence/threshold constant" )->capture_default_str();
  cmd_shrink->add_option( "--csv", shrink_csv, "per-trial rows to this file" );

  /* fool */
  auto* cmd_fool = app.add_subcommand( "fool", "exact fooling error of a generator" );
  std::string fool_file, fool_gen = "uniform";
  uint32_t fool_seed_len = 0;
  cmd_fool->add_option( "file", fool_file )->required();
  cmd_fool->add_option( "--generator", fool_gen )->check( CLI::IsMember( { "uniform", "kwise" } ) );
  cmd_fool->add_option( "--seed-len", fool_seed_len )->required();

  /* necip */
  auto* cmd_necip = app.add_subcommand( "necip", "Nečiporuk wire lower bound from a truth table" );
  std::string necip_file, necip_blocks;
  uint32_t necip_n = 0;
  cmd_necip->add_option( "file", necip_file, "file holding the truth table in hex" )->required();
  cmd_necip->add_option( "--n", necip_n )->required();
  cmd_necip->add_option( "--blocks", necip_blocks, "e.g. \"1-2,3-4\"" )->required();

  app.require_subcommand( 0, 1 );

  try
  {
    app.parse( argc, argv );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::CallForVersion const& e )
  {
    return app.exit( e );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e );
    return 1;
  }

  try
  {
    if ( *cmd_eval )
    {
      auto c = load_circuit( eval_file );
      auto bits = parse_bit_string( eval_input, c.num_vars );
      std::cout << ( ccirc::evaluate( c, bits ) ? 1 : 0 ) << "\n";
    }
    else if ( *cmd_tt )
    {
      auto c = load_circuit( tt_file );
      std::cout << ccirc::truth_table_of( c ).to_hex() << "\n";
    }
    else if ( *cmd_simplify )
    {
      auto c = load_circuit( simplify_file );
      auto s = ccirc::simplify_full( c );
      std::cout << "gates: " << c.num_gates() << " -> " << s.num_gates() << "\n";
      if ( !simplify_out.empty() )
        write_file( simplify_out, ccirc::serialize_circuit( s ) );
    }
    else if ( *cmd_restrict )
    {
      auto c = load_circuit( restrict_file );
      auto rho = parse_fix_spec( restrict_fix, c.num_vars );
      auto res = ccirc::apply_restriction( c, rho );
      if ( res.is_constant() )
        std::cout << "const " << ( res.constant_value ? 1 : 0 ) << "\n";
      else
        std::cout << ccirc::serialize_circuit( res.circuit );
    }
    else if ( *cmd_sat )
    {
      auto c = load_circuit( sat_file );
      if ( sat_method == "brute" )
      {
        std::cout << ccirc::count_sat_brute( c ) << "\n";
      }
      else
      {
        uint32_t k = sat_k != 0 ? sat_k : std::min<uint32_t>( 4, c.num_vars );
        auto style = sat_style == "interleaved" ? ccirc::partition_style::interleaved
                                                : ccirc::partition_style::consecutive;
        auto report = ccirc::count_sat_memo( c, k, style, threads );
        if ( report.block_wires > ccirc::memo_block_wire_guard )
          std::cerr << "note: block has " << report.block_wires
                    << " wires; falling back to per-restriction brute force\n";
        std::cout << report.count << "\n";
        if ( sat_report == "csv" )
        {
          std::cout << "metric,value\n";
          std::cout << "method,memo\n";
          std::cout << "k," << k << "\n";
          std::cout << "style," << sat_style << "\n";
          std::cout << "chosen_block," << report.chosen_block + 1 << "\n";
          std::cout << "block_size," << report.block_size << "\n";
          std::cout << "block_wires," << report.block_wires << "\n";
          std::cout << "restrictions," << report.restrictions_enumerated << "\n";
          std::cout << "memo_used," << ( report.used_memo ? 1 : 0 ) << "\n";
          std::cout << "tree_nodes," << report.tree_nodes << "\n";
          std::cout << "tree_visits," << report.tree_visits << "\n";
          std::cout << "tree_useless_leaves," << report.tree_useless_leaves << "\n";
          std::cout << "tree_output_leaves," << report.tree_output_leaves << "\n";
          std::cout << "tree_depth," << report.tree_depth << "\n";
          std::cerr << "elapsed_seconds," << format_double( report.elapsed_seconds ) << "\n";
        }
      }
    }
    else if ( *cmd_random )
    {
      auto c = ccirc::random_circuit( rc_n, rc_wires, rc_gates, seed );
      auto text = ccirc::serialize_circuit( c );
      if ( rc_out.empty() )
        std::cout << text;
      else
        write_file( rc_out, text );
    }
    else if ( *cmd_andreev )
    {
      auto params = ccirc::code_params::make( an_n, an_k );
      if ( !params.distance_regime() )
        std::cerr << "note: parameters outside the code's distance regime (rs_degree="
                  << params.rs_degree << ", 2^m=" << ( 1u << params.m ) << ")\n";
      if ( !an_emit )
        throw ccirc::validation_error( "andreev: nothing to do (pass --emit-truth-table)" );
      if ( an_x.empty() )
        std::cout << ccirc::andreev_truth_table( an_n, an_k ).to_hex() << "\n";
      else
        std::cout << ccirc::andreev_truth_table_fixed_x( params, parse_message_hex( an_x, an_n ) ).to_hex()
                  << "\n";
    }
    else if ( *cmd_corr )
    {
      auto c = load_circuit( corr_file );
      if ( c.num_vars % 2 != 0 )
        throw ccirc::validation_error( "correlation against andreev needs an even variable count" );
      auto f = ccirc::andreev_truth_table( c.num_vars / 2, corr_k );
      auto r = ccirc::correlation( c, f );
      std::cout << r.num << "/" << r.den << "\n";
    }
    else if ( *cmd_shrink )
    {
      ccirc::comparator_circuit c;
      if ( shrink_random )
      {
        if ( !shrink_file.empty() )
          throw ccirc::validation_error( "shrinkage: give a file or --random, not both" );
        c = ccirc::random_circuit( shrink_n, shrink_wires, shrink_gates, seed );
      }
      else if ( !shrink_file.empty() )
      {
        c = load_circuit( shrink_file );
      }
      else
      {
        throw ccirc::validation_error( "shrinkage: need a circuit file or --random" );
      }

      ccirc::shrinkage_params params;
      params.p = shrink_p >= 0.0 ? shrink_p
                                 : std::pow( static_cast<double>( c.num_wires() ), -2.0 / 3.0 );
      params.trials = shrink_trials;
      params.c = shrink_c;
      params.source = shrink_selection == "kwise" ? ccirc::selection_source::kwise
                                                  : ccirc::selection_source::iid;
      params.beta_kwise = shrink_beta == "kwise";
      params.seed = seed;
      params.threads = threads;
      auto report = ccirc::shrinkage_trials( c, params );

      std::cout << "wires " << c.num_wires() << "\n";
      std::cout << "p " << format_double( report.p ) << "\n";
      if ( params.source == ccirc::selection_source::kwise )
        std::cout << "bias_exp " << report.bias_exp << "\nindependence " << report.independence << "\n";
      std::cout << "threshold " << format_double( report.threshold ) << "\n";
      std::cout << "trials " << params.trials << "\n";
      std::cout << "mean_survived " << format_double( report.mean_survived ) << "\n";
      std::cout << "tail_frequency " << format_double( report.tail_frequency ) << "\n";
      std::cout << "heavy_set_size " << report.heavy_vars.size() << "\n";
      if ( !shrink_csv.empty() )
      {
        std::ostringstream csv;
        csv << "trial,seed,survived_wires,simplified_gates,exceeded_threshold\n";
        for ( auto const& row : report.rows )
          csv << row.trial << ',' << row.seed << ',' << row.survived_wires << ','
              << row.simplified_gates << ',' << ( row.exceeded_threshold ? 1 : 0 ) << "\n";
        write_file( shrink_csv, csv.str() );
      }
    }
    else if ( *cmd_fool )
    {
      auto c = load_circuit( fool_file );
      ccirc::rational eps;
      if ( fool_gen == "uniform" )
      {
        eps = ccirc::fool_test(
            c, []( uint64_t z ) { return z; }, fool_seed_len );
      }
      else
      {
        uint32_t field_log = 1;
        while ( ( 1u << field_log ) < std::max<uint32_t>( c.num_vars, 2 ) )
          ++field_log;
        uint32_t independence = std::max<uint32_t>( 1, fool_seed_len / field_log );
        auto gen = ccirc::make_kwise_generator( c.num_vars, independence );
        if ( gen.seed_bits() != fool_seed_len )
          std::cerr << "note: effective seed length is " << gen.seed_bits() << "\n";
        eps = ccirc::fool_test( c, gen, gen.seed_bits() );
      }
      std::cout << "epsilon " << eps.num << "/" << eps.den << "\n";
    }
    else if ( *cmd_necip )
    {
      std::string hex = read_file( necip_file );
      while ( !hex.empty() && ( hex.back() == '\n' || hex.back() == '\r' || hex.back() == ' ' ) )
        hex.pop_back();
      auto tt = ccirc::truth_table::from_hex( hex, necip_n );
      auto partition = ccirc::block_partition::from_blocks( necip_n, parse_block_spec( necip_blocks ) );
      auto result = ccirc::necip_wire_bound( tt, partition );
      for ( size_t i = 0; i < result.per_block.size(); ++i )
      {
        auto const& r = result.per_block[i];
        std::cout << "block " << i + 1 << " subfunctions " << r.subfunctions << " nonconstant "
                  << r.subfunctions_nonconstant << " wires " << r.wire_bound << "\n";
      }
      std::cout << "total_wire_bound " << result.total_wire_bound << "\n";
    }
    else
    {
      std::cerr << app.help();
      return 1;
    }
  }
  catch ( ccirc::guard_error const& e )
  {
    std::cerr << "guard: " << e.what() << "\n";
    return 2;
  }
  catch ( ccirc::validation_error const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  catch ( std::exception const& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
