/*!
  \file shrinkage.hpp
  \brief Shrinkage experiments under random restrictions, the constructive
         cube combination, and the exact ε-fooling tester.
*/

#pragma once

#include "circuit.hpp"
#include "common.hpp"
#include "gf2m.hpp"
#include "parallel.hpp"
#include "restriction.hpp"
#include "sat_count.hpp"
#include "selection.hpp"
#include "simplify.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace ccirc
{

inline constexpr uint32_t shrinkage_max_vars = 16; /* per-trial simplify_full sweeps 2^n */

enum class selection_source
{
  iid,
  kwise
};

struct shrinkage_params
{
  double p{ 0.5 };
  uint64_t trials{ 100 };
  double c{ 1.0 };
  selection_source source{ selection_source::iid };
  bool beta_kwise{ false }; /* draw the value vector k-wise instead of fully uniform */
  uint64_t seed{ 0 };
  uint32_t threads{ 1 };
};

/*! \brief k-wise independent bit generator: output bit i is the low bit of a
 *         random degree-(k−1) polynomial over GF(2^m) evaluated at point i. */
struct kwise_generator
{
  uint32_t n{ 0 };
  uint32_t independence{ 2 };
  uint32_t field_log{ 1 };

  uint32_t seed_bits() const { return independence * field_log; }

  uint64_t operator()( uint64_t seed ) const
  {
    gf2m field( field_log );
    uint32_t const mask = ( 1u << field_log ) - 1;
    std::vector<uint32_t> coeffs( independence );
    for ( uint32_t j = 0; j < independence; ++j )
      coeffs[j] = static_cast<uint32_t>( seed >> ( j * field_log ) ) & mask;
    uint64_t out = 0;
    for ( uint32_t i = 0; i < n; ++i )
      out |= uint64_t( field.poly_eval( coeffs, i ) & 1u ) << i;
    return out;
  }
};

inline kwise_generator make_kwise_generator( uint32_t n, uint32_t independence )
{
  if ( n == 0 )
    throw validation_error( "kwise generator: need at least one output bit" );
  kwise_generator gen;
  gen.n = n;
  gen.independence = std::max<uint32_t>( 1, independence );
  gen.field_log = 1;
  while ( ( uint64_t( 1 ) << gen.field_log ) < n )
    ++gen.field_log;
  if ( gen.seed_bits() > 24 )
    throw guard_error( "kwise generator: seed length exceeds the exhaustive-test guard" );
  return gen;
}

struct shrinkage_trial_row
{
  uint64_t trial{ 0 };
  uint64_t seed{ 0 };
  uint32_t survived_wires{ 0 };
  uint32_t simplified_gates{ 0 };
  bool exceeded_threshold{ false };
};

struct shrinkage_report
{
  double p{ 0.0 };          /* effective free probability */
  uint32_t bias_exp{ 0 };   /* t of the k-wise sampler, when used */
  uint32_t independence{ 0 };
  double threshold{ 0.0 };  /* 2^{3 sqrt(c log2 ℓ)} · p · ℓ */
  double alpha{ 0.0 };      /* sqrt(c / log2 ℓ) */
  double tail_frequency{ 0.0 };
  double mean_survived{ 0.0 };
  std::vector<uint32_t> heavy_vars; /* { v : w_v >= p^{1-alpha} · ℓ } */
  std::vector<shrinkage_trial_row> rows;
};

/* Per-trial seed scheme (documented for reproducibility): trial t uses
 * master_seed + t; the selection seed is splitmix64 of that value and the
 * value-vector seed is splitmix64 of it xored with the splitmix64 constant. */
namespace detail
{

inline uint64_t trial_selection_seed( uint64_t master, uint64_t trial )
{
  return splitmix64( master + trial );
}

inline uint64_t trial_beta_seed( uint64_t master, uint64_t trial )
{
  return splitmix64( ( master + trial ) ^ 0x9e3779b97f4a7c15ull );
}

} // namespace detail

/*! \brief Runs restriction trials and collects shrinkage statistics.
 *
 * Each trial samples (σ, β) with β uniform, restricts the circuit, and
 * records the surviving-wire count and the gate count after full
 * simplification.  Trials are independent and may run on several workers;
 * the report is identical for any worker count.
 */
inline shrinkage_report shrinkage_trials( comparator_circuit const& c, shrinkage_params const& params )
{
  validate( c );
  if ( c.num_vars > shrinkage_max_vars )
    throw guard_error( "shrinkage trials limited to " + std::to_string( shrinkage_max_vars ) + " variables" );
  if ( params.p < 0.0 || params.p > 1.0 )
    throw validation_error( "shrinkage: p must lie in [0,1]" );

  uint32_t const n = c.num_vars;
  uint32_t const l = c.num_wires();
  double const log_l = l >= 2 ? std::log2( static_cast<double>( l ) ) : 0.0;

  shrinkage_report report;
  report.p = params.p;

  kwise_selection_sampler sampler;
  if ( params.source == selection_source::kwise )
  {
    /* p is rounded to the nearest power of 1/2 so the bias is exact */
    double t_real = params.p <= 0.0 ? 64.0 : -std::log2( params.p );
    uint32_t field_log = 1;
    while ( ( uint64_t( 1 ) << field_log ) < n )
      ++field_log;
    uint32_t t = static_cast<uint32_t>( std::llround( t_real ) );
    if ( t > field_log )
      t = field_log;
    sampler.independence = std::max<uint32_t>( 1, static_cast<uint32_t>( std::ceil( params.c * std::max( log_l, 1.0 ) ) ) );
    sampler.field_log = field_log;
    sampler.bias_exp = t;
    sampler.n = n;
    sampler.check();
    report.p = sampler.p();
    report.bias_exp = sampler.bias_exp;
    report.independence = sampler.independence;
  }

  double const p_eff = report.p;
  report.threshold = std::exp2( 3.0 * std::sqrt( params.c * log_l ) ) * p_eff * l;
  report.alpha = log_l > 0.0 ? std::sqrt( params.c / log_l ) : 0.0;

  /* heavy variables: many wires carry them, so restriction barely helps */
  std::vector<uint32_t> wires_per_var( n + 1, 0 );
  for ( auto const& lit : c.wires )
    ++wires_per_var[lit.var];
  if ( p_eff > 0.0 )
  {
    double const heavy_cut = std::pow( p_eff, 1.0 - report.alpha ) * l;
    for ( uint32_t v = 1; v <= n; ++v )
    {
      if ( wires_per_var[v] >= heavy_cut )
        report.heavy_vars.push_back( v );
    }
    assert( static_cast<double>( report.heavy_vars.size() ) <=
            std::pow( 1.0 / p_eff, 1.0 - report.alpha ) + 1e-9 );
  }

  kwise_generator beta_gen;
  if ( params.beta_kwise )
    beta_gen = make_kwise_generator( n, sampler.independence ? sampler.independence : 2 );

  report.rows.resize( params.trials );
  parallel_for( 0, params.trials, params.threads, [&]( uint32_t, uint64_t lo, uint64_t hi ) {
    for ( uint64_t t = lo; t < hi; ++t )
    {
      shrinkage_trial_row row;
      row.trial = t;
      row.seed = detail::trial_selection_seed( params.seed, t );

      selection sigma;
      if ( params.source == selection_source::iid )
      {
        sigma = sample_selection_random( n, params.p, row.seed );
      }
      else
      {
        uint32_t const r = sampler.seed_bits();
        uint64_t const mask = r >= 64 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << r ) - 1 );
        sigma = sampler.sample( row.seed & mask );
      }

      std::vector<uint8_t> beta( n );
      if ( params.beta_kwise )
      {
        uint64_t const mask = ( uint64_t( 1 ) << beta_gen.seed_bits() ) - 1;
        uint64_t const word = beta_gen( detail::trial_beta_seed( params.seed, t ) & mask );
        for ( uint32_t i = 0; i < n; ++i )
          beta[i] = static_cast<uint8_t>( ( word >> i ) & 1u );
      }
      else
      {
        std::mt19937_64 beta_rng( detail::trial_beta_seed( params.seed, t ) );
        for ( uint32_t i = 0; i < n; ++i )
          beta[i] = static_cast<uint8_t>( beta_rng() & 1u );
      }

      auto rho = restriction::from_sigma_beta( sigma, beta );
      auto restricted = apply_restriction( c, rho );

      /* a wire survives when its label variable stays free; if the output
       * collapsed to a constant the restricted function needs none of them,
       * but the survival statistic is about the selection */
      uint32_t survived = 0;
      for ( auto const& lit : c.wires )
        survived += rho.is_free( lit.var ) ? 1 : 0;
      row.survived_wires = survived;
      if ( restricted.is_constant() )
      {
        row.simplified_gates = 0;
      }
      else
      {
        assert( restricted.circuit.num_wires() == survived );
        row.simplified_gates = simplify_full( restricted.circuit ).num_gates();
      }
      row.exceeded_threshold = static_cast<double>( row.survived_wires ) >= report.threshold;
      report.rows[t] = row;
    }
  } );

  uint64_t exceeded = 0;
  uint64_t survived_total = 0;
  for ( auto const& row : report.rows )
  {
    exceeded += row.exceeded_threshold ? 1 : 0;
    survived_total += row.survived_wires;
  }
  if ( params.trials > 0 )
  {
    report.tail_frequency = static_cast<double>( exceeded ) / static_cast<double>( params.trials );
    report.mean_survived = static_cast<double>( survived_total ) / static_cast<double>( params.trials );
  }
  return report;
}

/*! \brief Builds ⋁_h (1_h ∧ sub_h) as one comparator circuit.
 *
 * cube_vars lists the split variables (ascending); subcircuits[h] handles the
 * assignment whose bit t (of h) gives the value of cube_vars[t].  Every
 * subcircuit must be over the full variable space but label no wire with a
 * split variable.  Each indicator costs |H| wires; the first block's term
 * wire doubles as the disjunction accumulator, so the result has at most
 * 2^{|H|} (max ℓ_h + |H|) + 1 wires.
 */
inline comparator_circuit combine_over_cube( uint32_t num_vars, std::vector<uint32_t> const& cube_vars,
                                             std::vector<comparator_circuit> const& subcircuits )
{
  uint32_t const q = static_cast<uint32_t>( cube_vars.size() );
  if ( q > 10 )
    throw guard_error( "combine_over_cube limited to 10 split variables" );
  if ( subcircuits.size() != pow2( q ) )
    throw validation_error( "combine_over_cube: need exactly 2^|H| subcircuits" );
  std::vector<uint8_t> in_cube( num_vars + 1, 0 );
  for ( auto v : cube_vars )
  {
    if ( v == 0 || v > num_vars )
      throw validation_error( "combine_over_cube: split variable out of range" );
    if ( in_cube[v]++ )
      throw validation_error( "combine_over_cube: split variable repeated" );
  }
  for ( auto const& sub : subcircuits )
  {
    validate( sub );
    if ( sub.num_vars != num_vars )
      throw validation_error( "combine_over_cube: subcircuit variable count mismatch" );
    for ( auto const& lit : sub.wires )
    {
      if ( in_cube[lit.var] )
        throw validation_error( "combine_over_cube: subcircuit labels a split variable" );
    }
  }

  if ( q == 0 )
    return subcircuits.front();

  comparator_circuit out;
  out.num_vars = num_vars;
  std::vector<uint32_t> term_wire( subcircuits.size(), 0 );

  for ( uint64_t h = 0; h < subcircuits.size(); ++h )
  {
    auto const& sub = subcircuits[h];
    uint32_t const base = out.num_wires();

    /* indicator 1_h: literal per split variable, AND-folded into its first wire */
    for ( uint32_t t = 0; t < q; ++t )
      out.wires.push_back( { cube_vars[t], ( ( h >> t ) & 1u ) == 0 } );
    uint32_t const ind = base + 1;
    term_wire[h] = ind;

    for ( auto const& lit : sub.wires )
      out.wires.push_back( lit );
    for ( auto const& g : sub.gates )
      out.gates.push_back( { g.and_wire + base + q, g.or_wire + base + q } );
    for ( uint32_t t = 1; t < q; ++t )
      out.gates.push_back( { ind, ind + t } );
    out.gates.push_back( { ind, sub.output + base + q } );
  }

  /* disjunction of the terms, accumulated on the first term wire */
  for ( uint64_t h = 1; h < subcircuits.size(); ++h )
    out.gates.push_back( { term_wire[h], term_wire[0] } );
  out.output = term_wire[0];
  validate( out );
  return out;
}

/*! \brief Exact |Pr_z[C(G(z))=1] − Pr_x[C(x)=1]| over exhaustive seed and input spaces.
 *
 * The generator maps an r-bit seed to an n-bit string (low n bits are used).
 */
inline rational fool_test( comparator_circuit const& c, std::function<uint64_t( uint64_t )> const& generator,
                           uint32_t seed_len )
{
  validate( c );
  if ( seed_len > 24 || c.num_vars > 24 )
    throw guard_error( "fool_test limited to 24 seed bits and 24 variables" );
  uint64_t const seeds = pow2( seed_len );
  uint64_t const inputs = pow2( c.num_vars );
  uint64_t const input_mask = inputs - 1;

  uint64_t accepted_generated = 0;
  for ( uint64_t z = 0; z < seeds; ++z )
  {
    if ( evaluate( c, generator( z ) & input_mask ) )
      ++accepted_generated;
  }
  uint64_t const accepted_uniform = count_sat_brute( c );

  uint64_t const lhs = accepted_generated * inputs;
  uint64_t const rhs = accepted_uniform * seeds;
  uint64_t const diff = lhs > rhs ? lhs - rhs : rhs - lhs;
  return rational::of( diff, seeds * inputs );
}

} // namespace ccirc
