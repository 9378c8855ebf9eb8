/*!
  \file sat_count.hpp
  \brief Exact #SAT for comparator circuits: brute-force oracle and the
         memoized block-enumeration algorithm.

  The memoized algorithm picks the variable block whose wires are fewest,
  builds one memo tree over exactly those wires, and enumerates all
  assignments to the remaining variables; each restricted circuit is resolved
  by a tree lookup (or is already constant).  The total is exact for every
  input; the block structure only controls how much work the tree reuses.
*/

#pragma once

#include "circuit.hpp"
#include "common.hpp"
#include "memo_tree.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "restriction.hpp"

#include <bit>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ccirc
{

inline constexpr uint32_t brute_max_vars = 24;
inline constexpr uint32_t memo_block_wire_guard = 4; /* larger blocks fall back to brute enumeration */

/*! \brief Exact satisfying-assignment count by evaluating all 2^n inputs. */
inline uint64_t count_sat_brute( comparator_circuit const& c )
{
  validate( c );
  if ( c.num_vars > brute_max_vars )
    throw guard_error( "count_sat_brute limited to " + std::to_string( brute_max_vars ) + " variables" );
  uint64_t total = 0;
  std::vector<uint64_t> words;
  uint64_t const mask = sim_block_mask( c.num_vars );
  for ( uint64_t b = 0; b < sim_num_blocks( c.num_vars ); ++b )
  {
    simulate_block( c, b, words );
    total += std::popcount( words[c.output - 1] & mask );
  }
  return total;
}

/*! \brief Wires labelled by each block's variables. */
inline std::vector<uint32_t> block_wire_counts( comparator_circuit const& c, block_partition const& p )
{
  std::vector<uint32_t> block_of( c.num_vars + 1, 0 );
  for ( size_t i = 0; i < p.blocks.size(); ++i )
  {
    for ( auto v : p.blocks[i] )
      block_of[v] = static_cast<uint32_t>( i ) + 1;
  }
  std::vector<uint32_t> w( p.blocks.size(), 0 );
  for ( auto const& l : c.wires )
  {
    assert( block_of[l.var] != 0 );
    ++w[block_of[l.var] - 1];
  }
  return w;
}

/*! \brief Index of the block with the fewest labelled wires (lowest index on ties). */
inline size_t choose_block( comparator_circuit const& c, block_partition const& p )
{
  validate( c );
  if ( p.n != c.num_vars )
    throw validation_error( "choose_block: partition does not match variable count" );
  auto w = block_wire_counts( c, p );
  size_t best = 0;
  for ( size_t i = 1; i < w.size(); ++i )
  {
    if ( w[i] < w[best] )
      best = i;
  }
  return best;
}

struct sat_report
{
  uint64_t count{ 0 };
  size_t chosen_block{ 0 }; /* 0-based */
  uint32_t block_size{ 0 };
  uint32_t block_wires{ 0 };
  uint64_t restrictions_enumerated{ 0 };
  bool used_memo{ false };
  uint64_t tree_nodes{ 0 };
  uint64_t tree_visits{ 0 };
  uint64_t tree_useless_leaves{ 0 };
  uint64_t tree_output_leaves{ 0 };
  uint32_t tree_depth{ 0 };
  double elapsed_seconds{ 0.0 };
};

/*! \brief Exact #SAT via block enumeration with a shared memo tree.
 *
 * Exactness does not depend on k or the block style; both only steer reuse.
 * When the chosen block carries more than memo_block_wire_guard wires, each
 * restricted circuit is counted by brute force instead, preserving exactness.
 */
inline sat_report count_sat_memo( comparator_circuit const& c, uint32_t k,
                                  partition_style style = partition_style::consecutive,
                                  uint32_t num_threads = 1 )
{
  validate( c );
  uint32_t const n = c.num_vars;
  if ( n > 63 )
    throw guard_error( "count_sat_memo limited to 63 variables" );
  if ( k == 0 || k > n )
    throw validation_error( "count_sat_memo requires 1 <= k <= n" );

  auto const t0 = std::chrono::steady_clock::now();
  auto partition = block_partition::make( n, k, style );
  size_t const bi = choose_block( c, partition );
  auto const& block = partition.blocks[bi];
  auto const wire_counts = block_wire_counts( c, partition );

  sat_report report;
  report.chosen_block = bi;
  report.block_size = static_cast<uint32_t>( block.size() );
  report.block_wires = wire_counts[bi];

  /* context the restricted circuits will live in: block variables renumbered
   * in ascending order, block-labelled wires kept in original order */
  std::vector<uint32_t> rank_of( n + 1, 0 );
  for ( size_t i = 0; i < block.size(); ++i )
    rank_of[block[i]] = static_cast<uint32_t>( i ) + 1;
  wire_context ctx;
  ctx.num_vars = static_cast<uint32_t>( block.size() );
  for ( auto const& l : c.wires )
  {
    if ( rank_of[l.var] != 0 )
      ctx.labels.push_back( { rank_of[l.var], l.negated } );
  }
  assert( ctx.labels.size() == report.block_wires );

  bool const use_memo =
      report.block_wires >= 1 && report.block_wires <= memo_block_wire_guard && ctx.num_vars <= memo_max_vars;
  if ( !use_memo && report.block_wires > 0 && block.size() > brute_max_vars )
    throw guard_error( "count_sat_memo fallback needs block size at most " + std::to_string( brute_max_vars ) );
  std::unique_ptr<memo_tree> tree;
  if ( use_memo )
    tree = std::make_unique<memo_tree>( ctx, memo_tree::mode_t::lazy );

  std::vector<uint32_t> outside;
  for ( uint32_t v = 1; v <= n; ++v )
  {
    if ( rank_of[v] == 0 )
      outside.push_back( v );
  }
  uint64_t const num_restrictions = pow2( static_cast<uint32_t>( outside.size() ) );
  report.restrictions_enumerated = num_restrictions;
  report.used_memo = use_memo;
  uint64_t const full_block = pow2( static_cast<uint32_t>( block.size() ) );

  uint32_t const workers = num_threads == 0 ? 1 : num_threads;
  std::vector<uint64_t> partial( workers, 0 );
  parallel_for( 0, num_restrictions, workers, [&]( uint32_t worker, uint64_t lo, uint64_t hi ) {
    uint64_t local = 0;
    for ( uint64_t beta = lo; beta < hi; ++beta )
    {
      restriction rho( n );
      for ( size_t j = 0; j < outside.size(); ++j )
        rho.set( outside[j], ( ( beta >> j ) & 1u ) ? rvalue::one : rvalue::zero );
      auto restricted = apply_restriction( c, rho );
      if ( restricted.is_constant() )
      {
        local += restricted.constant_value ? full_block : 0;
      }
      else if ( use_memo )
      {
        assert( restricted.circuit.wires == ctx.labels );
        local += tree->lookup( restricted.circuit ).count;
      }
      else
      {
        local += count_sat_brute( restricted.circuit );
      }
    }
    partial[worker] += local;
  } );

  for ( auto v : partial )
    report.count += v;
  assert( report.count <= pow2( n ) );
  if ( tree )
  {
    auto st = tree->stats();
    report.tree_nodes = st.nodes_filled;
    report.tree_visits = tree->visits();
    report.tree_useless_leaves = st.useless_leaves;
    report.tree_output_leaves = st.output_leaves;
    report.tree_depth = st.max_depth;
  }
  report.elapsed_seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - t0 ).count();
  return report;
}

} // namespace ccirc
