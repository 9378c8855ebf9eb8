/*!
  \file memo_tree.hpp
  \brief Memoization tree over useful-gate prefixes for a fixed wire labelling.

  Internal nodes are gate sequences in which every gate is useful with respect
  to its prefix.  A child keyed by a gate that would be useless is a leaf
  storing the gate's type; a child keyed by an output wire is a leaf storing
  the number of satisfying assignments of the prefix circuit with that output.
  Looking up a circuit walks its gates down the tree; hitting a useless-gate
  leaf removes that gate from the circuit (re-wiring for TYPE-2) and resumes
  from the same node.  The walk ends in an output leaf, which yields both the
  exact satisfying-assignment count and an equivalent all-useful circuit.

  Trees materialize lazily by default; node construction is once-per-node and
  safe under concurrent lookups.
*/

#pragma once

#include "circuit.hpp"
#include "common.hpp"
#include "simplify.hpp"

#include <atomic>
#include <bit>
#include <cassert>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace ccirc
{

inline constexpr uint32_t memo_max_vars = 20;
inline constexpr uint32_t memo_eager_max_wires = 4; /* eager trees blow up as ℓ^O(ℓ²) */

/*! \brief Fixed wire labelling over k variables. */
struct wire_context
{
  uint32_t num_vars{ 0 };
  std::vector<literal> labels;

  uint32_t num_wires() const { return static_cast<uint32_t>( labels.size() ); }

  /*! \brief Depth cap ℓ0(ℓ0−1)/2 + 2, counting nodes on a root-to-leaf path. */
  uint32_t depth_bound() const
  {
    uint32_t l = num_wires();
    return l * ( l - 1 ) / 2 + 2;
  }
};

class memo_tree
{
public:
  enum class mode_t
  {
    lazy,
    eager
  };

  struct lookup_result
  {
    uint64_t count{ 0 };
    comparator_circuit simplified;
    uint64_t steps{ 0 };
  };

  struct stats_t
  {
    uint64_t nodes_filled{ 0 };
    uint64_t nodes_allocated{ 0 };
    uint64_t useless_leaves{ 0 };
    uint64_t output_leaves{ 0 };
    uint32_t max_depth{ 0 }; /* nodes on the deepest observed root-to-leaf path */
  };

  memo_tree( wire_context ctx, mode_t mode = mode_t::lazy ) : ctx_( std::move( ctx ) ), mode_( mode )
  {
    if ( ctx_.num_vars == 0 || ctx_.num_vars > memo_max_vars )
      throw guard_error( "memo tree limited to " + std::to_string( memo_max_vars ) + " variables" );
    if ( ctx_.labels.empty() )
      throw validation_error( "memo tree requires at least one wire" );
    for ( auto const& l : ctx_.labels )
    {
      if ( l.var == 0 || l.var > ctx_.num_vars )
        throw validation_error( "memo tree label variable out of range" );
    }
    if ( mode_ == mode_t::eager && ctx_.num_wires() > memo_eager_max_wires )
      throw guard_error( "eager memo tree limited to " + std::to_string( memo_eager_max_wires ) + " wires" );

    root_ = allocate( {}, 1 );
    if ( mode_ == mode_t::eager )
    {
      std::vector<node*> stack{ root_ };
      while ( !stack.empty() )
      {
        node* nd = stack.back();
        stack.pop_back();
        fill( nd );
        for ( auto const& slot : nd->slots )
        {
          if ( slot.kind == child_kind::internal )
            stack.push_back( slot.sub );
        }
      }
    }
  }

  memo_tree( memo_tree const& ) = delete;
  memo_tree& operator=( memo_tree const& ) = delete;

  wire_context const& context() const { return ctx_; }
  mode_t mode() const { return mode_; }

  /*! \brief Exact #SAT count and an equivalent circuit with ≤ ℓ0(ℓ0−1)/2 gates.
   *
   * The circuit's wires must match the tree's labelling exactly.
   */
  lookup_result lookup( comparator_circuit const& c ) const
  {
    if ( c.num_vars != ctx_.num_vars || c.wires != ctx_.labels )
      throw validation_error( "memo lookup: circuit wires do not match the tree context" );
    validate( c );

    std::vector<gate> work( c.gates );
    uint32_t out = c.output;
    node* cur = root_;
    size_t gi = 0;
    uint64_t steps = 0;

    for ( ;; )
    {
      fill( cur );
      if ( gi < work.size() )
      {
        gate const g = work[gi];
        child_slot const& slot = cur->slots[gate_slot( g )];
        ++steps;
        visits_.fetch_add( 1, std::memory_order_relaxed );
        if ( slot.kind == child_kind::internal )
        {
          cur = slot.sub;
          ++gi;
        }
        else
        {
          assert( slot.kind == child_kind::useless1 || slot.kind == child_kind::useless2 );
          work.erase( work.begin() + static_cast<ptrdiff_t>( gi ) );
          if ( slot.kind == child_kind::useless2 )
          {
            for ( size_t j = gi; j < work.size(); ++j )
            {
              if ( work[j].and_wire == g.and_wire )
                work[j].and_wire = g.or_wire;
              else if ( work[j].and_wire == g.or_wire )
                work[j].and_wire = g.and_wire;
              if ( work[j].or_wire == g.and_wire )
                work[j].or_wire = g.or_wire;
              else if ( work[j].or_wire == g.or_wire )
                work[j].or_wire = g.and_wire;
            }
            if ( out == g.and_wire )
              out = g.or_wire;
            else if ( out == g.or_wire )
              out = g.and_wire;
          }
          /* resume from the same node with the updated gate list */
        }
      }
      else
      {
        child_slot const& slot = cur->slots[output_slot( out )];
        ++steps;
        visits_.fetch_add( 1, std::memory_order_relaxed );
        assert( slot.kind == child_kind::output );
        lookup_result res;
        res.count = slot.count;
        res.steps = steps;
        res.simplified.num_vars = ctx_.num_vars;
        res.simplified.wires = ctx_.labels;
        res.simplified.gates = cur->path;
        res.simplified.output = out;
        return res;
      }
    }
  }

  stats_t stats() const
  {
    std::lock_guard<std::mutex> lk( mutex_ );
    return stats_;
  }

  /*! \brief Number of nodes materialized so far (each node is filled exactly once). */
  uint64_t materializations() const
  {
    std::lock_guard<std::mutex> lk( mutex_ );
    return stats_.nodes_filled;
  }

  uint64_t visits() const { return visits_.load( std::memory_order_relaxed ); }

private:
  enum class child_kind : uint8_t
  {
    invalid,
    internal,
    useless1,
    useless2,
    output
  };

  struct node;

  struct child_slot
  {
    child_kind kind{ child_kind::invalid };
    uint64_t count{ 0 }; /* output leaves */
    node* sub{ nullptr };
  };

  struct node
  {
    std::vector<gate> path;
    uint32_t depth{ 1 };
    std::atomic<bool> filled{ false };
    std::vector<child_slot> slots;
  };

  size_t gate_slot( gate const& g ) const
  {
    return static_cast<size_t>( g.and_wire - 1 ) * ctx_.num_wires() + ( g.or_wire - 1 );
  }

  size_t output_slot( uint32_t wire ) const
  {
    return static_cast<size_t>( ctx_.num_wires() ) * ctx_.num_wires() + ( wire - 1 );
  }

  node* allocate( std::vector<gate> path, uint32_t depth ) const
  {
    node& nd = pool_.emplace_back();
    nd.path = std::move( path );
    nd.depth = depth;
    ++stats_.nodes_allocated;
    return &nd;
  }

  /* Materializes all children of a node: one exhaustive sweep yields the
   * profile of every candidate gate and the one-count of every wire. */
  void fill( node* nd ) const
  {
    if ( nd->filled.load( std::memory_order_acquire ) )
      return;
    std::lock_guard<std::mutex> lk( mutex_ );
    if ( nd->filled.load( std::memory_order_relaxed ) )
      return;

    uint32_t const l = ctx_.num_wires();
    assert( nd->depth <= l * ( l - 1 ) / 2 + 1 ); /* all-useful prefixes cannot be longer */

    std::vector<gate_profile> prof( static_cast<size_t>( l ) * l );
    std::vector<uint64_t> ones( l, 0 );
    std::vector<uint64_t> words( l );
    uint64_t const mask = sim_block_mask( ctx_.num_vars );
    for ( uint64_t b = 0; b < sim_num_blocks( ctx_.num_vars ); ++b )
    {
      for ( uint32_t w = 0; w < l; ++w )
      {
        uint64_t x = sim_var_word( ctx_.labels[w].var, b );
        words[w] = ctx_.labels[w].negated ? ~x : x;
      }
      for ( auto const& g : nd->path )
      {
        uint64_t u = words[g.and_wire - 1];
        uint64_t w = words[g.or_wire - 1];
        words[g.and_wire - 1] = u & w;
        words[g.or_wire - 1] = u | w;
      }
      for ( uint32_t a = 0; a < l; ++a )
      {
        for ( uint32_t b2 = 0; b2 < l; ++b2 )
        {
          if ( a == b2 )
            continue;
          auto& p = prof[static_cast<size_t>( a ) * l + b2];
          if ( ( ~words[a] & words[b2] & mask ) != 0 )
            p.seen_01 = true;
          if ( ( words[a] & ~words[b2] & mask ) != 0 )
            p.seen_10 = true;
        }
      }
      for ( uint32_t w = 0; w < l; ++w )
        ones[w] += std::popcount( words[w] & mask );
    }

    nd->slots.assign( static_cast<size_t>( l ) * l + l, child_slot{} );
    for ( uint32_t a = 1; a <= l; ++a )
    {
      for ( uint32_t b2 = 1; b2 <= l; ++b2 )
      {
        if ( a == b2 )
          continue;
        gate g{ a, b2 };
        auto cls = classify_profile( prof[static_cast<size_t>( a - 1 ) * l + ( b2 - 1 )] );
        child_slot& slot = nd->slots[gate_slot( g )];
        if ( cls.useful )
        {
          std::vector<gate> sub_path( nd->path );
          sub_path.push_back( g );
          slot.sub = allocate( std::move( sub_path ), nd->depth + 1 );
          slot.kind = child_kind::internal;
        }
        else
        {
          slot.kind = cls.type == useless_type::type1 ? child_kind::useless1 : child_kind::useless2;
          ++stats_.useless_leaves;
        }
      }
    }
    for ( uint32_t w = 1; w <= l; ++w )
    {
      child_slot& slot = nd->slots[output_slot( w )];
      slot.kind = child_kind::output;
      slot.count = ones[w - 1];
      ++stats_.output_leaves;
    }

    ++stats_.nodes_filled;
    if ( nd->depth + 1 > stats_.max_depth )
      stats_.max_depth = nd->depth + 1;
    assert( stats_.max_depth <= ctx_.depth_bound() );

    nd->filled.store( true, std::memory_order_release );
  }

  wire_context ctx_;
  mode_t mode_;
  node* root_{ nullptr };
  mutable std::deque<node> pool_;
  mutable std::mutex mutex_;
  mutable stats_t stats_;
  mutable std::atomic<uint64_t> visits_{ 0 };
};

} // namespace ccirc
