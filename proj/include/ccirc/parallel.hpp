/*!
  \file parallel.hpp
  \brief Minimal deterministic fork-join helper.
*/

#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace ccirc
{

/*! \brief Runs f(worker, begin, end) on contiguous chunks of [begin, end).
 *
 * Results must be merged by the caller with an associative operation so that
 * the outcome is independent of the worker count.
 */
template<typename F>
void parallel_for( uint64_t begin, uint64_t end, uint32_t num_workers, F&& f )
{
  if ( num_workers <= 1 || end - begin <= 1 )
  {
    f( 0u, begin, end );
    return;
  }
  uint64_t const total = end - begin;
  if ( num_workers > total )
    num_workers = static_cast<uint32_t>( total );
  uint64_t const chunk = total / num_workers;
  uint64_t const extra = total % num_workers;
  std::vector<std::thread> workers;
  workers.reserve( num_workers );
  uint64_t at = begin;
  for ( uint32_t w = 0; w < num_workers; ++w )
  {
    uint64_t const size = chunk + ( w < extra ? 1 : 0 );
    uint64_t const lo = at;
    uint64_t const hi = at + size;
    at = hi;
    workers.emplace_back( [&f, w, lo, hi]() { f( w, lo, hi ); } );
  }
  for ( auto& t : workers )
    t.join();
}

} // namespace ccirc
