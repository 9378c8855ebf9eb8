/*!
  \file common.hpp
  \brief Error types and small shared utilities.
*/

#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ccirc
{

/*! \brief Raised on malformed inputs (bad files, bad parameters, contract misuse).
 *
 * The CLI maps this to exit code 1.
 */
class validation_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Raised when an operation exceeds its scale guard (e.g. a 2^n sweep with n too large).
 *
 * The CLI maps this to exit code 2.
 */
class guard_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief Parse failure in a text format; carries the 1-based line number. */
class parse_error : public validation_error
{
public:
  parse_error( uint64_t line, std::string const& msg )
      : validation_error( "line " + std::to_string( line ) + ": " + msg ), line_( line )
  {
  }

  uint64_t line() const { return line_; }

private:
  uint64_t line_;
};

/*! \brief Exact nonnegative fraction, kept in lowest terms. */
struct rational
{
  uint64_t num{ 0 };
  uint64_t den{ 1 };

  static rational of( uint64_t n, uint64_t d )
  {
    if ( d == 0 )
      throw validation_error( "rational: zero denominator" );
    uint64_t g = std::gcd( n, d );
    if ( g == 0 )
      g = 1;
    return rational{ n / g, d / g };
  }

  double to_double() const { return static_cast<double>( num ) / static_cast<double>( den ); }

  bool operator==( rational const& other ) const = default;
};

/*! \brief Mixing function used to derive per-trial seeds from a master seed and a counter. */
inline uint64_t splitmix64( uint64_t x )
{
  x += 0x9e3779b97f4a7c15ull;
  x = ( x ^ ( x >> 30 ) ) * 0xbf58476d1ce4e5b9ull;
  x = ( x ^ ( x >> 27 ) ) * 0x94d049bb133111ebull;
  return x ^ ( x >> 31 );
}

inline uint64_t pow2( uint32_t e )
{
  if ( e >= 64 )
    throw guard_error( "2^" + std::to_string( e ) + " does not fit in 64 bits" );
  return uint64_t( 1 ) << e;
}

} // namespace ccirc
