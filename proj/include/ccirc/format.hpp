/*!
  \file format.hpp
  \brief The `ccv1` text format: parser and canonical serializer.

  Format (ASCII, line oriented, `#` starts a comment, tokens whitespace-separated):

      ccv1
      vars <n>
      wires <lit>...        lit := x<i> | ~x<i>
      gate <a> <b>          zero or more; a receives ∧, b receives ∨
      output <w>

  The serializer emits exactly this shape with single spaces and no comments.
*/

#pragma once

#include "circuit.hpp"
#include "common.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace ccirc
{

namespace detail
{

inline std::vector<std::string> tokenize( std::string_view line )
{
  std::vector<std::string> tokens;
  size_t i = 0;
  while ( i < line.size() )
  {
    while ( i < line.size() && ( line[i] == ' ' || line[i] == '\t' || line[i] == '\r' ) )
      ++i;
    if ( i >= line.size() || line[i] == '#' )
      break;
    size_t j = i;
    while ( j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#' )
      ++j;
    tokens.emplace_back( line.substr( i, j - i ) );
    i = j;
  }
  return tokens;
}

inline uint32_t parse_index( std::string const& token, uint64_t line, char const* what )
{
  uint32_t value = 0;
  auto [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
  if ( ec != std::errc() || ptr != token.data() + token.size() || value == 0 )
    throw parse_error( line, std::string( "invalid " ) + what + " '" + token + "'" );
  return value;
}

inline literal parse_literal( std::string const& token, uint64_t line )
{
  std::string_view s( token );
  literal l;
  if ( !s.empty() && s.front() == '~' )
  {
    l.negated = true;
    s.remove_prefix( 1 );
  }
  if ( s.size() < 2 || s.front() != 'x' )
    throw parse_error( line, "invalid literal '" + token + "'" );
  s.remove_prefix( 1 );
  uint32_t var = 0;
  auto [ptr, ec] = std::from_chars( s.data(), s.data() + s.size(), var );
  if ( ec != std::errc() || ptr != s.data() + s.size() || var == 0 )
    throw parse_error( line, "invalid literal '" + token + "'" );
  l.var = var;
  return l;
}

} // namespace detail

inline comparator_circuit parse_circuit( std::string_view text )
{
  comparator_circuit c;
  enum class stage
  {
    header,
    vars,
    wires,
    body,
    done
  } st = stage::header;

  uint64_t line_no = 0;
  uint64_t output_line = 0;
  size_t pos = 0;
  while ( pos <= text.size() )
  {
    size_t eol = text.find( '\n', pos );
    std::string_view line = text.substr( pos, eol == std::string_view::npos ? text.size() - pos : eol - pos );
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    auto tokens = detail::tokenize( line );
    if ( tokens.empty() )
      continue;

    switch ( st )
    {
    case stage::header:
      if ( tokens.size() != 1 || tokens[0] != "ccv1" )
        throw parse_error( line_no, "expected header 'ccv1'" );
      st = stage::vars;
      break;

    case stage::vars:
      if ( tokens.size() != 2 || tokens[0] != "vars" )
        throw parse_error( line_no, "expected 'vars <n>'" );
      c.num_vars = detail::parse_index( tokens[1], line_no, "variable count" );
      st = stage::wires;
      break;

    case stage::wires:
      if ( tokens.size() < 2 || tokens[0] != "wires" )
        throw parse_error( line_no, "expected 'wires <lit>...'" );
      for ( size_t i = 1; i < tokens.size(); ++i )
      {
        literal l = detail::parse_literal( tokens[i], line_no );
        if ( l.var > c.num_vars )
          throw parse_error( line_no, "literal variable x" + std::to_string( l.var ) + " out of range" );
        c.wires.push_back( l );
      }
      st = stage::body;
      break;

    case stage::body:
      if ( tokens[0] == "gate" )
      {
        if ( tokens.size() != 3 )
          throw parse_error( line_no, "expected 'gate <a> <b>'" );
        gate g;
        g.and_wire = detail::parse_index( tokens[1], line_no, "wire index" );
        g.or_wire = detail::parse_index( tokens[2], line_no, "wire index" );
        if ( g.and_wire > c.num_wires() || g.or_wire > c.num_wires() )
          throw parse_error( line_no, "gate wire index out of range" );
        if ( g.and_wire == g.or_wire )
          throw parse_error( line_no, "gate connects wire " + tokens[1] + " to itself" );
        c.gates.push_back( g );
      }
      else if ( tokens[0] == "output" )
      {
        if ( tokens.size() != 2 )
          throw parse_error( line_no, "expected 'output <w>'" );
        c.output = detail::parse_index( tokens[1], line_no, "wire index" );
        if ( c.output > c.num_wires() )
          throw parse_error( line_no, "output wire index out of range" );
        output_line = line_no;
        st = stage::done;
      }
      else
      {
        throw parse_error( line_no, "unexpected directive '" + tokens[0] + "'" );
      }
      break;

    case stage::done:
      throw parse_error( line_no, "content after output line" );
    }
  }

  if ( st != stage::done )
    throw parse_error( line_no, "missing output line" );
  (void)output_line;
  validate( c );
  return c;
}

inline std::string serialize_circuit( comparator_circuit const& c )
{
  std::ostringstream out;
  out << "ccv1\n";
  out << "vars " << c.num_vars << "\n";
  out << "wires";
  for ( auto const& l : c.wires )
    out << ' ' << ( l.negated ? "~x" : "x" ) << l.var;
  out << "\n";
  for ( auto const& g : c.gates )
    out << "gate " << g.and_wire << ' ' << g.or_wire << "\n";
  out << "output " << c.output << "\n";
  return out.str();
}

} // namespace ccirc
