#pragma once

#include <string>
#include <string_view>

#include "bqs/paths.hpp"
#include "bqs/polynomial.hpp"

namespace bqs {

// "x{i}" / "y{i}" when p = 2, otherwise "x{i}_{j}".
std::string variable_name(const Alphabet& alphabet, int position, int cls);

// Canonical text: terms in lex-descending order, e.g.
// "x2 y3^2 - y2 x3 y3 + x3 y3^2".  The zero polynomial prints as "0".
std::string to_string(const Polynomial& f);

// Reads the canonical syntax back.  Factors may be separated by spaces or
// '*'; bare "x{i}" means class 1 when p <= 2.  Throws ParseError (with the
// byte offset) on bad syntax, an index outside [1, n] or a class outside
// [1, p].
Polynomial parse_polynomial(std::string_view text, Alphabet alphabet);

// "0,0,1,0,0,2" -> p-vector; the entry count must be a multiple of p.  The
// empty string is the empty vector.
PVector parse_vector_literal(std::string_view text, int p);

}  // namespace bqs
