#pragma once

#include <string>
#include <string_view>

#include "gaussq/bipoly.hpp"
#include "gaussq/poly.hpp"
#include "gaussq/series.hpp"

namespace gaussq {

// Canonical text form: terms `c*x^a*t^b` in ascending (x, t) exponent order,
// joined by " + " / " - ". Unit coefficients and zero/unit exponents are
// omitted; the zero polynomial prints as "0". Coefficients print as p or p/q.
std::string to_string(const Rational& r);
std::string to_string(const UniPoly& p);
std::string to_string(const BiPoly& p);
// Truncated series: the polynomial part followed by " + O(var^(order+1))".
std::string to_string(const TruncSeries& s);

// Parsers accept the canonical grammar with arbitrary whitespace, terms in
// any order, and repeated factors (x*x). ParseError on anything else.
UniPoly parse_unipoly(std::string_view text, char var);
BiPoly parse_bipoly(std::string_view text);

}  // namespace gaussq
