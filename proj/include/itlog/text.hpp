#pragma once

// Plain-text syntax for elements, series and formal polynomial forms.
//
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | 'l' '(' int ')' ['^' exponent] | '(' expr ')'
//             | 'r' ['^' digits]                      (forms only)
//   exponent := ['-'] (rational | '(' expr ')' | 'r' ['^' digits])
//   rational := digits ['/' digits]
//
// Printing emits exactly this syntax, so format/parse round-trips. Series
// additionally print powers of y, which the parser never accepts.

#include <string>
#include <string_view>

#include "itlog/element.hpp"
#include "itlog/rform.hpp"
#include "itlog/series.hpp"

namespace itlog {

std::string format_element(const Element& e);
std::string format_series(const YSeries& s);
std::string format_rpoly(const RPoly& p);
std::string format_rform(const RForm& f);

/// Throws ParseError (with byte offset) on malformed input, a zero
/// denominator, or any use of `r`.
Element parse_element(std::string_view text);

/// Summands are lowered without grouping; call rform_reduce to group.
RForm parse_rform(std::string_view text);

}  // namespace itlog
