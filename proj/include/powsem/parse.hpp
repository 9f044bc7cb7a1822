#pragma once

#include "powsem/monomial.hpp"
#include "powsem/series.hpp"

#include <string>
#include <vector>

namespace powsem {

// Series literals: terms over the atoms `z`, integers, `p/q`, and
// `zeta(m)`, combined with + - * / ^ and parentheses. A trailing
// `+ O(z^N)` marks the series as known through precision N only, matching
// the rendering produced by Series::str(); without it the literal is an
// exact polynomial. Division is by nonzero constants only.
Series parse_series(const std::string& text);

// series literal that must denote a composition-semigroup element:
// zero constant term and order >= 2
Series parse_generator(const std::string& text);

// single-term literal c*z^d with d >= 2
Monomial parse_monomial(const std::string& text);

// constant literal (a cyclotomic number)
Cyclo parse_cyclo(const std::string& text);

// splits file content into literal lines, dropping blank lines and
// '#' comments
std::vector<std::string> literal_lines(const std::string& content);

} // namespace powsem
