#pragma once

#include <string>
#include <vector>

#include "troptab/circled_array.hpp"
#include "troptab/tableau.hpp"
#include "troptab/wmatrix.hpp"

namespace troptab {

// Rows are separated by "/" or a newline and boxes by spaces. "." is an inner
// box of a skew tableau and "-" an empty row (or an empty value when it is the
// whole input). Malformed input raises ParseError with a character offset.

SkewTableau parse_tableau(const std::string& text);
std::string format_tableau(const SkewTableau& t);

CircledArray parse_circled_array(const std::string& text);
std::string format_circled_array(const CircledArray& m);

WMatrix parse_wmatrix(const std::string& text);
std::string format_wmatrix(const WMatrix& w);

/// "2,1,1,1" or "2 1 1 1".
std::vector<int> parse_int_list(const std::string& text);
std::string format_int_list(const std::vector<int>& v, const std::string& sep = ",");

}  // namespace troptab
