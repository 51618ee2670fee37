#pragma once

// Readable gtest failure output for library types.

#include <ostream>

#include "troptab/circled_array.hpp"
#include "troptab/tableau.hpp"
#include "troptab/text_format.hpp"
#include "troptab/wmatrix.hpp"

namespace troptab {

inline void PrintTo(const SkewTableau& t, std::ostream* os) { *os << "{" << format_tableau(t) << "}"; }
inline void PrintTo(const CircledArray& m, std::ostream* os) { *os << "{" << format_circled_array(m) << "}"; }
inline void PrintTo(const WMatrix& w, std::ostream* os) { *os << "[" << format_wmatrix(w) << "]"; }

}  // namespace troptab
