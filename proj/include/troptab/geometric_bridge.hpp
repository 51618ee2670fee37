#pragma once

#include "troptab/circled_array.hpp"
#include "troptab/tropical_jdt.hpp"
#include "troptab/wmatrix.hpp"

namespace troptab {

// The combinatorial maps re-derived from the generic local maps over MinPlus.

/// phi_k by iterating the discrete Toda step on the columns of W.
PhiResult phi_k_toda(const WMatrix& w, int k);

/// Circled array read off the factorization
/// F(V_N) ... F(V_0) = F_{N+1}(U_{N+1}) ... F_1(U_1), V_j = column j of W,
/// over the same window as circled_array_from_w.
CircledArray circled_array_factorized(const WMatrix& w);

}  // namespace troptab
