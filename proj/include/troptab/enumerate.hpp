#pragma once

#include <vector>

#include "troptab/tableau.hpp"

namespace troptab {

/// Partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions(int n);
/// Partitions contained in `outer` (including the empty one and outer).
std::vector<Partition> sub_partitions(const Partition& outer);

/// Semistandard fillings of outer/inner with entries 1..m.
std::vector<SkewTableau> skew_tableaux(const Partition& outer, const Partition& inner, int m);
std::vector<SkewTableau> straight_tableaux(const Partition& shape, int m);
/// All straight tableaux with at most `max_boxes` boxes and entries <= m.
std::vector<SkewTableau> straight_tableaux_up_to(int max_boxes, int m);

/// Standard fillings of outer/inner with 1..n.
std::vector<SkewTableau> standard_tableaux(const Partition& outer, const Partition& inner = {});

/// Words of the given length over 1..m.
std::vector<std::vector<int>> words(int length, int m);

}  // namespace troptab
