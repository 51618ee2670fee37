#pragma once

#include <json.hpp>

#include "troptab/boxball.hpp"
#include "troptab/circled_array.hpp"
#include "troptab/lr_correspondence.hpp"
#include "troptab/tropical_jdt.hpp"
#include "troptab/wmatrix.hpp"

namespace troptab {

using Json = nlohmann::json;

/// {"d": d, "N": N, "w": [[...], ...]}
Json to_json(const WMatrix& w);
WMatrix wmatrix_from_json(const Json& j);

/// {"start_row", "end_row", "q"}
Json to_json(const QPath& p);

/// {"left_rows", "right_rows", "w_rows", "q_columns"}
Json to_json(const RectificationDiagram& d);

/// {"rows": [[...]], "L": L} with L[i-1][j-1] the number of i's in row j.
Json to_json(const CircledArray& m);
CircledArray circled_array_from_json(const Json& j);

/// {"L": lengths, "W": gaps}
Json to_json(const Runs& r);
Runs runs_from_json(const Json& j);

/// {"T": text, "U": text}
Json to_json(const LRPair& p);
LRPair lr_pair_from_json(const Json& j);

/// {"base": [...], "labels": [[row, col], ...]} with labels in order 1..m.
Json to_json(const StickingTableau& r);
StickingTableau sticking_from_json(const Json& j);

}  // namespace troptab
