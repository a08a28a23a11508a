#pragma once

#include <string>

#include <json.hpp>

#include "somino/dyck.hpp"
#include "somino/mseries.hpp"
#include "somino/series.hpp"
#include "somino/tower.hpp"

namespace somino::io {

using json = nlohmann::ordered_json;

// {"widths": [...], "blocks": [{"row":..,"offset":..,"width":..}, ...]},
// blocks sorted by (row, offset).
json tower_to_json(const Tower& t);
Tower tower_from_json(const json& j);

// Canonical serialized form used for deterministic ordering.
std::string tower_key(const Tower& t);

// Coefficients z^0..z^{N-1} as "p/q" strings.
json series_to_json(const Series& s);

// {"vars": m, "maxdeg": N, "terms": [{"exponents": [...], "coefficient": "p/q"}, ...]}
// sorted by (total degree, exponents).
json mseries_to_json(const MSeries& s);

// Header "degree,n_1,...,n_m,coefficient"; integral coefficients printed as
// plain decimal integers.
std::string mseries_to_csv(const MSeries& s);

json path_to_json(const DyckPath& p);
DyckPath path_from_json(const json& j);

// One block per <rect>, ten user units per column, one fill colour per
// width; platform_cols > 0 draws a thin platform bar under row 0.
std::string render_svg(const Tower& t, int platform_cols = 0);

}  // namespace somino::io
