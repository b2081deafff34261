#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ifsecon/box_set.hpp"
#include "ifsecon/chaos_game.hpp"
#include "ifsecon/dimension.hpp"
#include "ifsecon/econ/growth.hpp"
#include "ifsecon/econ/utility.hpp"
#include "ifsecon/ifs_system.hpp"

namespace ifsecon::io {

using nlohmann::json;

// IFS spec:
//   { "dim": 1|2, "bounding_box": [[lo..], [hi..]],
//     "maps": [ {"matrix": [[..]..], "offset": [..]}, .. ],
//     "pi": [..],                 optional
//     "region": [[x, y], ..] }    optional convex invariant polygon (dim 2)
// Malformed or invalid specs throw InvalidArgument.
IfsSystem ifs_from_json(const json& j);
json ifs_to_json(const IfsSystem& sys);
IfsSystem load_ifs(const std::string& path);

// Doubles are written with 17 significant digits so they read back exactly.
std::string format_double(double v);

// BoxSet CSV: first line "epsilon,origin_1[,origin_2]" holding the grid
// values, then one integer cell tuple per line.
void write_box_set(std::ostream& out, const BoxSet& b);
BoxSet read_box_set(std::istream& in);

// PointCloud CSV: one point per line, dim columns, no header.
void write_point_cloud(std::ostream& out, const PointCloud& cloud);
PointCloud read_point_cloud(std::istream& in);

// GrowthPath CSV with header n,k,y,c,i,xi.
void write_growth_path(std::ostream& out, const econ::GrowthPath& path);

json dimension_report_to_json(const DimensionReport& r);

// {"rho", "lambda_a", "lambda_b", "q"}
econ::GrowthParams growth_params_from_json(const json& j);
json growth_params_to_json(const econ::GrowthParams& g);

// {"rhos": [..], "pi": [..], "k0"} and {"rho", "rs": [..], "pi": [..], "k0"}
econ::MultiplicativeUtilityParams multiplicative_params_from_json(const json& j);
econ::AffineUtilityParams affine_params_from_json(const json& j);

json load_json(const std::string& path);

}  // namespace ifsecon::io
