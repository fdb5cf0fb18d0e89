#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "ncdoc/rewrite/relation_set.hpp"

namespace ncdoc::rewrite {

/// Weyl algebra on X[1..d], P[1..d]: [X_i, P_j] = delta_ij, both blocks commutative.
RelationSet flat_weyl(int d);
/// Time series J-shift algebra: X^(n) J = J X^(n+1) for n < horizon.
RelationSet jshift(int horizon = 8);
/// Single coordinate x with x J = J (x + delta).
RelationSet shift_coordinate(const Rational& delta = Rational(1, 2));
/// Two-dimensional metric algebra: [X_i, X_j^(1)] = g_ij, metric block with
/// inverse gi and derivative tower, free velocity/acceleration block.
RelationSet metric_d2();

nlohmann::json to_json(const RelationSet& R);
RelationSet relation_set_from_json(const nlohmann::json& j);
/// Reads a definition file; errors name the file.
RelationSet load_relation_set(const std::filesystem::path& path);
void save_relation_set(const RelationSet& R, const std::filesystem::path& path);

/// Directory that holds shipped fixtures ($NCDOC_DATA_DIR or the build-time default).
std::filesystem::path data_dir();
std::filesystem::path fixture_path(const std::string& name);

}  // namespace ncdoc::rewrite
