#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "diskmap/grid.hpp"
#include "diskmap/level_set.hpp"
#include "diskmap/map_zoo.hpp"

namespace diskmap {

/// Header of the level-curve CSV; the column names are part of the format.
inline constexpr const char* kLevelCurveCsvHeader = "s,Re z,Im z,Re w,Im w,|p|,k,kappa,residual";
inline constexpr const char* kCurvatureMapCsvHeader = "Re z,Im z,slack1,slack3,km,kappa_proxy";

void write_level_curve_csv(std::ostream& out, const LevelCurve& curve);

struct CurvatureMapRow {
    Complex z;
    double slack1 = 0.0;
    double slack3 = 0.0;
    double km = 0.0;
    /// image_curvature where |p| > kNormalFloor; empty otherwise.
    std::optional<double> kappa_proxy;
};

[[nodiscard]] std::vector<CurvatureMapRow> curvature_map(const MapSpec& map, const GridSpec& grid);

/// One row per grid point; an empty kappa_proxy is written as an empty field.
void write_curvature_map_csv(std::ostream& out, const std::vector<CurvatureMapRow>& rows);

/// Two panels: the disk with the traced curve, and the image curve.
void write_level_curve_svg(std::ostream& out, const LevelCurve& curve, const std::string& title);

} // namespace diskmap
