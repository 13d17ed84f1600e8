#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "diskmap/errors.hpp"
#include "diskmap/jet.hpp"

namespace diskmap {

/// Polar sample grid: radii rmax * i / radial for i = 1..radial, angles
/// 2 pi j / angular for j = 0..angular-1. The origin is not a grid point.
struct GridSpec {
    std::size_t radial = 40;
    std::size_t angular = 40;
    double rmax = 0.9;

    void validate() const
    {
        if (radial == 0 || angular == 0) throw Error(ErrorKind::InvalidArgument, "grid counts must be positive");
        if (!(rmax > 0.0 && rmax < 1.0)) throw Error(ErrorKind::InvalidArgument, "grid rmax must lie in (0, 1)");
    }

    /// Points in radial-major order; reductions over the grid use this order.
    [[nodiscard]] std::vector<Complex> points() const
    {
        validate();
        std::vector<Complex> out;
        out.reserve(radial * angular);
        for (std::size_t i = 1; i <= radial; ++i) {
            const double r = rmax * static_cast<double>(i) / static_cast<double>(radial);
            for (std::size_t j = 0; j < angular; ++j) {
                const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angular);
                out.push_back(std::polar(r, t));
            }
        }
        return out;
    }
};

} // namespace diskmap
