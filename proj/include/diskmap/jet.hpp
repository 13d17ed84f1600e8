#pragma once

#include <complex>

namespace diskmap {

using Complex = std::complex<double>;

/// Value and first three derivatives of a map at a base point z.
///
/// Third order is the ceiling: the Schwarzian needs f''' and nothing above it.
struct Jet {
    Complex z;
    Complex f0;
    Complex f1;
    Complex f2;
    Complex f3;
    // |c_M| |z|^M for series-backed jets, 0 for closed forms.
    double tail_bound = 0.0;
};

} // namespace diskmap
