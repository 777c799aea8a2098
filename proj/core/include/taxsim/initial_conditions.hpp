#ifndef TAXSIM_INITIAL_CONDITIONS_HPP
#define TAXSIM_INITIAL_CONDITIONS_HPP

#include <cstdint>

#include "taxsim/state.hpp"

namespace taxsim {

struct IcPoint {
    double m0 = 0.0;
    double p0 = 0.0;
    double v0 = 0.0;
};

/// Tumor seed profile exp(-(x1^2+x2^2)/eps).
double gaussian_bump(double x1, double x2, double eps = 0.3);

/// Pointwise ECM-with-stripes values: p0 vanishes on the vertical band
/// |x1| < 0.05 and the diagonal band |x2-x1| < 0.1, m0 = 0.05*p0 and
/// v0 = 1 - m0 - p0 floored at 0 (the Gaussian shoulder can push m0+p0
/// slightly above 1 next to a stripe).
IcPoint stripes_point(double x1, double x2, double eps = 0.3);

/// Stripes initial conditions sampled at every cell center.
SimState ic_stripes(const Grid2D& grid, double eps = 0.3);

struct VRange {
    double lo = 0.0;
    double hi = 1.0;
};

/// Randomly-structured-ECM initial conditions: Gaussian tumor seed plus a
/// seeded structured random tissue rescaled into v_range and capped so that
/// m0 + p0 + v0 <= 1 in every cell. Grids whose side count is not 8*2^k are
/// served by nearest-cell sampling of the next larger generated matrix.
SimState ic_random(const Grid2D& grid, std::uint64_t seed, double eps = 0.3,
                   VRange v_range = {});

} // namespace taxsim

#endif
