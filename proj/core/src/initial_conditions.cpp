#include "taxsim/initial_conditions.hpp"

#include <algorithm>
#include <cmath>

#include "taxsim/ecm.hpp"

namespace taxsim {

double gaussian_bump(double x1, double x2, double eps) {
    return std::exp(-(x1 * x1 + x2 * x2) / eps);
}

IcPoint stripes_point(double x1, double x2, double eps) {
    IcPoint out;
    const bool on_stripe = std::abs(x1) < 0.05 || std::abs(x2 - x1) < 0.1;
    out.p0 = on_stripe ? 0.0 : gaussian_bump(x1, x2, eps);
    out.m0 = 0.05 * out.p0;
    out.v0 = std::max(0.0, 1.0 - out.m0 - out.p0);
    return out;
}

SimState ic_stripes(const Grid2D& grid, double eps) {
    SimState s(grid);
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const auto [x, y] = grid.cell_center(i, j);
            const IcPoint pt = stripes_point(x, y, eps);
            s.m(i, j) = pt.m0;
            s.p(i, j) = pt.p0;
            s.v(i, j) = pt.v0;
        }
    }
    return s;
}

namespace {

int ecm_resolution_for(const Grid2D& grid) {
    const int need = std::max(grid.nx, grid.ny);
    int n = 8;
    while (n < need) {
        n *= 2;
    }
    return n;
}

} // namespace

SimState ic_random(const Grid2D& grid, std::uint64_t seed, double eps, VRange v_range) {
    const int target_n = ecm_resolution_for(grid);
    CoarseMatrix ecm = generate_random_ecm(seed, 8, target_n);
    rescale(ecm, v_range.lo, v_range.hi);

    const double ecm_h = (grid.xmax - grid.xmin) / ecm.n;
    SimState s(grid);
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            const auto [x, y] = grid.cell_center(i, j);
            const double p0 = gaussian_bump(x, y, eps);
            const double m0 = 0.05 * p0;
            // nearest ECM cell (exact identity when the resolutions match)
            const int ei = std::clamp(static_cast<int>((x - grid.xmin) / ecm_h), 0, ecm.n - 1);
            const int ej = std::clamp(static_cast<int>((y - grid.ymin) / ecm_h), 0, ecm.n - 1);
            const double v_raw = ecm.at(ei, ej);
            s.m(i, j) = m0;
            s.p(i, j) = p0;
            s.v(i, j) = std::max(0.0, std::min(v_raw, 1.0 - m0 - p0));
        }
    }
    return s;
}

} // namespace taxsim
