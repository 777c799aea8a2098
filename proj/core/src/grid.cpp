#include "taxsim/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace taxsim {

Grid2D::Grid2D(int nx_, int ny_, double xmin_, double xmax_, double ymin_, double ymax_)
    : nx(nx_), ny(ny_), xmin(xmin_), xmax(xmax_), ymin(ymin_), ymax(ymax_) {
    if (nx < 2 || ny < 2) {
        throw std::invalid_argument("Grid2D: nx and ny must be at least 2");
    }
    const double hx = (xmax - xmin) / nx;
    const double hy = (ymax - ymin) / ny;
    if (!(hx > 0.0) || !(hy > 0.0)) {
        throw std::invalid_argument("Grid2D: domain bounds must be increasing");
    }
    if (std::abs(hx - hy) > 1e-12 * std::max(hx, hy)) {
        throw std::invalid_argument("Grid2D: cells must be square (hx != hy)");
    }
    h = hx;
}

std::array<double, 2> Grid2D::cell_center(int i, int j) const {
    if (i < 0 || i >= nx || j < 0 || j >= ny) {
        throw std::out_of_range("Grid2D::cell_center: index (" + std::to_string(i) + "," +
                                std::to_string(j) + ") outside " + std::to_string(nx) + "x" +
                                std::to_string(ny) + " mesh");
    }
    return {xmin + (i + 0.5) * h, ymin + (j + 0.5) * h};
}

double neumann_neighbor(const ScalarField& f, int i, int j, Direction d) {
    const Grid2D& g = f.grid;
    int ni = i;
    int nj = j;
    switch (d) {
        case Direction::XMinus: ni = i - 1; break;
        case Direction::XPlus: ni = i + 1; break;
        case Direction::YMinus: nj = j - 1; break;
        case Direction::YPlus: nj = j + 1; break;
    }
    if (ni < 0 || ni >= g.nx || nj < 0 || nj >= g.ny) {
        return f(i, j); // zero-gradient mirror
    }
    return f(ni, nj);
}

double integrate(const ScalarField& f) {
    double sum = 0.0;
    for (double v : f.values) {
        sum += v;
    }
    return f.grid.cell_area() * sum;
}

FieldStats field_stats(const ScalarField& f) {
    FieldStats s;
    if (f.values.empty()) {
        return s;
    }
    s.min = f.values.front();
    s.max = f.values.front();
    double sum = 0.0;
    for (double v : f.values) {
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
        sum += v;
    }
    s.mass = f.grid.cell_area() * sum;
    return s;
}

bool all_finite(const ScalarField& f) {
    for (double v : f.values) {
        if (!std::isfinite(v)) {
            return false;
        }
    }
    return true;
}

} // namespace taxsim
