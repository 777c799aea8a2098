#ifndef TAXSIM_GRID_HPP
#define TAXSIM_GRID_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace taxsim {

/// Uniform square-cell finite-volume mesh. The default domain is
/// [-2,2] x [-2,2]; cells must be square (h equal in both directions).
struct Grid2D {
    int nx = 0;
    int ny = 0;
    double xmin = -2.0;
    double xmax = 2.0;
    double ymin = -2.0;
    double ymax = 2.0;
    double h = 0.0;

    Grid2D() = default;
    Grid2D(int nx, int ny,
           double xmin = -2.0, double xmax = 2.0,
           double ymin = -2.0, double ymax = 2.0);

    static Grid2D square(int n) { return Grid2D(n, n); }

    int cells() const { return nx * ny; }
    double cell_area() const { return h * h; }

    /// Row-major flat index, x fastest.
    int index(int i, int j) const { return j * nx + i; }

    /// Center of cell (i,j). Throws std::out_of_range outside the mesh.
    std::array<double, 2> cell_center(int i, int j) const;

    bool operator==(const Grid2D&) const = default;
};

enum class Direction { XMinus, XPlus, YMinus, YPlus };

/// Cell-centered scalar values for one species, row-major with x fastest.
struct ScalarField {
    Grid2D grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid2D& g, double fill = 0.0)
        : grid(g), values(static_cast<std::size_t>(g.cells()), fill) {}

    double& operator()(int i, int j) { return values[static_cast<std::size_t>(grid.index(i, j))]; }
    double operator()(int i, int j) const { return values[static_cast<std::size_t>(grid.index(i, j))]; }
};

/// Neighbor value with homogeneous-Neumann ghost handling: outside the
/// domain the cell's own value is mirrored back (zero-gradient).
double neumann_neighbor(const ScalarField& f, int i, int j, Direction d);

/// Cell-average integral h^2 * sum(values). Summation is a fixed
/// left-to-right pass over storage order so results are reproducible.
double integrate(const ScalarField& f);

struct FieldStats {
    double min = 0.0;
    double max = 0.0;
    double mass = 0.0;
};

FieldStats field_stats(const ScalarField& f);

bool all_finite(const ScalarField& f);

} // namespace taxsim

#endif
