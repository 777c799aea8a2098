#ifndef TAXSIM_STATE_HPP
#define TAXSIM_STATE_HPP

#include <optional>

#include "taxsim/grid.hpp"

namespace taxsim {

/// Cell-centered fields of all active species at one time instant.
/// The acidity field h is present only in the acidity-driven variant.
struct SimState {
    ScalarField m;
    ScalarField p;
    ScalarField v;
    std::optional<ScalarField> h;
    double t = 0.0;

    SimState() = default;
    explicit SimState(const Grid2D& g, bool with_acidity = false)
        : m(g), p(g), v(g), t(0.0) {
        if (with_acidity) {
            h.emplace(g);
        }
    }

    const Grid2D& grid() const { return m.grid; }
    bool has_acidity() const { return h.has_value(); }
};

inline bool all_finite(const SimState& s) {
    return all_finite(s.m) && all_finite(s.p) && all_finite(s.v) &&
           (!s.h || all_finite(*s.h));
}

} // namespace taxsim

#endif
