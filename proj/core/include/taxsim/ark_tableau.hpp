#ifndef TAXSIM_ARK_TABLEAU_HPP
#define TAXSIM_ARK_TABLEAU_HPP

#include <array>

namespace taxsim {

/// Coefficients of the 4-stage additive scheme ARK3(2)4L[2]SA: a strictly
/// lower-triangular explicit part paired with a stiffly accurate ESDIRK
/// part (equal diagonal gamma from stage 2 on). Both parts share the weight
/// vector b, which equals the last row of a_imp.
struct ButcherTableauPair {
    static constexpr int stages = 4;
    std::array<std::array<double, 4>, 4> a_exp{};
    std::array<std::array<double, 4>, 4> a_imp{};
    std::array<double, 4> b{};
    std::array<double, 4> c{};
};

/// The tableau constants as double-precision evaluations of the exact
/// rationals.
const ButcherTableauPair& ark324_tableau();

} // namespace taxsim

#endif
