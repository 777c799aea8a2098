#include "taxsim/ark_tableau.hpp"

namespace taxsim {

const ButcherTableauPair& ark324_tableau() {
    static const ButcherTableauPair t = [] {
        ButcherTableauPair tb;
        const double gamma = 1767732205903.0 / 4055673282236.0;

        tb.c = {0.0, 1767732205903.0 / 2027836641118.0, 3.0 / 5.0, 1.0};

        tb.a_exp[1][0] = 1767732205903.0 / 2027836641118.0;
        tb.a_exp[2][0] = 5535828885825.0 / 10492691773637.0;
        tb.a_exp[2][1] = 788022342437.0 / 10882634858940.0;
        tb.a_exp[3][0] = 6485989280629.0 / 16251701735622.0;
        tb.a_exp[3][1] = -4246266847089.0 / 9704473918619.0;
        tb.a_exp[3][2] = 10755448449292.0 / 10357097424841.0;

        tb.a_imp[1][0] = gamma;
        tb.a_imp[1][1] = gamma;
        tb.a_imp[2][0] = 2746238789719.0 / 10658868560708.0;
        tb.a_imp[2][1] = -640167445237.0 / 6845629431997.0;
        tb.a_imp[2][2] = gamma;
        tb.a_imp[3][0] = 1471266399579.0 / 7840856788654.0;
        tb.a_imp[3][1] = -4482444167858.0 / 7529755066697.0;
        tb.a_imp[3][2] = 11266239266428.0 / 11593286722821.0;
        tb.a_imp[3][3] = gamma;

        tb.b = {1471266399579.0 / 7840856788654.0, -4482444167858.0 / 7529755066697.0,
                11266239266428.0 / 11593286722821.0, gamma};
        return tb;
    }();
    return t;
}

} // namespace taxsim
