#ifndef TAXSIM_ECM_HPP
#define TAXSIM_ECM_HPP

#include <cstdint>
#include <vector>

#include "taxsim/rng.hpp"

namespace taxsim {

/// Square matrix of tissue densities used while building the structured
/// random ECM. Values start in [0,1) and pick up at most a 0.1% relative
/// noise factor per refinement level.
struct CoarseMatrix {
    int n = 0;
    std::vector<double> values; // row-major n*n

    CoarseMatrix() = default;
    CoarseMatrix(int n_, double fill = 0.0)
        : n(n_), values(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), fill) {}

    double& at(int i, int j) { return values[static_cast<std::size_t>(j) * n + i]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(j) * n + i]; }
};

/// Level-0 matrix: n*n fresh uniform [0,1) draws in row-major order.
CoarseMatrix random_coarse_matrix(int n, SplitMix64& rng);

/// One refinement level: resolution doubles and each fine cell receives the
/// mean of its 2x2 periodic coarse neighborhood times a noise factor
/// 1 + noise_amplitude*(r - 0.5), r a fresh uniform draw per fine cell in
/// row-major order.
CoarseMatrix refine_ecm(const CoarseMatrix& coarse, SplitMix64& rng,
                        double noise_amplitude = 0.002);

/// Inductive construction: coarse_n*coarse_n uniform draws refined by
/// doubling until target_n. Throws ConfigError when target_n is not
/// coarse_n * 2^k.
CoarseMatrix generate_random_ecm(std::uint64_t seed, int coarse_n, int target_n,
                                 double noise_amplitude = 0.002);

/// Affine rescale so min -> lo and max -> hi; a constant matrix maps to lo.
void rescale(CoarseMatrix& m, double lo, double hi);

} // namespace taxsim

#endif
