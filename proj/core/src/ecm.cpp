#include "taxsim/ecm.hpp"

#include <algorithm>

#include "taxsim/errors.hpp"

namespace taxsim {

CoarseMatrix random_coarse_matrix(int n, SplitMix64& rng) {
    CoarseMatrix m(n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            m.at(i, j) = rng.next_uniform();
        }
    }
    return m;
}

CoarseMatrix refine_ecm(const CoarseMatrix& coarse, SplitMix64& rng, double noise_amplitude) {
    const int n = coarse.n;
    CoarseMatrix fine(2 * n);
    for (int j = 0; j < 2 * n; ++j) {
        const int cj = j / 2;
        const int cj1 = (cj + 1) % n;
        for (int i = 0; i < 2 * n; ++i) {
            const int ci = i / 2;
            const int ci1 = (ci + 1) % n;
            const double mean = 0.25 * (coarse.at(ci, cj) + coarse.at(ci1, cj) +
                                        coarse.at(ci, cj1) + coarse.at(ci1, cj1));
            const double r = rng.next_uniform();
            fine.at(i, j) = (1.0 + noise_amplitude * (r - 0.5)) * mean;
        }
    }
    return fine;
}

CoarseMatrix generate_random_ecm(std::uint64_t seed, int coarse_n, int target_n,
                                 double noise_amplitude) {
    if (coarse_n < 1 || target_n < coarse_n) {
        throw ConfigError("generate_random_ecm: invalid resolutions");
    }
    int n = coarse_n;
    while (n < target_n) {
        n *= 2;
    }
    if (n != target_n) {
        throw ConfigError("generate_random_ecm: target resolution " + std::to_string(target_n) +
                          " is not reachable from " + std::to_string(coarse_n) + " by doubling");
    }
    SplitMix64 rng(seed);
    CoarseMatrix m = random_coarse_matrix(coarse_n, rng);
    while (m.n < target_n) {
        m = refine_ecm(m, rng, noise_amplitude);
    }
    return m;
}

void rescale(CoarseMatrix& m, double lo, double hi) {
    if (m.values.empty()) {
        return;
    }
    const auto [mn_it, mx_it] = std::minmax_element(m.values.begin(), m.values.end());
    const double mn = *mn_it;
    const double mx = *mx_it;
    if (mx == mn) {
        std::fill(m.values.begin(), m.values.end(), lo); // degenerate range maps to lower bound
        return;
    }
    const double scale = (hi - lo) / (mx - mn);
    for (double& v : m.values) {
        v = lo + (v - mn) * scale;
    }
}

} // namespace taxsim
