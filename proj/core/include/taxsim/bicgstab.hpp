#ifndef TAXSIM_BICGSTAB_HPP
#define TAXSIM_BICGSTAB_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace taxsim {

enum class SolveStatus { Converged, Breakdown, MaxIterations };

struct SolveReport {
    int iterations = 0;
    double residual_norm = 0.0; // final relative 2-norm of b - A x
    SolveStatus status = SolveStatus::Converged;
};

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

inline double norm2(std::span<const double> a) {
    return std::sqrt(dot(a, a));
}

} // namespace detail

/// Preconditioned BiCGSTAB for Op exposing n(), apply(x, y) and
/// diagonal(d). Jacobi preconditioning is used when every diagonal entry is
/// nonzero, the identity otherwise. x carries the initial guess in and the
/// solution out. On a rho/omega breakdown the shadow residual is reset to
/// the current residual once; a repeated breakdown is reported as such.
template <class Op>
SolveReport bicgstab(const Op& A, std::span<const double> b, std::span<double> x,
                     double tol = 1e-10, int max_iter = 500) {
    const std::size_t n = b.size();
    SolveReport report;

    const double norm_b = detail::norm2(b);
    if (norm_b == 0.0) {
        for (auto& xi : x) xi = 0.0;
        return report; // zero rhs: exact zero solution, zero iterations
    }

    std::vector<double> inv_diag(n, 1.0);
    {
        std::vector<double> d(n);
        A.diagonal(d);
        bool all_nonzero = true;
        for (double di : d) {
            if (di == 0.0) {
                all_nonzero = false;
                break;
            }
        }
        if (all_nonzero) {
            for (std::size_t i = 0; i < n; ++i) inv_diag[i] = 1.0 / d[i];
        }
    }
    auto precond = [&](std::span<const double> src, std::span<double> dst) {
        for (std::size_t i = 0; i < n; ++i) dst[i] = inv_diag[i] * src[i];
    };

    std::vector<double> r(n), r_hat(n), p(n, 0.0), v(n, 0.0), p_hat(n), s(n), s_hat(n), t(n),
        tmp(n);

    A.apply(x, tmp);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - tmp[i];
    r_hat = r;

    double rho = 1.0, alpha = 1.0, omega = 1.0;
    double res_norm = detail::norm2(r);
    bool restarted = false;
    const double breakdown_eps = 1e-30;

    for (int iter = 0; iter < max_iter; ++iter) {
        if (res_norm <= tol * norm_b) {
            // confirm with the true residual before declaring convergence
            A.apply(x, tmp);
            for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - tmp[i];
            res_norm = detail::norm2(r);
            if (res_norm <= tol * norm_b) {
                report.iterations = iter;
                report.residual_norm = res_norm / norm_b;
                report.status = SolveStatus::Converged;
                return report;
            }
            r_hat = r; // recursion drifted; restart from the true residual
            std::fill(p.begin(), p.end(), 0.0);
            std::fill(v.begin(), v.end(), 0.0);
            rho = alpha = omega = 1.0;
        }

        const double rho_new = detail::dot(r_hat, r);
        if (std::abs(rho_new) < breakdown_eps * norm_b * norm_b || std::abs(omega) < breakdown_eps) {
            if (restarted) {
                report.iterations = iter;
                report.residual_norm = res_norm / norm_b;
                report.status = SolveStatus::Breakdown;
                return report;
            }
            restarted = true;
            r_hat = r;
            std::fill(p.begin(), p.end(), 0.0);
            std::fill(v.begin(), v.end(), 0.0);
            rho = alpha = omega = 1.0;
            continue;
        }

        const double beta = (rho_new / rho) * (alpha / omega);
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
        precond(p, p_hat);
        A.apply(p_hat, v);
        const double rhv = detail::dot(r_hat, v);
        if (std::abs(rhv) < breakdown_eps * norm_b * norm_b) {
            if (restarted) {
                report.iterations = iter;
                report.residual_norm = res_norm / norm_b;
                report.status = SolveStatus::Breakdown;
                return report;
            }
            restarted = true;
            r_hat = r;
            std::fill(p.begin(), p.end(), 0.0);
            std::fill(v.begin(), v.end(), 0.0);
            rho = alpha = omega = 1.0;
            continue;
        }
        alpha = rho_new / rhv;
        for (std::size_t i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];

        const double s_norm = detail::norm2(s);
        if (s_norm <= tol * norm_b) {
            for (std::size_t i = 0; i < n; ++i) x[i] += alpha * p_hat[i];
            r = s;
            res_norm = s_norm;
            rho = rho_new;
            continue; // convergence confirmed at the top of the loop
        }

        precond(s, s_hat);
        A.apply(s_hat, t);
        const double tt = detail::dot(t, t);
        if (tt == 0.0) {
            omega = 0.0; // triggers the breakdown path next round
        } else {
            omega = detail::dot(t, s) / tt;
        }
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p_hat[i] + omega * s_hat[i];
            r[i] = s[i] - omega * t[i];
        }
        res_norm = detail::norm2(r);
        rho = rho_new;
        report.iterations = iter + 1;
    }

    // final true-residual check after exhausting iterations
    A.apply(x, tmp);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - tmp[i];
    res_norm = detail::norm2(r);
    report.residual_norm = res_norm / norm_b;
    report.status =
        res_norm <= tol * norm_b ? SolveStatus::Converged : SolveStatus::MaxIterations;
    report.iterations = max_iter;
    return report;
}

} // namespace taxsim

#endif
