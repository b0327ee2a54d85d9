// Test-side reference implementations, independent of the library's
// computational paths: dense full-space Hamiltonian, finite-difference
// derivatives of the energy surface, and direct distribution sums.
#ifndef TC_TESTS_ORACLES_HPP
#define TC_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "tc/model.hpp"
#include "tc/semiclassical.hpp"

namespace oracles {

// Binomial pmf by multiplicative recurrence (no log-gamma).
inline std::vector<double> binomial_pmf(int n, double p) {
    std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
    if (p <= 0.0) {
        w.front() = 1.0;
        return w;
    }
    if (p >= 1.0) {
        w.back() = 1.0;
        return w;
    }
    // C(n,k) built stepwise; evaluate each term from scratch in long double
    long double choose = 1.0L;
    for (int k = 0; k <= n; ++k) {
        const long double term = choose * std::pow(static_cast<long double>(p), k) *
                                 std::pow(static_cast<long double>(1.0 - p), n - k);
        w[static_cast<std::size_t>(k)] = static_cast<double>(term);
        choose = choose * (n - k) / (k + 1.0L);
    }
    return w;
}

inline double entropy_nats(const std::vector<double>& w) {
    double s = 0.0;
    for (double p : w)
        if (p > 0.0) s -= p * std::log(p);
    return s;
}

// Dense Hamiltonian on the full product basis |nu> x |j, m>, nu <= nu_cut.
// Basis index = nu * (N + 1) + (m + j). Matrix elements come from the
// generic ladder rules, not from the sector-restricted construction.
inline Eigen::MatrixXd full_space_hamiltonian(int n_atoms, double delta, double gamma,
                                              int nu_cut) {
    const double j = 0.5 * n_atoms;
    const int m_states = n_atoms + 1;
    const int dim = (nu_cut + 1) * m_states;
    const double n = n_atoms;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int nu = 0; nu <= nu_cut; ++nu) {
        for (int im = 0; im < m_states; ++im) {
            const double m = -j + im;
            const int idx = nu * m_states + im;
            h(idx, idx) = (nu + m) / n - delta * m / n;
            if (nu + 1 <= nu_cut && im - 1 >= 0) {
                // a+ J- : |nu, m> -> |nu+1, m-1>
                const double val = gamma / (n * std::sqrt(n)) * std::sqrt(nu + 1.0) *
                                   std::sqrt(j * (j + 1.0) - m * (m - 1.0));
                const int to = (nu + 1) * m_states + (im - 1);
                h(to, idx) += val;
                h(idx, to) += val;
            }
        }
    }
    return h;
}

// Rows/cols of the full-space matrix belonging to excitation number
// lambda = -j + k, ordered by ascending nu.
inline std::vector<int> lambda_block_indices(int n_atoms, int nu_cut, int k) {
    std::vector<int> idx;
    const int m_states = n_atoms + 1;
    for (int nu = 0; nu <= nu_cut; ++nu) {
        const int im = k - nu;  // nu + m + j = k
        if (im >= 0 && im < m_states) idx.push_back(nu * m_states + im);
    }
    return idx;
}

// Central-difference gradient of the energy surface in (q, p, theta).
inline std::array<double, 3> fd_gradient(const tc::ModelParams& params, double q, double p,
                                         double theta, double phi, double h = 1e-5) {
    const auto f = [&](double a, double b, double c) {
        return tc::energy_surface(params, a, b, c, phi).energy_per_atom;
    };
    return {(f(q + h, p, theta) - f(q - h, p, theta)) / (2.0 * h),
            (f(q, p + h, theta) - f(q, p - h, theta)) / (2.0 * h),
            (f(q, p, theta + h) - f(q, p, theta - h)) / (2.0 * h)};
}

// Numerical 3x3 Hessian in (q, p, theta) at fixed phi, Richardson-refined.
inline Eigen::Matrix3d fd_hessian(const tc::ModelParams& params, double q, double p, double theta,
                                  double phi, double h = 2e-4) {
    const auto f = [&](const Eigen::Vector3d& x) {
        return tc::energy_surface(params, x[0], x[1], x[2], phi).energy_per_atom;
    };
    const auto hess_at = [&](double step) {
        Eigen::Matrix3d m;
        const Eigen::Vector3d x0(q, p, theta);
        for (int a = 0; a < 3; ++a) {
            for (int b = a; b < 3; ++b) {
                Eigen::Vector3d pp = x0, pm = x0, mp = x0, mm = x0;
                pp[a] += step; pp[b] += step;
                pm[a] += step; pm[b] -= step;
                mp[a] -= step; mp[b] += step;
                mm[a] -= step; mm[b] -= step;
                const double v = (f(pp) - f(pm) - f(mp) + f(mm)) / (4.0 * step * step);
                m(a, b) = v;
                m(b, a) = v;
            }
        }
        return m;
    };
    const Eigen::Matrix3d coarse = hess_at(2.0 * h);
    const Eigen::Matrix3d fine = hess_at(h);
    return (4.0 * fine - coarse) / 3.0;
}

inline std::mt19937 rng(unsigned seed = 20240117u) { return std::mt19937(seed); }

}  // namespace oracles

#endif
