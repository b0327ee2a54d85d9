#include "tc/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "tc/errors.hpp"

namespace tc {

namespace {

double inf_norm(std::span<const double> d, std::span<const double> e) {
    const std::size_t n = d.size();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(d[i]);
        if (i > 0) row += std::abs(e[i - 1]);
        if (i + 1 < n) row += std::abs(e[i]);
        best = std::max(best, row);
    }
    return best;
}

// Deterministic start vector; plain xorshift64.
std::vector<double> start_vector(std::size_t n) {
    std::uint64_t s = 0x9E3779B97F4A7C15ull;
    std::vector<double> v(n);
    for (double& x : v) {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        x = static_cast<double>(s >> 11) / 9007199254740992.0 - 0.5;
    }
    return v;
}

void normalize(std::vector<double>& v) {
    double nrm = 0.0;
    for (double x : v) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) throw NumericalError("tridiag: zero vector in inverse iteration");
    for (double& x : v) x /= nrm;
}

// Partially pivoted LU of (T - sigma I); U gains a second superdiagonal.
struct ShiftedFactor {
    std::vector<double> u0, u1, u2;  // main, first, second superdiagonal of U
    std::vector<double> mult;        // row multipliers
    std::vector<char> swapped;       // pivot swap per step
    std::size_t n = 0;

    ShiftedFactor(std::span<const double> d, std::span<const double> e, double sigma,
                  double pivmin) {
        n = d.size();
        u0.resize(n);
        u1.assign(n, 0.0);
        u2.assign(n, 0.0);
        mult.assign(n, 0.0);
        swapped.assign(n, 0);

        // rows are kept as (a b c): a = current pivot column entry
        double a = d[0] - sigma;
        double b = n > 1 ? e[0] : 0.0;
        double c = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double sub = e[i];              // row i+1 entry under the pivot
            const double dn = d[i + 1] - sigma;   // next row diagonal
            const double en = i + 2 < n ? e[i + 1] : 0.0;
            if (std::abs(sub) > std::abs(a)) {
                swapped[i] = 1;
                u0[i] = sub;
                u1[i] = dn;
                u2[i] = en;
                const double m = a / sub;
                mult[i] = m;
                a = b - m * dn;
                b = c - m * en;
                c = 0.0;
            } else {
                swapped[i] = 0;
                double piv = a;
                if (std::abs(piv) < pivmin) piv = piv < 0.0 ? -pivmin : pivmin;
                u0[i] = piv;
                u1[i] = b;
                u2[i] = c;
                const double m = sub / piv;
                mult[i] = m;
                a = dn - m * b;
                b = en - m * c;
                c = 0.0;
            }
        }
        if (std::abs(a) < pivmin) a = a < 0.0 ? -pivmin : pivmin;
        u0[n - 1] = a;
    }

    // solve (T - sigma I) x = rhs in place
    void solve(std::vector<double>& x) const {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swapped[i]) std::swap(x[i], x[i + 1]);
            x[i + 1] -= mult[i] * x[i];
        }
        for (std::size_t ii = n; ii-- > 0;) {
            double s = x[ii];
            if (ii + 1 < n) s -= u1[ii] * x[ii + 1];
            if (ii + 2 < n) s -= u2[ii] * x[ii + 2];
            x[ii] = s / u0[ii];
        }
    }
};

double rayleigh(std::span<const double> d, std::span<const double> e,
                const std::vector<double>& v) {
    const std::size_t n = d.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += d[i] * v[i] * v[i];
        if (i + 1 < n) s += 2.0 * e[i] * v[i] * v[i + 1];
    }
    return s;
}

double residual_norm(std::span<const double> d, std::span<const double> e,
                     const std::vector<double>& v, double lambda) {
    const std::size_t n = d.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = (d[i] - lambda) * v[i];
        if (i > 0) r += e[i - 1] * v[i - 1];
        if (i + 1 < n) r += e[i] * v[i + 1];
        s += r * r;
    }
    return std::sqrt(s);
}

}  // namespace

int tridiag_count_below(std::span<const double> diag, std::span<const double> offdiag, double x) {
    const std::size_t n = diag.size();
    double emax = 0.0;
    for (double v : offdiag) emax = std::max(emax, std::abs(v));
    const double pivmin =
        std::max(std::numeric_limits<double>::min(),
                 std::numeric_limits<double>::epsilon() * emax * emax);
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        double denom = q;
        if (std::abs(denom) < pivmin) denom = denom < 0.0 ? -pivmin : pivmin;
        q = diag[i] - x - offdiag[i - 1] * offdiag[i - 1] / denom;
        if (q < 0.0) ++count;
    }
    return count;
}

TridiagEigenPair tridiag_smallest(std::span<const double> diag, std::span<const double> offdiag) {
    const std::size_t n = diag.size();
    if (n == 0) throw std::invalid_argument("tridiag_smallest: empty matrix");
    if (offdiag.size() + 1 != n)
        throw std::invalid_argument("tridiag_smallest: offdiag size must be n-1");
    if (n == 1) return {diag[0], {1.0}, 0.0};

    // Gershgorin bracket
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(offdiag[i - 1]);
        if (i + 1 < n) r += std::abs(offdiag[i]);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }

    const double scale = std::max(1.0, inf_norm(diag, offdiag));
    const double eps = std::numeric_limits<double>::epsilon();

    // bisection onto the smallest eigenvalue: count(lo) == 0, count(hi) >= 1
    double a = lo, b = hi;
    for (int it = 0; it < 200 && (b - a) > 2.0 * eps * scale; ++it) {
        const double mid = 0.5 * (a + b);
        if (tridiag_count_below(diag, offdiag, mid) >= 1)
            b = mid;
        else
            a = mid;
    }
    double sigma = 0.5 * (a + b);

    const double pivmin = eps * scale * 1e-3;
    const double target = 1e-12 * scale;

    std::vector<double> v = start_vector(n);
    normalize(v);
    double lambda = sigma;
    double res = std::numeric_limits<double>::infinity();
    bool factored = false;
    ShiftedFactor factor(diag, offdiag, sigma, pivmin);
    factored = true;
    for (int it = 0; it < 40; ++it) {
        if (!factored) {
            factor = ShiftedFactor(diag, offdiag, sigma, pivmin);
            factored = true;
        }
        factor.solve(v);
        normalize(v);
        lambda = rayleigh(diag, offdiag, v);
        res = residual_norm(diag, offdiag, v, lambda);
        if (res <= target) break;
        if (it >= 3) {
            // Rayleigh refinement for hard cases
            sigma = lambda;
            factored = false;
        }
    }
    if (!(res <= 10.0 * target))
        throw NumericalError("tridiag_smallest: inverse iteration did not converge");

    // deterministic sign: first entry of largest magnitude made positive
    std::size_t imax = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    if (v[imax] < 0.0)
        for (double& x : v) x = -x;

    return {lambda, std::move(v), res};
}

}  // namespace tc
