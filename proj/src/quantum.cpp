#include "tc/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tc/errors.hpp"
#include "tc/semiclassical.hpp"
#include "tc/tridiag.hpp"

namespace tc {

namespace {

constexpr double kPi = 3.14159265358979323846;

// lambda -> exact sector index k = lambda + j >= 0
long sector_index(const ModelParams& params, double lambda) {
    const double offset = lambda + params.j();
    const long k = std::lround(offset);
    if (std::abs(offset - static_cast<double>(k)) > 1e-9)
        throw std::invalid_argument("lambda must lie on the lattice -j, -j+1, ...");
    if (k < 0) throw std::invalid_argument("lambda must be >= -j");
    return k;
}

SectorSolution solve_index(const ModelParams& params, long k) {
    return solve_sector(build_sector(params, -params.j() + static_cast<double>(k)));
}

ObservableSet sector_observables(const SectorSolution& sol, const ModelParams& params) {
    const double j = params.j();
    const double n_atoms = params.n_atoms();
    double n1 = 0.0, n2 = 0.0, jz1 = 0.0, jz2 = 0.0, ent = 0.0;
    for (std::size_t i = 0; i < sol.coeffs.size(); ++i) {
        const double p = sol.coeffs[i] * sol.coeffs[i];
        const double nu = static_cast<double>(sol.nu_min) + static_cast<double>(i);
        const double m = sol.lambda - nu;
        n1 += p * nu;
        n2 += p * nu * nu;
        jz1 += p * m;
        jz2 += p * m * m;
        if (p > 0.0) ent -= p * std::log(p);
    }
    ObservableSet o{};
    o.jz_per_n = jz1 / n_atoms;
    o.var_jz = std::max(0.0, jz2 - jz1 * jz1);
    o.var_jx = 0.5 * (j * (j + 1.0) - jz2);  // <Jx^2> = <Jy^2> = (J^2 - Jz^2)/2
    o.var_jy = o.var_jx;
    o.n_per_n = n1 / n_atoms;
    o.var_n = std::max(0.0, n2 - n1 * n1);
    o.var_q = n1 + 0.5;
    o.var_p = n1 + 0.5;
    o.entropy_nats = std::max(0.0, ent);
    o.squeezing_xi = std::sqrt(std::max(0.0, j + 1.0 - jz2 / j));
    return o;
}

}  // namespace

SectorHamiltonian build_sector(const ModelParams& params, double lambda) {
    const long k = sector_index(params, lambda);
    const long n = params.n_atoms();
    const double j = params.j();
    const double delta = params.delta();
    const double gamma = params.gamma();

    SectorHamiltonian h;
    h.lambda = lambda;
    h.nu_min = std::max(0L, k - n);  // lambda - j = k - 2j
    h.nu_max = k;
    const long d = h.nu_max - h.nu_min + 1;
    h.diag.resize(static_cast<std::size_t>(d));
    h.offdiag.resize(static_cast<std::size_t>(d - 1));

    const double dn = static_cast<double>(n);
    const double coupling = gamma / (dn * std::sqrt(dn));
    for (long i = 0; i < d; ++i) {
        const double nu = static_cast<double>(h.nu_min + i);
        const double m = lambda - nu;
        h.diag[static_cast<std::size_t>(i)] = lambda / dn - delta * m / dn;
        if (i + 1 < d)
            h.offdiag[static_cast<std::size_t>(i)] =
                coupling * std::sqrt(nu + 1.0) * std::sqrt((j + m) * (j - m + 1.0));
    }
    return h;
}

SectorSolution solve_sector(const SectorHamiltonian& h) {
    if (h.diag.empty()) throw std::invalid_argument("solve_sector: empty sector");
    if (h.diag.size() == 1)
        return {h.lambda, h.diag[0], h.nu_min, {1.0}, 0.0};
    TridiagEigenPair pair = tridiag_smallest(h.diag, h.offdiag);
    return {h.lambda, pair.value, h.nu_min, std::move(pair.vector), pair.residual};
}

GroundState find_ground(const ModelParams& params, const ScanPolicy& policy) {
    if (policy.consecutive_increases < 1 || policy.degeneracy_tol < 0.0)
        throw std::invalid_argument("find_ground: bad scan policy");

    const CriticalPoint cp = critical_point(params);
    const ObservableSet sc = observables_sc(params);
    const double var_lambda = sc.var_n + sc.var_jz;
    const double j = params.j();

    long k_start = std::lround(cp.lambda_sc + j);
    k_start = std::max(0L, k_start);
    const long k_cap =
        k_start + static_cast<long>(std::ceil(std::max(50.0, 10.0 * std::sqrt(var_lambda))));

    const int need = policy.consecutive_increases;
    const double dtol = policy.degeneracy_tol;

    SectorSolution best = solve_index(params, k_start);
    const double e_start = best.energy_per_atom;
    long k_lo = k_start, k_hi = k_start;
    bool tie = false;

    const auto consider = [&](SectorSolution&& sol) {
        if (sol.energy_per_atom < best.energy_per_atom - dtol) {
            best = std::move(sol);
            tie = false;
        } else if (std::abs(sol.energy_per_atom - best.energy_per_atom) <= dtol) {
            tie = true;
            if (sol.lambda < best.lambda) best = std::move(sol);
        }
    };

    // upward
    {
        int rises = 0;
        double prev = e_start;
        for (long k = k_start + 1;; ++k) {
            if (k > k_cap)
                throw NumericalError("find_ground: lambda scan cap reached at lambda = " +
                                     std::to_string(-j + static_cast<double>(k_cap)));
            SectorSolution sol = solve_index(params, k);
            k_hi = k;
            const double e = sol.energy_per_atom;
            const bool rising = e > prev && e > best.energy_per_atom + dtol;
            consider(std::move(sol));
            rises = rising ? rises + 1 : 0;
            prev = e;
            if (rises >= need) break;
        }
    }
    // downward
    if (k_start > 0) {
        int rises = 0;
        double prev = e_start;
        for (long k = k_start - 1; k >= 0; --k) {
            SectorSolution sol = solve_index(params, k);
            k_lo = k;
            const double e = sol.energy_per_atom;
            const bool rising = e > prev && e > best.energy_per_atom + dtol;
            consider(std::move(sol));
            rises = rising ? rises + 1 : 0;
            prev = e;
            if (rises >= need) break;
        }
    }

    GroundState gs;
    gs.sector = std::move(best);
    gs.n_atoms = params.n_atoms();
    gs.lambda_lo = -j + static_cast<double>(k_lo);
    gs.lambda_hi = -j + static_cast<double>(k_hi);
    gs.lambda_tie = tie;
    gs.observables = sector_observables(gs.sector, params);
    return gs;
}

ObservableSet observables_q(const GroundState& gs, const ModelParams& params) {
    if (gs.n_atoms != params.n_atoms())
        throw std::invalid_argument("observables_q: ground state refers to a different N");
    return sector_observables(gs.sector, params);
}

std::pair<ProbabilityDistribution, ProbabilityDistribution> reduced_distributions(
    const GroundState& gs) {
    const auto& c = gs.sector.coeffs;
    std::vector<double> photon(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) photon[i] = c[i] * c[i];
    // matter index n = lambda + N/2 - nu runs opposite to nu
    std::vector<double> matter(photon.rbegin(), photon.rend());
    return {ProbabilityDistribution(IndexLabel::PhotonNumber,
                                    static_cast<double>(gs.sector.nu_min), std::move(photon)),
            ProbabilityDistribution(IndexLabel::ExcitedAtoms, 0.0, std::move(matter))};
}

double analytic_sector_energy(const ModelParams& params, double lambda) {
    const long k = sector_index(params, lambda);
    const double n = params.n_atoms();
    const double delta = params.delta();
    const double gamma = params.gamma();

    switch (k) {
        case 0:
            return -0.5 * (1.0 - delta);
        case 1:
            return (2.0 - n - delta + n * delta - std::sqrt(4.0 * gamma * gamma + delta * delta)) /
                   (2.0 * n);
        case 2: {
            if (params.n_atoms() < 2)
                throw std::invalid_argument("analytic_sector_energy: lambda = -j+2 needs N >= 2");
            // Cardano trigonometric form of the 3x3 block's lowest root
            const double g2 = gamma * gamma;
            const double x = (4.0 * n - 2.0) * g2 / n + delta * delta;
            const double disc = std::max(0.0, x * x * x - 27.0 * g2 * g2 * delta * delta / (n * n));
            const double phi = std::atan2(n * std::sqrt(disc), 3.0 * std::sqrt(3.0) * g2 * delta);
            return (n * delta - n - 2.0 * delta + 4.0) / (2.0 * n) -
                   2.0 * std::sqrt(x) * std::sin((2.0 * phi + kPi) / 6.0) / (std::sqrt(3.0) * n);
        }
        default:
            throw std::invalid_argument(
                "analytic_sector_energy: closed forms exist only for lambda = -j, -j+1, -j+2");
    }
}

}  // namespace tc
