#include "tc/compare.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tc {

double fidelity(const ProbabilityDistribution& a, const ProbabilityDistribution& b) {
    if (a.label() != b.label())
        throw std::invalid_argument("fidelity: distributions index different quantities");
    const double shift = b.origin() - a.origin();
    const long off = std::lround(shift);
    if (std::abs(shift - static_cast<double>(off)) > 1e-9)
        throw std::invalid_argument("fidelity: distributions live on different lattices");

    // overlap window in a's array coordinates
    const long lo = std::max(0L, off);
    const long hi = std::min(static_cast<long>(a.size()) - 1,
                             off + static_cast<long>(b.size()) - 1);
    double f = 0.0;
    for (long k = lo; k <= hi; ++k)
        f += std::sqrt(a.weights()[static_cast<std::size_t>(k)] *
                       b.weights()[static_cast<std::size_t>(k - off)]);
    return std::clamp(f, 0.0, 1.0);
}

RestrictedTrial restricted_trial(const TrialCoefficients& coeffs, double lambda) {
    const double j = coeffs.j();
    const double offset = lambda + j;
    const long k = std::lround(offset);
    if (std::abs(offset - static_cast<double>(k)) > 1e-9 || k < 0)
        throw std::invalid_argument("restricted_trial: lambda must lie on -j, -j+1, ...");
    if (k > coeffs.two_j() + coeffs.nu_max())
        throw std::invalid_argument("restricted_trial: lambda beyond the truncated support");

    const long nu_lo = std::max(0L, k - coeffs.two_j());
    const long nu_hi = std::min(k, coeffs.nu_max());
    std::vector<double> w(static_cast<std::size_t>(nu_hi - nu_lo + 1));
    double mass = 0.0;
    for (long nu = nu_lo; nu <= nu_hi; ++nu) {
        const double p = coeffs.atom_probs()[static_cast<std::size_t>(k - nu)] *
                         coeffs.field_probs()[static_cast<std::size_t>(nu)];
        w[static_cast<std::size_t>(nu - nu_lo)] = p;
        mass += p;
    }
    if (!(mass > 0.0))
        throw std::invalid_argument("restricted_trial: zero mass at the requested lambda");
    for (double& x : w) x /= mass;
    return {lambda, mass,
            ProbabilityDistribution(IndexLabel::PhotonNumber, static_cast<double>(nu_lo),
                                    std::move(w))};
}

ComparisonRecord compare_point(const ModelParams& params, double eps) {
    const CriticalPoint cp = critical_point(params, eps);
    const GroundState gs = find_ground(params);
    const auto [photon_q, matter_q] = reduced_distributions(gs);
    const ProbabilityDistribution matter_sc = occupation_distribution(params, eps);

    ComparisonRecord rec{params,
                         cp.region,
                         observables_sc(params, eps),
                         gs.observables,
                         cp.energy_per_atom,
                         gs.sector.energy_per_atom,
                         fidelity(matter_q, matter_sc),
                         cp.lambda_sc,
                         gs.sector.lambda,
                         gs.lambda_tie};
    return rec;
}

}  // namespace tc
