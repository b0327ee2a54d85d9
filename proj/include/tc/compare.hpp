#ifndef TC_COMPARE_HPP
#define TC_COMPARE_HPP

#include "tc/distribution.hpp"
#include "tc/model.hpp"
#include "tc/observables.hpp"
#include "tc/quantum.hpp"
#include "tc/semiclassical.hpp"

namespace tc {

/// Bhattacharyya overlap sum_n sqrt(a_n b_n) between two distributions on
/// the same lattice, clipped to [0, 1]. Summation runs over the overlap of
/// the supports (mass outside either support contributes zero), which makes
/// the operation symmetric. Mismatched labels or lattices are an error.
double fidelity(const ProbabilityDistribution& a, const ProbabilityDistribution& b);

/// Trial state cut down to a single excitation number: the photon weights
/// |A(lambda - nu, nu)|^2 renormalized to 1, together with the probability
/// mass `weight` this lambda carries in the full trial state.
struct RestrictedTrial {
    double lambda;
    double weight;
    ProbabilityDistribution photon_probs;
};

RestrictedTrial restricted_trial(const TrialCoefficients& coeffs, double lambda);

/// Side-by-side record of both pipelines at a single parameter point.
struct ComparisonRecord {
    ModelParams params;
    PhaseRegion region;
    ObservableSet sc;
    ObservableSet q;
    double e_sc;       // semiclassical minimum energy per atom
    double e_q;        // exact ground energy per atom
    double fidelity;   // matter-distribution overlap, in [0, 1]
    double lambda_sc;  // <Lambda> at the semiclassical minimum
    double lambda_q;   // sector of the exact ground state
    bool lambda_tie;
};

ComparisonRecord compare_point(const ModelParams& params, double eps = kBoundaryEps);

}  // namespace tc

#endif
