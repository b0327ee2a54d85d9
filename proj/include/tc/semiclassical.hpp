#ifndef TC_SEMICLASSICAL_HPP
#define TC_SEMICLASSICAL_HPP

#include <array>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "tc/distribution.hpp"
#include "tc/model.hpp"
#include "tc/observables.hpp"

namespace tc {

/// Point of the coherent-state chart: field quadrature expectations (q, p)
/// and Bloch-sphere angles (theta, phi) of the atomic coherent state.
struct SurfacePoint {
    double q = 0.0;
    double p = 0.0;
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2*pi)

    /// Normalizing constructor: clamps theta into [0, pi], wraps phi.
    static SurfacePoint clamped(double q, double p, double theta, double phi);
};

struct EnergyPoint {
    double energy_per_atom;  // <H> in the trial state
    double lambda;           // <a+a + Jz> in the trial state (absolute)
};

/// Trial-state energy surface
///   E = lambda/N + Delta (j/N) cos(theta) + gamma/sqrt(2N) sin(theta) (q cos(phi) - p sin(phi)),
///   lambda = (q^2 + p^2)/2 - j cos(theta).
/// The raw overload evaluates the analytic formula for any finite theta
/// (it is smooth and periodic), which finite-difference probes rely on.
EnergyPoint energy_surface(const ModelParams& params, double q, double p, double theta, double phi);
EnergyPoint energy_surface(const ModelParams& params, const SurfacePoint& point);

/// Minimum of the energy surface for the current region, with the closed-form
/// Hessian spectrum in the (q, p, theta) chart at phi fixed.
///
/// On BoundaryArm/BoundaryVertex the limiting North/South values are returned
/// and `degenerate_hessian` is set (the smallest eigenvalue vanishes there).
struct CriticalPoint {
    PhaseRegion region;
    double theta_c;
    double q_c;  // = -sqrt(j) gamma sin(theta_c) cos(phi)
    double p_c;  // = +sqrt(j) gamma sin(theta_c) sin(phi)
    double energy_per_atom;          // E0/N
    double lambda_sc;                // <Lambda> at the minimum (absolute)
    std::array<double, 3> hessian_eigs;  // {1/(2j), plus branch, minus branch}
    bool degenerate_hessian;
};

CriticalPoint critical_point(const ModelParams& params, double eps = kBoundaryEps);

/// All closed-form ground-state observables of the trial state.
/// The coherent atomic state is never squeezed, so squeezing_xi == 1.
ObservableSet observables_sc(const ModelParams& params, double eps = kBoundaryEps);

/// Distribution of the number of excited atoms: binomial over n in [0, N]
/// with success probability (1 - cos(theta_c))/2. Point masses at the poles.
ProbabilityDistribution occupation_distribution(const ModelParams& params, double eps = kBoundaryEps);

/// Photon truncation policy for the trial-state expansion.
struct NuMaxPolicy {
    double tail_target = 1e-12;
    long hard_cap = 20000;
    long initial = 0;  // 0: start from mean + 12 sigma + 25
};

/// Expansion amplitudes A(m, nu) of the trial state over |nu> x |j, m>.
/// The trial state is a product of a field coherent state and an atomic
/// coherent state, so A factorizes into an atomic amplitude (binomial in
/// j+m) and a field amplitude (Poissonian in nu); both are kept in
/// magnitude form computed through log-gamma, with the phases reattached
/// in amplitude(). Outside the Parallel region the state collapses to the
/// single product |0> x |j, -j> (North) or |0> x |j, +j> (South).
class TrialCoefficients {
public:
    double j() const { return 0.5 * two_j_; }
    int two_j() const { return two_j_; }
    double phi() const { return phi_; }
    PhaseRegion region() const { return region_; }
    long nu_max() const { return static_cast<long>(field_probs_.size()) - 1; }
    double tail_mass() const { return tail_mass_; }

    /// A(m, nu); m must lie on the lattice -j, -j+1, ..., +j.
    std::complex<double> amplitude(double m, long nu) const;
    /// |A(m, nu)|^2 (zero outside the stored range).
    double prob(double m, long nu) const;

    /// Marginal |amplitude|^2 over the atomic index i = m + j.
    const std::vector<double>& atom_probs() const { return atom_probs_; }
    /// Marginal |amplitude|^2 over the photon number nu.
    const std::vector<double>& field_probs() const { return field_probs_; }

    /// Sum of |A|^2 over the stored range, >= 1 - tail_mass.
    double total_mass() const;

private:
    friend TrialCoefficients trial_coefficients(const ModelParams&, const NuMaxPolicy&);
    TrialCoefficients() = default;

    int two_j_ = 0;
    double phi_ = 0.0;
    PhaseRegion region_ = PhaseRegion::NorthPole;
    double gamma_sign_ = 1.0;  // sign of (-gamma)^nu factor
    std::vector<double> atom_mags_;   // |atomic amplitude| at i = m + j
    std::vector<double> field_mags_;  // |field amplitude| at nu
    std::vector<double> atom_probs_;
    std::vector<double> field_probs_;
    double tail_mass_ = 0.0;
};

TrialCoefficients trial_coefficients(const ModelParams& params, const NuMaxPolicy& policy = {});

/// Weights of the conserved excitation number lambda = m + nu in the trial
/// state, P(lambda) = sum_nu |A(lambda - nu, nu)|^2, with moments taken over
/// the truncated support.
struct TrialLambdaDistribution {
    ProbabilityDistribution distribution;
    double mean;
    double stddev;
};

TrialLambdaDistribution trial_lambda_distribution(const TrialCoefficients& coeffs);

/// Ehrenfest order of the ground-energy branch change along a path through
/// control-parameter space. The path s -> (gamma, omega_a) is probed with
/// four-point one-sided stencils on each side of s0; the order is the lowest
/// derivative (0th, 1st, 2nd) whose one-sided limits differ by more than tol.
enum class TransitionOrder { None, First, Second };

struct TransitionProbe {
    TransitionOrder order;
    PhaseRegion region_left;
    PhaseRegion region_right;
    std::array<double, 3> left;   // E, dE/ds, d2E/ds2 extrapolated to s0-
    std::array<double, 3> right;  // same from s0+
};

using ParamPath = std::function<std::pair<double, double>(double)>;  // s -> (gamma, omega_a)

TransitionProbe transition_order(const ParamPath& path, double s0, double h = 1e-3,
                                 double tol = 1e-2, double eps = kBoundaryEps);

/// Minimum trial-state energy per atom at a raw control-space point
/// (independent of N). Boundary points take the limiting pole value.
double ground_energy_sc(double gamma, double omega_a, double eps = kBoundaryEps);

/// theta_c of the minimum at a raw control-space point: 0 / pi at the poles,
/// arccos(omega_a / gamma^2) in between, limiting value on the separatrix.
double critical_theta(double gamma, double omega_a, double eps = kBoundaryEps);

/// Parameter values where the region tag changes along path(s), s in
/// [s_lo, s_hi], located to ~1e-12 by bisection on a uniform pre-scan of
/// n_probe intervals.
std::vector<double> find_region_crossings(const ParamPath& path, double s_lo, double s_hi,
                                          int n_probe = 1000, double eps = kBoundaryEps);

}  // namespace tc

#endif
