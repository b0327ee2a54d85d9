#ifndef TC_MODEL_HPP
#define TC_MODEL_HPP

#include <string_view>

namespace tc {

/// Default tolerance for separatrix classification. The energy-surface
/// Hessian is singular on the separatrix, so callers that land within eps
/// of it are routed to the explicit boundary branches.
inline constexpr double kBoundaryEps = 1e-12;

/// Phase of the ground state in the (gamma, omega_a) control plane.
/// The two parabolae omega_a = +/- gamma^2 split it into three open
/// regions; points within eps of them get one of the boundary tags.
enum class PhaseRegion {
    NorthPole,       // omega_a > gamma^2: all atoms in the lower level, no photons
    SouthPole,       // omega_a < -gamma^2: all atoms excited, no photons
    Parallel,        // |omega_a| < gamma^2: mixed matter-field condensate
    BoundaryArm,     // on an arm of the separatrix
    BoundaryVertex,  // gamma = omega_a = 0
};

std::string_view to_string(PhaseRegion region);

/// Immutable parameter set for the N-atom single-mode model in units of the
/// field frequency. Stores both the level splitting omega_a and the detuning
/// delta = 1 - omega_a, whichever way it was constructed. j = N/2 throughout
/// (symmetric atomic configuration), kept as the integer 2j internally.
class ModelParams {
public:
    static ModelParams from_omega_a(int n_atoms, double gamma, double omega_a, double phi = 0.0);
    static ModelParams from_delta(int n_atoms, double gamma, double delta, double phi = 0.0);

    int n_atoms() const { return n_atoms_; }
    int two_j() const { return n_atoms_; }
    double j() const { return 0.5 * n_atoms_; }
    double gamma() const { return gamma_; }
    double omega_a() const { return omega_a_; }
    double delta() const { return delta_; }
    double phi() const { return phi_; }

    /// Same physical point with a different coupling; used by sweep drivers.
    ModelParams with_gamma(double gamma) const;

private:
    ModelParams(int n_atoms, double gamma, double omega_a, double delta, double phi);

    int n_atoms_;
    double gamma_;
    double omega_a_;
    double delta_;
    double phi_;
};

/// Total classification of (gamma, omega_a) into the five tags above.
/// Depends on gamma only through gamma^2.
PhaseRegion classify_region(const ModelParams& params, double eps = kBoundaryEps);
PhaseRegion classify_region(double gamma, double omega_a, double eps = kBoundaryEps);

}  // namespace tc

#endif
