#ifndef TC_QUANTUM_HPP
#define TC_QUANTUM_HPP

#include <utility>
#include <vector>

#include "tc/distribution.hpp"
#include "tc/model.hpp"
#include "tc/observables.hpp"

namespace tc {

/// Invariant block of the Hamiltonian at fixed excitation number lambda,
/// spanned by |nu> x |j, lambda - nu> with nu ascending. Symmetric
/// tridiagonal:
///   diag[k]    = lambda/N - Delta (lambda - nu_k)/N
///   offdiag[k] = gamma/(N sqrt(N)) sqrt(nu_k + 1) sqrt((j + m_k)(j - m_k + 1)),
/// m_k = lambda - nu_k. Dimension lambda + j + 1 up to lambda = j, then 2j + 1.
///
/// lambda lives on the lattice -j, -j+1, ... (half-integers when N is odd)
/// and is validated against it.
struct SectorHamiltonian {
    double lambda;
    long nu_min;  // max(0, lambda - j)
    long nu_max;  // lambda + j
    std::vector<double> diag;
    std::vector<double> offdiag;

    long dim() const { return static_cast<long>(diag.size()); }
};

SectorHamiltonian build_sector(const ModelParams& params, double lambda);

/// Ground eigenpair of one block. coeffs has unit norm over [nu_min, nu_max],
/// sign fixed so the largest-magnitude entry is positive.
struct SectorSolution {
    double lambda;
    double energy_per_atom;
    long nu_min;
    std::vector<double> coeffs;
    double residual;
};

SectorSolution solve_sector(const SectorHamiltonian& h);

/// Lambda-scan controls. The scan starts at the sector nearest the
/// semiclassical <Lambda> and expands outward; a direction stops once the
/// energy has risen monotonically above the running minimum for
/// `consecutive_increases` sectors. Sectors whose energies agree within
/// `degeneracy_tol` count as a tie, resolved toward the smaller lambda.
struct ScanPolicy {
    int consecutive_increases = 5;
    double degeneracy_tol = 1e-12;
};

struct GroundState {
    SectorSolution sector;
    int n_atoms;
    double lambda_lo;  // scanned range, inclusive
    double lambda_hi;
    bool lambda_tie;
    ObservableSet observables;
};

/// Global ground state over all lambda sectors.
/// Throws NumericalError if the scan cap (lambda_sc + max(50, 10 sigma)) is
/// reached without the stop rule firing.
GroundState find_ground(const ModelParams& params, const ScanPolicy& policy = {});

/// Expectation values in the sector ground state. Off-diagonal matter and
/// field operators average to zero within a sector, so <Jx> = <Jy> = 0,
/// <q> = <p> = 0 and Var q = Var p = <n> + 1/2 hold identically.
ObservableSet observables_q(const GroundState& gs, const ModelParams& params);

/// (photon, matter) marginals of the sector ground state: photon weights
/// |c_nu|^2 over [nu_min, nu_max]; matter weights |c_{lambda + N/2 - n}|^2
/// over the excited-atom count n in [0, min(lambda + N/2, N)].
std::pair<ProbabilityDistribution, ProbabilityDistribution> reduced_distributions(
    const GroundState& gs);

/// Closed-form sector ground energies for the three smallest blocks,
/// lambda = -j, -j+1, -j+2 (the last needs N >= 2). Used as the independent
/// oracle against solve_sector.
double analytic_sector_energy(const ModelParams& params, double lambda);

}  // namespace tc

#endif
