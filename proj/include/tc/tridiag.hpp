#ifndef TC_TRIDIAG_HPP
#define TC_TRIDIAG_HPP

#include <span>
#include <vector>

namespace tc {

struct TridiagEigenPair {
    double value;                // algebraically smallest eigenvalue
    std::vector<double> vector;  // unit 2-norm; largest-magnitude entry positive
    double residual;             // ||T v - value v||_2
};

/// Smallest eigenpair of a real symmetric tridiagonal matrix.
///
/// Sturm-sequence bisection brackets the smallest eigenvalue to machine
/// precision inside the Gershgorin bound, then shifted inverse iteration
/// (partially pivoted tridiagonal LU) recovers the eigenvector; the shift
/// falls back to Rayleigh-quotient refinement if the first sweeps do not
/// reach the residual target. Deterministic: the start vector comes from a
/// fixed-seed xorshift generator.
///
/// Throws NumericalError when the residual target
/// (~1e-12 * max(1, ||T||_inf)) cannot be met.
TridiagEigenPair tridiag_smallest(std::span<const double> diag, std::span<const double> offdiag);

/// Number of eigenvalues of the matrix strictly below x (Sturm count).
int tridiag_count_below(std::span<const double> diag, std::span<const double> offdiag, double x);

}  // namespace tc

#endif
