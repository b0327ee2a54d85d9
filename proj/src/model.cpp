#include "tc/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tc {

namespace {

constexpr int kMaxAtoms = 10000;  // keeps log-space binomials comfortably finite

void validate(int n_atoms, double gamma, double omega_a, double phi) {
    if (n_atoms < 1)
        throw std::invalid_argument("ModelParams: n_atoms must be >= 1");
    if (n_atoms > kMaxAtoms)
        throw std::invalid_argument("ModelParams: n_atoms exceeds cap of " + std::to_string(kMaxAtoms));
    if (!std::isfinite(gamma) || !std::isfinite(omega_a) || !std::isfinite(phi))
        throw std::invalid_argument("ModelParams: parameters must be finite");
}

}  // namespace

ModelParams::ModelParams(int n_atoms, double gamma, double omega_a, double delta, double phi)
    : n_atoms_(n_atoms), gamma_(gamma), omega_a_(omega_a), delta_(delta), phi_(phi) {}

ModelParams ModelParams::from_omega_a(int n_atoms, double gamma, double omega_a, double phi) {
    validate(n_atoms, gamma, omega_a, phi);
    return ModelParams(n_atoms, gamma, omega_a, 1.0 - omega_a, phi);
}

ModelParams ModelParams::from_delta(int n_atoms, double gamma, double delta, double phi) {
    validate(n_atoms, gamma, delta, phi);
    return ModelParams(n_atoms, gamma, 1.0 - delta, delta, phi);
}

ModelParams ModelParams::with_gamma(double gamma) const {
    validate(n_atoms_, gamma, omega_a_, phi_);
    return ModelParams(n_atoms_, gamma, omega_a_, delta_, phi_);
}

std::string_view to_string(PhaseRegion region) {
    switch (region) {
        case PhaseRegion::NorthPole: return "NorthPole";
        case PhaseRegion::SouthPole: return "SouthPole";
        case PhaseRegion::Parallel: return "Parallel";
        case PhaseRegion::BoundaryArm: return "BoundaryArm";
        case PhaseRegion::BoundaryVertex: return "BoundaryVertex";
    }
    return "?";
}

PhaseRegion classify_region(double gamma, double omega_a, double eps) {
    if (eps < 0.0)
        throw std::invalid_argument("classify_region: eps must be >= 0");
    const double g2 = gamma * gamma;
    if (omega_a - g2 > eps) return PhaseRegion::NorthPole;
    if (omega_a + g2 < -eps) return PhaseRegion::SouthPole;
    if (g2 - std::abs(omega_a) > eps) return PhaseRegion::Parallel;
    if (std::abs(gamma) <= eps && std::abs(omega_a) <= eps) return PhaseRegion::BoundaryVertex;
    return PhaseRegion::BoundaryArm;
}

PhaseRegion classify_region(const ModelParams& params, double eps) {
    return classify_region(params.gamma(), params.omega_a(), eps);
}

}  // namespace tc
