#include "tc/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tc/errors.hpp"

namespace tc {

namespace {

constexpr double kPi = 3.14159265358979323846;

double log_choose(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

std::array<double, 3> north_hessian(double j, double gamma, double omega_a) {
    const double x = 1.0 - j * omega_a;
    const double root = std::sqrt(x * x + 4.0 * j * gamma * gamma);
    return {1.0 / (2.0 * j), (1.0 + j * omega_a + root) / (4.0 * j),
            (1.0 + j * omega_a - root) / (4.0 * j)};
}

std::array<double, 3> south_hessian(double j, double gamma, double omega_a) {
    // dual of the North triple under omega_a -> -omega_a; all three are
    // positive exactly when omega_a < -gamma^2
    const double x = 1.0 + j * omega_a;
    const double root = std::sqrt(x * x + 4.0 * j * gamma * gamma);
    return {1.0 / (2.0 * j), ((1.0 - j * omega_a) + root) / (4.0 * j),
            ((1.0 - j * omega_a) - root) / (4.0 * j)};
}

std::array<double, 3> parallel_hessian(double j, double gamma, double omega_a) {
    const double g2 = gamma * gamma;
    const double x = g2 * (1.0 - j * g2);
    const double root = std::sqrt(x * x + 4.0 * j * omega_a * omega_a * g2);
    return {1.0 / (2.0 * j), (g2 * (1.0 + j * g2) + root) / (4.0 * j * g2),
            (g2 * (1.0 + j * g2) - root) / (4.0 * j * g2)};
}

CriticalPoint pole_point(const ModelParams& params, bool north, bool degenerate) {
    const double j = params.j();
    const double w = params.omega_a();
    CriticalPoint cp{};
    cp.theta_c = north ? 0.0 : kPi;
    const double st = std::sin(cp.theta_c);
    cp.q_c = -std::sqrt(j) * params.gamma() * st * std::cos(params.phi());
    cp.p_c = std::sqrt(j) * params.gamma() * st * std::sin(params.phi());
    cp.energy_per_atom = north ? -0.5 * w : 0.5 * w;
    cp.lambda_sc = north ? -j : j;
    cp.hessian_eigs = north ? north_hessian(j, params.gamma(), w)
                            : south_hessian(j, params.gamma(), w);
    cp.degenerate_hessian = degenerate;
    return cp;
}

CriticalPoint parallel_point(const ModelParams& params) {
    const double j = params.j();
    const double w = params.omega_a();
    const double gamma = params.gamma();
    const double g2 = gamma * gamma;
    CriticalPoint cp{};
    cp.theta_c = std::acos(std::clamp(w / g2, -1.0, 1.0));
    const double st = std::sin(cp.theta_c);
    cp.q_c = -std::sqrt(j) * gamma * st * std::cos(params.phi());
    cp.p_c = std::sqrt(j) * gamma * st * std::sin(params.phi());
    cp.energy_per_atom = -(w * w + g2 * g2) / (4.0 * g2);
    cp.lambda_sc = j * (-w * (w + 2.0) + g2 * g2) / (2.0 * g2);
    cp.hessian_eigs = parallel_hessian(j, gamma, w);
    cp.degenerate_hessian = false;
    return cp;
}

// Which pole supplies the limiting values for non-Parallel tags. The vertex
// takes the North convention.
bool north_like(PhaseRegion region, double omega_a) {
    switch (region) {
        case PhaseRegion::NorthPole: return true;
        case PhaseRegion::SouthPole: return false;
        case PhaseRegion::BoundaryVertex: return true;
        default: return omega_a >= 0.0;
    }
}

std::vector<double> binomial_pmf(int n, double p) {
    std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
    if (p <= 0.0) {
        w.front() = 1.0;
        return w;
    }
    if (p >= 1.0) {
        w.back() = 1.0;
        return w;
    }
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    for (int k = 0; k <= n; ++k)
        w[static_cast<std::size_t>(k)] =
            std::exp(log_choose(n, k) + k * lp + (n - k) * lq);
    return w;
}

}  // namespace

SurfacePoint SurfacePoint::clamped(double q, double p, double theta, double phi) {
    SurfacePoint pt;
    pt.q = q;
    pt.p = p;
    pt.theta = std::clamp(theta, 0.0, kPi);
    pt.phi = std::fmod(phi, 2.0 * kPi);
    if (pt.phi < 0.0) pt.phi += 2.0 * kPi;
    return pt;
}

EnergyPoint energy_surface(const ModelParams& params, double q, double p, double theta,
                           double phi) {
    if (!std::isfinite(q) || !std::isfinite(p) || !std::isfinite(theta) || !std::isfinite(phi))
        throw std::invalid_argument("energy_surface: point must be finite");
    const double n = params.n_atoms();
    const double j = params.j();
    const double ct = std::cos(theta);
    const double lambda = 0.5 * (q * q + p * p) - j * ct;
    const double energy = lambda / n + params.delta() * (j / n) * ct +
                          params.gamma() / std::sqrt(2.0 * n) * std::sin(theta) *
                              (q * std::cos(phi) - p * std::sin(phi));
    return {energy, lambda};
}

EnergyPoint energy_surface(const ModelParams& params, const SurfacePoint& point) {
    return energy_surface(params, point.q, point.p, point.theta, point.phi);
}

CriticalPoint critical_point(const ModelParams& params, double eps) {
    const PhaseRegion region = classify_region(params, eps);
    CriticalPoint cp{};
    switch (region) {
        case PhaseRegion::NorthPole:
            cp = pole_point(params, true, false);
            break;
        case PhaseRegion::SouthPole:
            cp = pole_point(params, false, false);
            break;
        case PhaseRegion::Parallel:
            cp = parallel_point(params);
            break;
        case PhaseRegion::BoundaryArm:
        case PhaseRegion::BoundaryVertex:
            // limiting value from the adjacent pole; the Hessian has a zero
            // eigenvalue here, flagged instead of failing
            cp = pole_point(params, north_like(region, params.omega_a()), true);
            break;
    }
    cp.region = region;
    return cp;
}

ObservableSet observables_sc(const ModelParams& params, double eps) {
    const PhaseRegion region = classify_region(params, eps);
    const double j = params.j();
    const double n = params.n_atoms();
    const double phi = params.phi();
    ObservableSet o{};
    o.var_q = 0.5;  // coherent field state, standard quantum limit
    o.var_p = 0.5;
    o.squeezing_xi = 1.0;  // atomic coherent states are never squeezed

    if (region != PhaseRegion::Parallel) {
        o.jz_per_n = north_like(region, params.omega_a()) ? -0.5 : 0.5;
        o.var_jx = 0.5 * j;
        o.var_jy = 0.5 * j;
        return o;
    }

    const double g2 = params.gamma() * params.gamma();
    const double r = params.omega_a() / g2;  // cos(theta_c)
    const double s2 = std::max(0.0, 1.0 - r * r);
    const double st = std::sqrt(s2);
    const double cphi = std::cos(phi);
    const double sphi = std::sin(phi);

    o.jz_per_n = -0.5 * r;
    o.jx_per_n = 0.5 * st * cphi;
    o.jy_per_n = 0.5 * st * sphi;
    o.var_jx = 0.5 * j * (1.0 - s2 * cphi * cphi);
    o.var_jy = 0.5 * j * (1.0 - s2 * sphi * sphi);
    o.var_jz = 0.5 * j * s2;
    o.n_per_n = 0.25 * g2 * s2;
    o.var_n = n * 0.25 * g2 * s2;
    o.q_mean = -std::sqrt(j) * params.gamma() * st * cphi;
    o.p_mean = std::sqrt(j) * params.gamma() * st * sphi;
    o.entropy_nats = shannon_entropy_nats(binomial_pmf(params.n_atoms(), 0.5 * (1.0 - r)));
    return o;
}

ProbabilityDistribution occupation_distribution(const ModelParams& params, double eps) {
    const PhaseRegion region = classify_region(params, eps);
    double p_excited;
    if (region == PhaseRegion::Parallel)
        p_excited = 0.5 * (1.0 - params.omega_a() / (params.gamma() * params.gamma()));
    else
        p_excited = north_like(region, params.omega_a()) ? 0.0 : 1.0;
    return ProbabilityDistribution(IndexLabel::ExcitedAtoms, 0.0,
                                   binomial_pmf(params.n_atoms(), p_excited));
}

std::complex<double> TrialCoefficients::amplitude(double m, long nu) const {
    const double j = 0.5 * two_j_;
    const double offset = m + j;
    const long i = std::lround(offset);
    if (std::abs(offset - static_cast<double>(i)) > 1e-9 || i < 0 || i > two_j_)
        throw std::invalid_argument("TrialCoefficients: m outside the -j..j lattice");
    if (nu < 0 || nu > nu_max()) return {0.0, 0.0};
    double mag = atom_mags_[static_cast<std::size_t>(i)] * field_mags_[static_cast<std::size_t>(nu)];
    if (gamma_sign_ < 0.0 && (nu & 1L)) mag = -mag;
    const double angle = (j + m - static_cast<double>(nu)) * phi_;
    return std::polar(1.0, angle) * mag;
}

double TrialCoefficients::prob(double m, long nu) const {
    const double j = 0.5 * two_j_;
    const double offset = m + j;
    const long i = std::lround(offset);
    if (std::abs(offset - static_cast<double>(i)) > 1e-9 || i < 0 || i > two_j_)
        throw std::invalid_argument("TrialCoefficients: m outside the -j..j lattice");
    if (nu < 0 || nu > nu_max()) return 0.0;
    return atom_probs_[static_cast<std::size_t>(i)] * field_probs_[static_cast<std::size_t>(nu)];
}

double TrialCoefficients::total_mass() const {
    double sa = 0.0, sf = 0.0;
    for (double w : atom_probs_) sa += w;
    for (double w : field_probs_) sf += w;
    return sa * sf;
}

TrialCoefficients trial_coefficients(const ModelParams& params, const NuMaxPolicy& policy) {
    if (policy.tail_target <= 0.0 || policy.hard_cap < 1)
        throw std::invalid_argument("trial_coefficients: bad truncation policy");

    const PhaseRegion region = classify_region(params);
    const int two_j = params.two_j();

    TrialCoefficients out;
    out.two_j_ = two_j;
    out.phi_ = params.phi();
    out.region_ = region;
    out.gamma_sign_ = params.gamma() > 0.0 ? -1.0 : 1.0;

    if (region != PhaseRegion::Parallel) {
        // single product state |0> x |j, -+j>
        const bool north = north_like(region, params.omega_a());
        out.atom_mags_.assign(static_cast<std::size_t>(two_j) + 1, 0.0);
        out.atom_mags_[north ? 0 : static_cast<std::size_t>(two_j)] = 1.0;
        out.field_mags_ = {1.0};
        out.atom_probs_ = out.atom_mags_;
        out.field_probs_ = out.field_mags_;
        out.tail_mass_ = 0.0;
        return out;
    }

    const double j = params.j();
    const double g2 = params.gamma() * params.gamma();
    const double w = params.omega_a() / (2.0 * g2);
    const double a = 0.5 + w;  // both in (0, 1) strictly inside the region
    const double b = 0.5 - w;
    const double mu = 2.0 * j * g2 * a * b;  // mean photon number

    out.atom_mags_.resize(static_cast<std::size_t>(two_j) + 1);
    out.atom_probs_.resize(static_cast<std::size_t>(two_j) + 1);
    const double la = std::log(a);
    const double lb = std::log(b);
    for (int i = 0; i <= two_j; ++i) {
        const double lw = log_choose(two_j, i) + (two_j - i) * la + i * lb;
        out.atom_mags_[static_cast<std::size_t>(i)] = std::exp(0.5 * lw);
        out.atom_probs_[static_cast<std::size_t>(i)] = std::exp(lw);
    }

    long nu_max = policy.initial > 0
                      ? policy.initial
                      : static_cast<long>(std::ceil(mu + 12.0 * std::sqrt(mu + 1.0) + 25.0));
    nu_max = std::min(nu_max, policy.hard_cap);
    const double lmu = std::log(mu);
    for (;;) {
        out.field_mags_.resize(static_cast<std::size_t>(nu_max) + 1);
        out.field_probs_.resize(static_cast<std::size_t>(nu_max) + 1);
        double sum = 0.0;
        for (long nu = 0; nu <= nu_max; ++nu) {
            const double lw = nu * lmu - std::lgamma(static_cast<double>(nu) + 1.0) - mu;
            out.field_mags_[static_cast<std::size_t>(nu)] = std::exp(0.5 * lw);
            const double p = std::exp(lw);
            out.field_probs_[static_cast<std::size_t>(nu)] = p;
            sum += p;
        }
        out.tail_mass_ = std::max(0.0, 1.0 - sum);
        if (out.tail_mass_ < policy.tail_target) break;
        if (nu_max >= policy.hard_cap)
            throw NumericalError("trial_coefficients: photon tail bound unreachable at hard cap");
        nu_max = std::min(2 * nu_max, policy.hard_cap);
    }
    return out;
}

TrialLambdaDistribution trial_lambda_distribution(const TrialCoefficients& coeffs) {
    const auto& pa = coeffs.atom_probs();
    const auto& pf = coeffs.field_probs();
    const long two_j = coeffs.two_j();
    const long nu_max = coeffs.nu_max();
    std::vector<double> weights(static_cast<std::size_t>(two_j + nu_max) + 1, 0.0);
    for (long k = 0; k <= two_j + nu_max; ++k) {
        double s = 0.0;
        const long lo = std::max(0L, k - two_j);
        const long hi = std::min(k, nu_max);
        for (long nu = lo; nu <= hi; ++nu)
            s += pa[static_cast<std::size_t>(k - nu)] * pf[static_cast<std::size_t>(nu)];
        weights[static_cast<std::size_t>(k)] = s;
    }
    // drop exactly-zero ends so pole point masses report their true support
    std::size_t first = 0;
    while (first + 1 < weights.size() && weights[first] == 0.0) ++first;
    std::size_t last = weights.size() - 1;
    while (last > first && weights[last] == 0.0) --last;
    std::vector<double> trimmed(weights.begin() + static_cast<long>(first),
                                weights.begin() + static_cast<long>(last) + 1);
    ProbabilityDistribution dist(IndexLabel::ExcitationNumber,
                                 -coeffs.j() + static_cast<double>(first), std::move(trimmed),
                                 coeffs.tail_mass());
    const double mean = dist.mean();
    const double sd = dist.stddev();
    return {std::move(dist), mean, sd};
}

double ground_energy_sc(double gamma, double omega_a, double eps) {
    const PhaseRegion region = classify_region(gamma, omega_a, eps);
    switch (region) {
        case PhaseRegion::NorthPole:
            return -0.5 * omega_a;
        case PhaseRegion::SouthPole:
            return 0.5 * omega_a;
        case PhaseRegion::Parallel: {
            const double g2 = gamma * gamma;
            return -(omega_a * omega_a + g2 * g2) / (4.0 * g2);
        }
        default:  // limiting pole value on the separatrix
            return north_like(region, omega_a) ? -0.5 * omega_a : 0.5 * omega_a;
    }
}

double critical_theta(double gamma, double omega_a, double eps) {
    const PhaseRegion region = classify_region(gamma, omega_a, eps);
    switch (region) {
        case PhaseRegion::NorthPole:
            return 0.0;
        case PhaseRegion::SouthPole:
            return kPi;
        case PhaseRegion::Parallel:
            return std::acos(std::clamp(omega_a / (gamma * gamma), -1.0, 1.0));
        default:
            return north_like(region, omega_a) ? 0.0 : kPi;
    }
}

TransitionProbe transition_order(const ParamPath& path, double s0, double h, double tol,
                                 double eps) {
    if (!(h > 0.0) || !(tol > 0.0))
        throw std::invalid_argument("transition_order: h and tol must be positive");

    const auto region_at = [&](double s) {
        const auto [g, w] = path(s);
        return classify_region(g, w, eps);
    };
    const auto energy_at = [&](double s) {
        const auto [g, w] = path(s);
        return ground_energy_sc(g, w, eps);
    };

    std::array<double, 4> fl{}, fr{};
    const PhaseRegion rl = region_at(s0 - h);
    const PhaseRegion rr = region_at(s0 + h);
    for (int k = 1; k <= 4; ++k) {
        const double sl = s0 - k * h;
        const double sr = s0 + k * h;
        if (region_at(sl) != rl || region_at(sr) != rr)
            throw std::invalid_argument(
                "transition_order: stencil straddles an additional region change");
        fl[static_cast<std::size_t>(k - 1)] = energy_at(sl);
        fr[static_cast<std::size_t>(k - 1)] = energy_at(sr);
    }

    // cubic through the four samples at k = 1..4, extrapolated to k = 0
    const auto fit = [](const std::array<double, 4>& f, double step) {
        const double value = 4.0 * f[0] - 6.0 * f[1] + 4.0 * f[2] - f[3];
        const double d1 = -13.0 / 3.0 * f[0] + 9.5 * f[1] - 7.0 * f[2] + 11.0 / 6.0 * f[3];
        const double d2 = 3.0 * f[0] - 8.0 * f[1] + 7.0 * f[2] - 2.0 * f[3];
        return std::array<double, 3>{value, d1 / step, d2 / (step * step)};
    };

    TransitionProbe probe{};
    probe.region_left = rl;
    probe.region_right = rr;
    probe.left = fit(fl, -h);
    probe.right = fit(fr, h);

    probe.order = TransitionOrder::None;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(probe.left[static_cast<std::size_t>(i)] -
                     probe.right[static_cast<std::size_t>(i)]) > tol) {
            probe.order = (i <= 1) ? TransitionOrder::First : TransitionOrder::Second;
            break;
        }
    }
    return probe;
}

std::vector<double> find_region_crossings(const ParamPath& path, double s_lo, double s_hi,
                                          int n_probe, double eps) {
    if (!(s_hi > s_lo) || n_probe < 1)
        throw std::invalid_argument("find_region_crossings: bad interval");
    const auto region_at = [&](double s) {
        const auto [g, w] = path(s);
        return classify_region(g, w, eps);
    };
    const double step = (s_hi - s_lo) / n_probe;
    std::vector<double> out;
    PhaseRegion prev = region_at(s_lo);
    double s_prev = s_lo;
    for (int i = 1; i <= n_probe; ++i) {
        const double s = s_lo + step * i;
        const PhaseRegion cur = region_at(s);
        if (cur != prev) {
            double a = s_prev, b = s;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (a + b);
                if (region_at(mid) == prev)
                    a = mid;
                else
                    b = mid;
            }
            const double s_cross = 0.5 * (a + b);
            // a band of boundary tags produces two changes a hair apart; merge
            if (!out.empty() && s_cross - out.back() < 1.5 * step)
                out.back() = 0.5 * (out.back() + s_cross);
            else
                out.push_back(s_cross);
        }
        prev = cur;
        s_prev = s;
    }
    return out;
}

}  // namespace tc
