#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tc/compare.hpp"

using tc::IndexLabel;
using tc::ModelParams;
using tc::PhaseRegion;
using tc::ProbabilityDistribution;

namespace {
ProbabilityDistribution matter(std::vector<double> w, double origin = 0.0) {
    return ProbabilityDistribution(IndexLabel::ExcitedAtoms, origin, std::move(w));
}
}  // namespace

TEST_CASE("fidelity basics") {
    CHECK(tc::fidelity(matter({1.0}), matter({1.0})) == 1.0);
    CHECK(tc::fidelity(matter({0.25, 0.5, 0.25}), matter({0.25, 0.5, 0.25})) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(tc::fidelity(matter({1.0, 0.0, 0.0}), matter({0.0, 0.0, 1.0})) == 0.0);

    // overlap restricted to the smaller (quantum) support
    const auto q = matter({0.5, 0.5});
    const auto sc = matter({0.25, 0.25, 0.25, 0.25});
    CHECK(tc::fidelity(q, sc) == doctest::Approx(2.0 * std::sqrt(0.5 * 0.25)).epsilon(1e-15));
    CHECK(tc::fidelity(sc, q) == tc::fidelity(q, sc));

    CHECK_THROWS_AS(
        tc::fidelity(matter({1.0}),
                     ProbabilityDistribution(IndexLabel::PhotonNumber, 0.0, {1.0})),
        std::invalid_argument);
    CHECK_THROWS_AS(tc::fidelity(matter({1.0}), matter({1.0}, 0.5)), std::invalid_argument);
}

TEST_CASE("fidelity properties on random distributions") {
    std::mt19937 gen(4242u);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    for (int it = 0; it < 300; ++it) {
        const int n = 1 + static_cast<int>(dist(gen) * 10);
        std::vector<double> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
        double sa = 0.0, sb = 0.0;
        for (int i = 0; i < n; ++i) {
            a[static_cast<std::size_t>(i)] = dist(gen);
            b[static_cast<std::size_t>(i)] = dist(gen);
            sa += a[static_cast<std::size_t>(i)];
            sb += b[static_cast<std::size_t>(i)];
        }
        for (double& x : a) x /= sa;
        for (double& x : b) x /= sb;
        const double f = tc::fidelity(matter(a), matter(b));
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
        CHECK(f == tc::fidelity(matter(b), matter(a)));
        CHECK(tc::fidelity(matter(a), matter(a)) == doctest::Approx(1.0).epsilon(1e-13));

        // strict Cauchy-Schwarz: equality only for identical distributions
        if (n > 1) {
            std::vector<double> c = a;
            c[0] = std::min(1.0, c[0] + 0.2);
            double sc_ = 0.0;
            for (double x : c) sc_ += x;
            for (double& x : c) x /= sc_;
            bool same = true;
            for (std::size_t i = 0; i < a.size(); ++i)
                if (std::abs(a[i] - c[i]) > 1e-9) same = false;
            if (!same) CHECK(tc::fidelity(matter(a), matter(c)) < 1.0 - 1e-9);
        }
    }
}

TEST_CASE("restricted trial state") {
    // strong coupling, j = 10
    const ModelParams params = ModelParams::from_delta(20, 5.0, 0.2);
    const tc::TrialCoefficients coeffs = tc::trial_coefficients(params);
    const tc::RestrictedTrial rt = tc::restricted_trial(coeffs, 124.0);
    CHECK(std::abs(rt.weight - 0.035) <= 0.005);
    CHECK(rt.photon_probs.sum() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rt.photon_probs.origin() == 114.0);
    CHECK(rt.photon_probs.max_index() == 134.0);

    const tc::GroundState gs = tc::find_ground(params);
    CHECK(gs.sector.lambda == 124.0);
    const double n_q = gs.observables.n_per_n * 20.0;
    CHECK(std::abs(rt.photon_probs.mean() - n_q) / n_q <= 0.02);

    // North: the whole state sits at a single lambda
    const tc::TrialCoefficients north =
        tc::trial_coefficients(ModelParams::from_delta(6, 0.5, 0.2));
    const tc::RestrictedTrial rtn = tc::restricted_trial(north, -3.0);
    CHECK(rtn.weight == 1.0);
    CHECK(rtn.photon_probs.size() == 1);
    CHECK(rtn.photon_probs.weights()[0] == 1.0);

    CHECK_THROWS_AS(tc::restricted_trial(north, -2.0), std::invalid_argument);  // zero mass
    CHECK_THROWS_AS(tc::restricted_trial(coeffs, 1e9), std::invalid_argument);
    CHECK_THROWS_AS(tc::restricted_trial(coeffs, 0.25), std::invalid_argument);
}

TEST_CASE("restricted-trial photon mean tracks the exact sector mean") {
    struct Case {
        int n;
        double delta, gamma;
    };
    for (const Case& c : {Case{20, 0.2, 1.3}, Case{20, 0.2, 2.0}, Case{30, 0.0, 1.5},
                          Case{40, 0.5, 1.5}, Case{24, 0.0, 2.5}}) {
        const ModelParams params = ModelParams::from_delta(c.n, c.gamma, c.delta);
        REQUIRE(c.gamma * c.gamma >= 2.0 * std::abs(params.omega_a()));
        const tc::GroundState gs = tc::find_ground(params);
        const tc::RestrictedTrial rt =
            tc::restricted_trial(tc::trial_coefficients(params), gs.sector.lambda);
        const double n_q = gs.observables.n_per_n * c.n;
        CHECK(std::abs(rt.photon_probs.mean() - n_q) / n_q <= 0.05);
    }
}

TEST_CASE("compare_point: North plateau") {
    const tc::ComparisonRecord rec = tc::compare_point(ModelParams::from_delta(6, 0.5, 0.2));
    CHECK(rec.region == PhaseRegion::NorthPole);
    CHECK(rec.fidelity == 1.0);
    CHECK(rec.sc.jz_per_n == -0.5);
    CHECK(rec.q.jz_per_n == -0.5);
    CHECK(rec.lambda_sc == -3.0);
    CHECK(rec.lambda_q == -3.0);

    // both pipelines describe the same product state: every observable coincides
    CHECK(rec.e_sc == doctest::Approx(rec.e_q).epsilon(1e-12));
    CHECK(rec.sc.jz_per_n == rec.q.jz_per_n);
    CHECK(rec.sc.jx_per_n == rec.q.jx_per_n);
    CHECK(rec.sc.jy_per_n == rec.q.jy_per_n);
    CHECK(rec.sc.var_jx == rec.q.var_jx);
    CHECK(rec.sc.var_jy == rec.q.var_jy);
    CHECK(rec.sc.var_jz == rec.q.var_jz);
    CHECK(rec.sc.n_per_n == rec.q.n_per_n);
    CHECK(rec.sc.var_n == rec.q.var_n);
    CHECK(rec.sc.q_mean == rec.q.q_mean);
    CHECK(rec.sc.p_mean == rec.q.p_mean);
    CHECK(rec.sc.var_q == rec.q.var_q);
    CHECK(rec.sc.var_p == rec.q.var_p);
    CHECK(rec.sc.entropy_nats == rec.q.entropy_nats);
    CHECK(rec.sc.squeezing_xi == rec.q.squeezing_xi);
}

TEST_CASE("compare_point: lambda prediction near the first condensed sector") {
    const tc::ComparisonRecord rec = tc::compare_point(ModelParams::from_delta(6, -1.5, 0.2));
    CHECK(rec.lambda_q == 2.0);
    CHECK(rec.lambda_sc == doctest::Approx(1.8816666666666668).epsilon(1e-12));
    CHECK(std::abs(rec.lambda_sc - rec.lambda_q) < 0.5);
}

TEST_CASE("compare_point: photon means agree, photon fluctuations do not") {
    const tc::ComparisonRecord rec = tc::compare_point(ModelParams::from_delta(6, 2.0, 0.2));
    CHECK(std::abs(rec.sc.n_per_n - rec.q.n_per_n) / rec.q.n_per_n < 0.1);
    CHECK(rec.sc.var_n / rec.q.var_n >= 3.0);
}
