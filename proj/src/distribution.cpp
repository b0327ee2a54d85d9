#include "tc/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace tc {

ProbabilityDistribution::ProbabilityDistribution(IndexLabel label, double origin,
                                                 std::vector<double> weights, double tail_mass)
    : label_(label), origin_(origin), weights_(std::move(weights)), tail_mass_(tail_mass) {
    if (weights_.empty())
        throw std::invalid_argument("ProbabilityDistribution: empty support");
    if (!std::isfinite(origin_))
        throw std::invalid_argument("ProbabilityDistribution: origin must be finite");
    if (tail_mass_ < 0.0)
        throw std::invalid_argument("ProbabilityDistribution: negative tail mass");
    for (double& w : weights_) {
        if (!(w > -1e-12) || !std::isfinite(w))
            throw std::invalid_argument("ProbabilityDistribution: negative weight");
        if (w < 0.0) w = 0.0;  // absorb -0 and rounding dust
    }
}

double ProbabilityDistribution::at(double index) const {
    const double offset = index - origin_;
    const long k = std::lround(offset);
    if (std::abs(offset - static_cast<double>(k)) > 1e-9)
        throw std::invalid_argument("ProbabilityDistribution: index not on the lattice");
    if (k < 0 || static_cast<std::size_t>(k) >= weights_.size()) return 0.0;
    return weights_[static_cast<std::size_t>(k)];
}

double ProbabilityDistribution::sum() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
}

double ProbabilityDistribution::mean() const {
    double s = 0.0, m = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        s += weights_[k];
        m += weights_[k] * (origin_ + static_cast<double>(k));
    }
    if (s <= 0.0) throw std::domain_error("ProbabilityDistribution: zero total mass");
    return m / s;
}

double ProbabilityDistribution::variance() const {
    const double mu = mean();
    double s = 0.0, v = 0.0;
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        const double x = origin_ + static_cast<double>(k) - mu;
        s += weights_[k];
        v += weights_[k] * x * x;
    }
    return v / s;
}

double ProbabilityDistribution::stddev() const { return std::sqrt(variance()); }

double shannon_entropy_nats(std::span<const double> weights) {
    double s = 0.0;
    for (double p : weights)
        if (p > 0.0) s -= p * std::log(p);
    return s < 0.0 ? 0.0 : s;
}

std::string_view to_string(IndexLabel label) {
    switch (label) {
        case IndexLabel::PhotonNumber: return "nu";
        case IndexLabel::ExcitedAtoms: return "n";
        case IndexLabel::ExcitationNumber: return "lambda";
    }
    return "?";
}

}  // namespace tc
