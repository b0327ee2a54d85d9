#ifndef TC_DISTRIBUTION_HPP
#define TC_DISTRIBUTION_HPP

#include <span>
#include <string_view>
#include <vector>

namespace tc {

/// What the integer index of a distribution counts.
enum class IndexLabel {
    PhotonNumber,      // nu
    ExcitedAtoms,      // n
    ExcitationNumber,  // lambda = nu + m
};

/// Nonnegative weights on a unit-spaced lattice origin, origin+1, ...
/// Normalized up to the declared truncation tail. The origin is a double so
/// the excitation-number lattice (which starts at -j, a half-integer for odd
/// N) is representable; all supports are still unit-spaced.
class ProbabilityDistribution {
public:
    ProbabilityDistribution(IndexLabel label, double origin, std::vector<double> weights,
                            double tail_mass = 0.0);

    IndexLabel label() const { return label_; }
    double origin() const { return origin_; }
    double max_index() const { return origin_ + static_cast<double>(weights_.size() - 1); }
    std::size_t size() const { return weights_.size(); }
    const std::vector<double>& weights() const { return weights_; }
    double tail_mass() const { return tail_mass_; }

    /// Weight at lattice point `index`; zero outside the stored support.
    double at(double index) const;

    double sum() const;
    double mean() const;
    double variance() const;
    double stddev() const;

private:
    IndexLabel label_;
    double origin_;
    std::vector<double> weights_;
    double tail_mass_;
};

/// -sum p ln p over the weights, in nats. Zero-weight entries contribute 0.
double shannon_entropy_nats(std::span<const double> weights);

std::string_view to_string(IndexLabel label);

}  // namespace tc

#endif
