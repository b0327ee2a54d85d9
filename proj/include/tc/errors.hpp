#ifndef TC_ERRORS_HPP
#define TC_ERRORS_HPP

#include <stdexcept>

namespace tc {

/// Solver non-convergence, truncation failure, scan cap hit. Distinct from
/// std::invalid_argument so the CLI can map it to its own exit code.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tc

#endif
