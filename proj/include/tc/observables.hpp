#ifndef TC_OBSERVABLES_HPP
#define TC_OBSERVABLES_HPP

namespace tc {

/// Matched record of ground-state expectation values, filled by both the
/// coherent-state and the exact pipelines. Per-N fields are divided by the
/// atom count; variances are absolute.
struct ObservableSet {
    double jz_per_n = 0.0;
    double jx_per_n = 0.0;
    double jy_per_n = 0.0;
    double var_jx = 0.0;
    double var_jy = 0.0;
    double var_jz = 0.0;
    double n_per_n = 0.0;   // <n>/N
    double var_n = 0.0;
    double q_mean = 0.0;
    double p_mean = 0.0;
    double var_q = 0.0;
    double var_p = 0.0;
    double entropy_nats = 0.0;  // matter entanglement entropy S_E
    double squeezing_xi = 0.0;  // transverse spin squeezing parameter
};

}  // namespace tc

#endif
