#include "tc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tc/compare.hpp"
#include "tc/errors.hpp"
#include "tc/presets.hpp"

namespace tc::cli {

namespace {

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // never print -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Range {
    double lo, hi, step;

    long count() const { return static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1; }
    double value(long i) const { return lo + static_cast<double>(i) * step; }
};

Range parse_range(const std::string& text, const std::string& flag) {
    Range r{};
    char extra;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &r.lo, &r.hi, &r.step, &extra) != 3)
        throw std::invalid_argument(flag + ": expected start:stop:step, got '" + text + "'");
    if (!(r.step > 0.0)) throw std::invalid_argument(flag + ": step must be positive");
    if (r.count() < 1) throw std::invalid_argument(flag + ": empty range");
    return r;
}

// everything any subcommand can take; exactly one subcommand fills it
struct Options {
    std::optional<int> n_atoms;
    std::optional<double> delta;
    std::optional<double> omega_a;
    std::optional<double> gamma;
    std::optional<std::string> gamma_range;
    std::optional<std::string> omega_a_range;
    double phi = 0.0;
    double eps_boundary = kBoundaryEps;
    std::string format;
    std::string output;
    std::string preset;
    std::string kinds =
        "matter_q,matter_sc,photon_q,photon_trial_full,photon_trial_restricted,lambda_trial";
    bool keep_going = false;
    double probe_h = 1e-3;
    double probe_tol = 1e-2;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--n-atoms", o.n_atoms, "number of atoms N");
    cmd->add_option("--delta", o.delta, "detuning Delta = 1 - omega_a");
    cmd->add_option("--omega-a", o.omega_a, "atomic level splitting omega_a = 1 - Delta");
    cmd->add_option("--gamma", o.gamma, "coupling strength");
    cmd->add_option("--gamma-range", o.gamma_range, "coupling grid start:stop:step");
    cmd->add_option("--omega-a-range", o.omega_a_range, "omega_a grid start:stop:step");
    cmd->add_option("--phi", o.phi, "gauge angle (default 0)");
    cmd->add_option("--eps-boundary", o.eps_boundary, "separatrix tolerance");
    cmd->add_option("--format", o.format, "csv or json (point only)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", o.output, "output path (default stdout)");
    cmd->add_option("--preset", o.preset, "named parameter preset (fig5..fig12)");
    cmd->add_flag("--keep-going", o.keep_going, "emit nan rows for failed grid points");
}

// preset defaults + flag overrides -> concrete parameters; commands validate
// the pieces they actually need
struct Resolved {
    std::optional<int> n_atoms;
    std::optional<double> delta;
    std::optional<double> gamma;
    std::optional<Range> gamma_range;
    std::optional<Range> omega_a_range;
};

Resolved resolve(const Options& o) {
    Resolved r;
    const Preset* preset = nullptr;
    if (!o.preset.empty()) {
        preset = find_preset(o.preset);
        if (preset == nullptr) {
            std::string names;
            for (const Preset& p : all_presets()) names += " " + std::string(p.name);
            throw std::invalid_argument("unknown preset '" + o.preset + "'; available:" + names);
        }
    }
    if (o.delta && o.omega_a)
        throw std::invalid_argument("--delta and --omega-a are mutually exclusive");
    if (o.gamma && o.gamma_range)
        throw std::invalid_argument("--gamma and --gamma-range are mutually exclusive");

    r.n_atoms = o.n_atoms;
    r.delta = o.delta;
    if (o.omega_a) r.delta = 1.0 - *o.omega_a;
    if (preset != nullptr) {
        if (!r.n_atoms) r.n_atoms = preset->n_atoms;
        if (!r.delta) r.delta = preset->delta;
        if (!o.gamma && !o.gamma_range) {
            if (preset->gamma) r.gamma = preset->gamma;
            if (preset->range_lo)
                r.gamma_range = Range{*preset->range_lo, *preset->range_hi, *preset->range_step};
        }
    }
    if (o.gamma) r.gamma = o.gamma;
    if (o.gamma_range) r.gamma_range = parse_range(*o.gamma_range, "--gamma-range");
    if (o.omega_a_range) r.omega_a_range = parse_range(*o.omega_a_range, "--omega-a-range");
    return r;
}

void require_model(const Resolved& r) {
    if (!r.n_atoms || !r.delta)
        throw std::invalid_argument("needs --n-atoms and one of --delta/--omega-a (or a preset)");
}

ModelParams make_params(const Resolved& r, const Options& o, double gamma) {
    return ModelParams::from_delta(*r.n_atoms, gamma, *r.delta, o.phi);
}

const char* kSweepHeader =
    "gamma,omega_a,region,lambda_sc,lambda_q,e_sc,e_q,jz_sc,jz_q,n_sc,n_q,"
    "varn_sc,varn_q,se_sc,se_q,xi_sc,xi_q,fidelity";

void append_record_row(std::string& s, const ComparisonRecord& rec) {
    s += fmt(rec.params.gamma());
    s += ',';
    s += fmt(rec.params.omega_a());
    s += ',';
    s += to_string(rec.region);
    for (double v : {rec.lambda_sc, rec.lambda_q, rec.e_sc, rec.e_q, rec.sc.jz_per_n,
                     rec.q.jz_per_n, rec.sc.n_per_n, rec.q.n_per_n, rec.sc.var_n, rec.q.var_n,
                     rec.sc.entropy_nats, rec.q.entropy_nats, rec.sc.squeezing_xi,
                     rec.q.squeezing_xi, rec.fidelity}) {
        s += ',';
        s += fmt(v);
    }
    s += '\n';
}

void append_nan_row(std::string& s, double gamma, double omega_a, double eps) {
    s += fmt(gamma);
    s += ',';
    s += fmt(omega_a);
    s += ',';
    s += to_string(classify_region(gamma, omega_a, eps));
    for (int i = 0; i < 15; ++i) s += ",nan";
    s += '\n';
}

nlohmann::ordered_json record_json(const ComparisonRecord& rec) {
    nlohmann::ordered_json out;
    const auto num = [](nlohmann::ordered_json& j, const char* key, double v) {
        // excitation numbers are lattice values; keep them integral in JSON
        if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15)
            j[key] = static_cast<long long>(v);
        else
            j[key] = v;
    };
    out["gamma"] = rec.params.gamma();
    out["omega_a"] = rec.params.omega_a();
    out["region"] = std::string(to_string(rec.region));
    num(out, "lambda_sc", rec.lambda_sc);
    num(out, "lambda_q", rec.lambda_q);
    out["e_sc"] = rec.e_sc;
    out["e_q"] = rec.e_q;
    out["jz_sc"] = rec.sc.jz_per_n;
    out["jz_q"] = rec.q.jz_per_n;
    out["n_sc"] = rec.sc.n_per_n;
    out["n_q"] = rec.q.n_per_n;
    out["varn_sc"] = rec.sc.var_n;
    out["varn_q"] = rec.q.var_n;
    out["se_sc"] = rec.sc.entropy_nats;
    out["se_q"] = rec.q.entropy_nats;
    out["xi_sc"] = rec.sc.squeezing_xi;
    out["xi_q"] = rec.q.squeezing_xi;
    out["fidelity"] = rec.fidelity;
    return out;
}

struct CommandResult {
    std::string body;
    int exit_code = 0;
};

CommandResult cmd_point(const Options& o) {
    const Resolved r = resolve(o);
    require_model(r);
    if (r.gamma_range) throw std::invalid_argument("point: takes a single --gamma, not a range");
    if (!r.gamma) throw std::invalid_argument("point: needs --gamma");

    const ComparisonRecord rec = compare_point(make_params(r, o, *r.gamma), o.eps_boundary);
    CommandResult res;
    if (o.format == "csv") {
        res.body = kSweepHeader;
        res.body += '\n';
        append_record_row(res.body, rec);
    } else {
        res.body = record_json(rec).dump(2);
        res.body += '\n';
    }
    return res;
}

CommandResult cmd_sweep(const Options& o) {
    const Resolved r = resolve(o);
    require_model(r);
    if (!r.gamma_range) throw std::invalid_argument("sweep: needs --gamma-range (or a sweep preset)");
    const Range range = *r.gamma_range;

    CommandResult res;
    res.body = kSweepHeader;
    res.body += '\n';
    for (long i = 0; i < range.count(); ++i) {
        const double gamma = range.value(i);
        const ModelParams params = make_params(r, o, gamma);
        try {
            append_record_row(res.body, compare_point(params, o.eps_boundary));
        } catch (const NumericalError& e) {
            if (!o.keep_going)
                throw NumericalError("sweep: at gamma=" + fmt(gamma) + ": " + e.what());
            append_nan_row(res.body, gamma, params.omega_a(), o.eps_boundary);
            res.exit_code = 3;
        }
    }
    return res;
}

CommandResult cmd_phase_diagram(const Options& o) {
    const Resolved r = resolve(o);
    if (!r.gamma_range || !r.omega_a_range)
        throw std::invalid_argument("phase-diagram: needs --gamma-range and --omega-a-range");
    const Range gr = *r.gamma_range;
    const Range wr = *r.omega_a_range;

    CommandResult res;
    res.body = "gamma,omega_a,region,theta_c,e0_per_n\n";
    for (long iw = 0; iw < wr.count(); ++iw) {
        const double w = wr.value(iw);
        for (long ig = 0; ig < gr.count(); ++ig) {
            const double g = gr.value(ig);
            res.body += fmt(g);
            res.body += ',';
            res.body += fmt(w);
            res.body += ',';
            res.body += to_string(classify_region(g, w, o.eps_boundary));
            res.body += ',';
            res.body += fmt(critical_theta(g, w, o.eps_boundary));
            res.body += ',';
            res.body += fmt(ground_energy_sc(g, w, o.eps_boundary));
            res.body += '\n';
        }
    }
    return res;
}

void append_distribution(std::string& s, const std::string& kind,
                         const ProbabilityDistribution& dist) {
    for (std::size_t k = 0; k < dist.size(); ++k) {
        s += kind;
        s += ',';
        s += fmt(dist.origin() + static_cast<double>(k));
        s += ',';
        s += fmt(dist.weights()[k]);
        s += '\n';
    }
}

CommandResult cmd_distributions(const Options& o) {
    const Resolved r = resolve(o);
    require_model(r);
    if (!r.gamma) throw std::invalid_argument("distributions: needs a single --gamma");

    static const std::vector<std::string> kAllKinds = {
        "matter_q", "matter_sc", "photon_q", "photon_trial_full", "photon_trial_restricted",
        "lambda_trial"};
    std::vector<std::string> selected;
    {
        std::string item;
        std::istringstream stream(o.kinds);
        std::vector<std::string> given;
        while (std::getline(stream, item, ','))
            if (!item.empty()) given.push_back(item);
        for (const std::string& k : given)
            if (std::find(kAllKinds.begin(), kAllKinds.end(), k) == kAllKinds.end())
                throw std::invalid_argument("distributions: unknown kind '" + k + "'");
        for (const std::string& k : kAllKinds)  // canonical emission order
            if (std::find(given.begin(), given.end(), k) != given.end()) selected.push_back(k);
        if (selected.empty()) throw std::invalid_argument("distributions: no kinds selected");
    }

    const ModelParams params = make_params(r, o, *r.gamma);
    const bool needs_ground =
        std::find(selected.begin(), selected.end(), "matter_q") != selected.end() ||
        std::find(selected.begin(), selected.end(), "photon_q") != selected.end() ||
        std::find(selected.begin(), selected.end(), "photon_trial_restricted") != selected.end();
    const bool needs_trial =
        std::find(selected.begin(), selected.end(), "photon_trial_full") != selected.end() ||
        std::find(selected.begin(), selected.end(), "photon_trial_restricted") != selected.end() ||
        std::find(selected.begin(), selected.end(), "lambda_trial") != selected.end();

    std::optional<GroundState> gs;
    std::optional<std::pair<ProbabilityDistribution, ProbabilityDistribution>> reduced;
    if (needs_ground) {
        gs = find_ground(params);
        reduced = reduced_distributions(*gs);
    }
    std::optional<TrialCoefficients> trial;
    if (needs_trial) trial = trial_coefficients(params);

    CommandResult res;
    res.body = "kind,index,probability\n";
    for (const std::string& kind : selected) {
        if (kind == "matter_q") {
            append_distribution(res.body, kind, reduced->second);
        } else if (kind == "matter_sc") {
            append_distribution(res.body, kind, occupation_distribution(params, o.eps_boundary));
        } else if (kind == "photon_q") {
            append_distribution(res.body, kind, reduced->first);
        } else if (kind == "photon_trial_full") {
            append_distribution(res.body, kind,
                                ProbabilityDistribution(IndexLabel::PhotonNumber, 0.0,
                                                        trial->field_probs(), trial->tail_mass()));
        } else if (kind == "photon_trial_restricted") {
            append_distribution(res.body, kind,
                                restricted_trial(*trial, gs->sector.lambda).photon_probs);
        } else {  // lambda_trial
            append_distribution(res.body, kind, trial_lambda_distribution(*trial).distribution);
        }
    }
    return res;
}

const char* order_text(TransitionOrder order) {
    switch (order) {
        case TransitionOrder::First: return "1";
        case TransitionOrder::Second: return "2";
        default: return "none";
    }
}

CommandResult cmd_transition_order(const Options& o) {
    const Resolved r = resolve(o);

    // Path conventions: gamma range at fixed omega_a (s = gamma), omega_a
    // range at fixed gamma (s = omega_a), or both ranges as a linear
    // parametric segment with s in [0, 1].
    ParamPath path;
    double s_lo, s_hi;
    if (r.gamma_range && r.omega_a_range) {
        const Range gr = *r.gamma_range;
        const Range wr = *r.omega_a_range;
        path = [gr, wr](double s) {
            return std::pair{gr.lo + (gr.hi - gr.lo) * s, wr.lo + (wr.hi - wr.lo) * s};
        };
        s_lo = 0.0;
        s_hi = 1.0;
    } else if (r.gamma_range) {
        if (!r.delta)
            throw std::invalid_argument("transition-order: fix --omega-a or --delta for a gamma path");
        const double w = 1.0 - *r.delta;
        path = [w](double s) { return std::pair{s, w}; };
        s_lo = r.gamma_range->lo;
        s_hi = r.gamma_range->hi;
    } else if (r.omega_a_range) {
        if (!r.gamma)
            throw std::invalid_argument("transition-order: fix --gamma for an omega_a path");
        const double g = *r.gamma;
        path = [g](double s) { return std::pair{g, s}; };
        s_lo = r.omega_a_range->lo;
        s_hi = r.omega_a_range->hi;
    } else {
        throw std::invalid_argument(
            "transition-order: needs --gamma-range and/or --omega-a-range to define a path");
    }

    const std::vector<double> crossings =
        find_region_crossings(path, s_lo, s_hi, 2000, o.eps_boundary);

    CommandResult res;
    res.body = "s0,gamma,omega_a,region_left,region_right,order,e_jump,d1_jump,d2_jump\n";
    const auto emit_probe = [&](double s0) {
        const TransitionProbe probe =
            transition_order(path, s0, o.probe_h, o.probe_tol, o.eps_boundary);
        const auto [g, w] = path(s0);
        res.body += fmt(s0);
        res.body += ',';
        res.body += fmt(g);
        res.body += ',';
        res.body += fmt(w);
        res.body += ',';
        res.body += to_string(probe.region_left);
        res.body += ',';
        res.body += to_string(probe.region_right);
        res.body += ',';
        res.body += order_text(probe.order);
        for (int i = 0; i < 3; ++i) {
            res.body += ',';
            res.body += fmt(probe.right[static_cast<std::size_t>(i)] -
                            probe.left[static_cast<std::size_t>(i)]);
        }
        res.body += '\n';
    };
    if (crossings.empty())
        emit_probe(0.5 * (s_lo + s_hi));  // no separatrix on the path; reported as-is
    else
        for (double s0 : crossings) emit_probe(s0);
    return res;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tavis-Cummings ground states: exact sector diagonalization vs "
                 "coherent-state variational analysis",
                 "tcground"};
    app.require_subcommand(1);

    Options o;
    CLI::App* point = app.add_subcommand("point", "both pipelines at one parameter point");
    CLI::App* sweep = app.add_subcommand("sweep", "comparison table over a gamma grid");
    CLI::App* phase = app.add_subcommand("phase-diagram", "region map over a (gamma, omega_a) grid");
    CLI::App* dist = app.add_subcommand("distributions", "probability distributions at one point");
    CLI::App* trans = app.add_subcommand("transition-order", "Ehrenfest order along a path");
    for (CLI::App* cmd : {point, sweep, phase, dist, trans}) add_common(cmd, o);
    dist->add_option("--kinds", o.kinds, "comma list of distributions to emit");
    trans->add_option("--h-step", o.probe_h, "one-sided stencil step (default 1e-3)");
    trans->add_option("--tol", o.probe_tol, "derivative mismatch tolerance (default 1e-2)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        CommandResult res;
        if (point->parsed())
            res = cmd_point(o);
        else if (sweep->parsed())
            res = cmd_sweep(o);
        else if (phase->parsed())
            res = cmd_phase_diagram(o);
        else if (dist->parsed())
            res = cmd_distributions(o);
        else
            res = cmd_transition_order(o);

        if (o.output.empty()) {
            out << res.body;
        } else {
            std::ofstream f(o.output, std::ios::binary);
            if (!f) throw std::invalid_argument("cannot open output file '" + o.output + "'");
            f << res.body;
            if (!f) throw std::invalid_argument("failed writing '" + o.output + "'");
        }
        return res.exit_code;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace tc::cli
