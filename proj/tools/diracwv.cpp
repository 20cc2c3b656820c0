// diracwv: command-line front end for the step-potential weak-value toolkit.
// Subcommands sweep the analytic scattering identities, integrate the pair
// production rate, run Trotter/series convergence studies, and drive the
// position-space quantum-walk solver from JSON configs. Outputs are CSV
// (header row, %.12e numbers, LF endings) or JSON (stable key order), and
// are byte-deterministic for a fixed invocation.
//
// Exit codes: 0 success, 1 validation error, 2 numerical non-convergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "diracwv/evolution.hpp"
#include "diracwv/lattice.hpp"
#include "diracwv/pairprod.hpp"
#include "diracwv/quadrature.hpp"
#include "diracwv/scattering.hpp"
#include "diracwv/weakvalue.hpp"

using nlohmann::ordered_json;
using namespace diracwv;

namespace {

struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12e", v);
    return buf;
}

struct Table {
    std::vector<std::string> columns;
    std::vector<ordered_json> rows;
    ordered_json extra = ordered_json::object();  // merged into the JSON form

    std::string render(const std::string& format) const;
};

std::string Table::render(const std::string& format) const {
    if (format == "json") {
        ordered_json doc;
        for (const auto& [k, v] : extra.items()) {
            doc[k] = v;
        }
        doc["rows"] = rows;
        return doc.dump(2) + "\n";
    }
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out += columns[c];
        out += (c + 1 < columns.size()) ? "," : "\n";
    }
    for (const ordered_json& row : rows) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const ordered_json& cell = row.at(columns[c]);
            if (cell.is_number_float()) {
                out += fmt_double(cell.get<double>());
            } else if (cell.is_boolean()) {
                out += cell.get<bool>() ? "1" : "0";
            } else if (cell.is_number_integer()) {
                out += std::to_string(cell.get<long long>());
            } else {
                out += cell.get<std::string>();
            }
            out += (c + 1 < columns.size()) ? "," : "\n";
        }
    }
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::invalid_argument("out: cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out.good()) {
        throw std::invalid_argument("out: write to '" + path + "' failed");
    }
}

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 1) {
        throw std::invalid_argument("points: must be >= 1");
    }
    if (points == 1) {
        return {lo};
    }
    if (!(hi >= lo)) {
        throw std::invalid_argument("range: max must be >= min");
    }
    std::vector<double> xs(points);
    for (int i = 0; i < points; ++i) {
        xs[i] = lo + (hi - lo) * i / (points - 1);
    }
    return xs;
}

// ---------------------------------------------------------------------------
// sweep-transmission

int cmd_sweep_transmission(double e_min, double e_max, int points, double V0, double m,
                           const std::string& out, const std::string& format) {
    Table table;
    table.columns = {"E_f", "regime", "r", "T", "R", "weak_value", "strange",
                     "T_from_weakvalue", "identity_residual"};
    for (const double E_f : linspace(e_min, e_max, points)) {
        const Regime regime = classify_regime(E_f, V0, m);
        ordered_json row;
        row["E_f"] = E_f;
        row["regime"] = to_string(regime);
        if (is_transmission_regime(regime)) {
            const ScatteringSolution sol = transmission(E_f, V0, m, regime);
            const ScatteringSolution match = boundary_match(E_f, V0, m, regime);
            const WeakValueResult w = step_weak_value(E_f, V0, m, regime);
            const double T_wv = weakvalue_transmission(E_f, V0, m, regime);
            const double residual = std::max(std::abs(sol.T - T_wv),
                                             std::abs(sol.T - match.j_tra / match.j_inc));
            row["r"] = sol.r;
            row["T"] = sol.T;
            row["R"] = sol.R;
            row["weak_value"] = w.real_part;
            row["strange"] = w.strange;
            row["T_from_weakvalue"] = T_wv;
            row["identity_residual"] = residual;
        } else {
            row["r"] = 0.0;
            row["T"] = 0.0;
            row["R"] = 1.0;
            row["weak_value"] = 0.0;
            row["strange"] = false;
            row["T_from_weakvalue"] = 0.0;
            row["identity_residual"] = 0.0;
        }
        table.rows.push_back(std::move(row));
    }
    write_output(out, table.render(format));
    return 0;
}

// ---------------------------------------------------------------------------
// pair-rate

int cmd_pair_rate(std::vector<double> v0s, double v0_min, double v0_max, int points, double m,
                  double tol, const std::string& out, const std::string& format) {
    if (v0s.empty()) {
        if (points <= 0) {
            throw std::invalid_argument("pair-rate: give --v0 values or --v0-min/--v0-max/--points");
        }
        v0s = linspace(v0_min, v0_max, points);
    }
    Table table;
    table.columns = {"V0", "rate", "estimated_error", "evaluations", "converged"};
    bool all_converged = true;
    for (const double V0 : v0s) {
        const RateResult r = pair_rate(V0, m, tol);
        all_converged = all_converged && r.converged;
        ordered_json row;
        row["V0"] = V0;
        row["rate"] = r.rate;
        row["estimated_error"] = r.estimated_error;
        row["evaluations"] = r.evaluations;
        row["converged"] = r.converged;
        table.rows.push_back(std::move(row));
    }
    write_output(out, table.render(format));
    if (!all_converged) {
        std::cerr << "pair-rate: quadrature did not converge for at least one row\n";
        return 2;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// trotter-convergence

int cmd_trotter_convergence(double p, double m, double t, std::vector<int> steps_list,
                            const std::string& out, const std::string& format) {
    if (steps_list.empty()) {
        steps_list = {64, 128, 256, 512};
    }
    for (std::size_t i = 1; i < steps_list.size(); ++i) {
        if (steps_list[i] <= steps_list[i - 1]) {
            throw std::invalid_argument("steps: list must be strictly ascending");
        }
    }
    const Mat2 exact = exact_propagator(p, m, t).entries;
    Table table;
    table.columns = {"steps", "max_entry_error", "ratio_to_prev"};
    std::vector<double> xs, errs;
    double prev = 0.0;
    for (const int steps : steps_list) {
        const double err = max_entry_distance(trotter_propagator(p, m, t, steps).entries, exact);
        ordered_json row;
        row["steps"] = steps;
        row["max_entry_error"] = err;
        row["ratio_to_prev"] = prev > 0.0 && err > 0.0 ? prev / err : 0.0;
        table.rows.push_back(std::move(row));
        xs.push_back(steps);
        errs.push_back(err);
        prev = err;
    }
    double fitted_order = 0.0;
    double max_err = 0.0;
    for (const double e : errs) {
        max_err = std::max(max_err, e);
    }
    if (max_err > 1e-13) {
        fitted_order = -loglog_slope(xs, errs);
    }
    table.extra["fitted_order"] = fitted_order;
    write_output(out, table.render(format));
    if (format != "json") {
        std::cout << "fitted_order=" << fmt_double(fitted_order) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// series-check

int cmd_series_check(double p, double m, double E_f, double t_min, double t_max, int points,
                     const std::string& out, const std::string& format) {
    if (!(E_f > m)) {
        throw std::invalid_argument("ef: need E_f > m for the post-selection state");
    }
    const double E_i = -std::hypot(p, m);
    const ChiralityState pre = chirality_state(E_i, p, m, Branch::plus);
    const ChiralityState post = chirality_state(E_f, dispersion_momentum(E_f, m), m, Branch::minus);

    Table table;
    table.columns = {"t", "fc1_quad", "fc1_closed", "fc1_abs_err", "fs1_abs",
                     "elem3_abs_residual"};
    for (const double t : linspace(t_min, t_max, points)) {
        const SeriesCoefficients c1 = series_coefficient(1, t, m);
        const double fc1_closed = m > 0.0 ? std::sin(m * t) / m : t;
        const Complex truncated = postselected_element(pre, post, p, m, t, 3);
        const Complex exact = inner(post.spinor, exact_propagator(p, m, t).entries * pre.spinor);
        ordered_json row;
        row["t"] = t;
        row["fc1_quad"] = c1.f_c;
        row["fc1_closed"] = fc1_closed;
        row["fc1_abs_err"] = std::abs(c1.f_c - fc1_closed);
        row["fs1_abs"] = std::abs(c1.f_s);
        row["elem3_abs_residual"] = std::abs(truncated - exact);
        table.rows.push_back(std::move(row));
    }
    write_output(out, table.render(format));
    return 0;
}

// ---------------------------------------------------------------------------
// weak-value

int cmd_weak_value(double E_f, double V0, double m, const std::string& out,
                   const std::string& format) {
    const Regime regime = classify_regime(E_f, V0, m);
    if (!is_transmission_regime(regime)) {
        throw std::invalid_argument("no transmission channel at (E_f=" + std::to_string(E_f) +
                                    ", V0=" + std::to_string(V0) + ", m=" + std::to_string(m) +
                                    "): regime=" + to_string(regime));
    }
    const WeakValueResult closed = step_weak_value(E_f, V0, m, regime);
    const StepStates states = step_states(E_f, V0, m, regime);
    const WeakValueResult generic = weak_value(states.incident, states.transmitted, PauliAxis::z);
    const ScatteringSolution sol = transmission(E_f, V0, m, regime);

    Table table;
    table.columns = {"E_f", "V0", "m", "regime", "weak_value", "weak_value_from_spinors",
                     "strange", "overlap", "v_incident", "v_transmitted", "T", "R",
                     "T_from_weakvalue"};
    ordered_json row;
    row["E_f"] = E_f;
    row["V0"] = V0;
    row["m"] = m;
    row["regime"] = to_string(regime);
    row["weak_value"] = closed.real_part;
    row["weak_value_from_spinors"] = generic.real_part;
    row["strange"] = closed.strange;
    row["overlap"] = closed.overlap.real();
    row["v_incident"] = states.incident.group_velocity();
    row["v_transmitted"] = states.transmitted.group_velocity();
    row["T"] = sol.T;
    row["R"] = sol.R;
    row["T_from_weakvalue"] = weakvalue_transmission(E_f, V0, m, regime);
    table.rows.push_back(std::move(row));
    write_output(out, table.render(format));
    return 0;
}

// ---------------------------------------------------------------------------
// lattice-scatter config parsing (strict: unknown keys are rejected and every
// diagnostic names the offending field path)

void reject_unknown_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                         const std::string& path) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.contains(key)) {
            throw std::invalid_argument(path + "." + key + ": unknown key");
        }
    }
}

const ordered_json& require_key(const ordered_json& obj, const std::string& key,
                                const std::string& path) {
    if (!obj.contains(key)) {
        throw std::invalid_argument(path + "." + key + ": missing required key");
    }
    return obj.at(key);
}

double as_number(const ordered_json& v, const std::string& path) {
    if (!v.is_number()) {
        throw std::invalid_argument(path + ": must be a number");
    }
    return v.get<double>();
}

long long as_integer(const ordered_json& v, const std::string& path) {
    if (!v.is_number_integer()) {
        throw std::invalid_argument(path + ": must be an integer");
    }
    return v.get<long long>();
}

std::string as_string(const ordered_json& v, const std::string& path) {
    if (!v.is_string()) {
        throw std::invalid_argument(path + ": must be a string");
    }
    return v.get<std::string>();
}

struct LatticeRunConfig {
    lattice::LatticeConfig lattice;
    lattice::PacketSpec packet;
    double t_max = 0.0;
    lattice::ScatterOptions options;
    bool ramp_kick_check = false;
    bool analytic_reference = true;
    ordered_json echo;  // parsed config, echoed into the summary
};

LatticeRunConfig parse_lattice_config(const std::string& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::invalid_argument("config: cannot open '" + file + "'");
    }
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument("config: JSON parse error: " + std::string(e.what()));
    }
    const std::string root = "config";
    reject_unknown_keys(doc, {"n_sites", "dx", "m", "potential", "boundary", "packet", "t_max",
                              "history_stride", "interaction_pad", "ramp_kick_check",
                              "analytic_reference", "snapshots"},
                        root);

    LatticeRunConfig run;
    run.lattice.n_sites = static_cast<int>(as_integer(require_key(doc, "n_sites", root),
                                                      root + ".n_sites"));
    run.lattice.dx = as_number(require_key(doc, "dx", root), root + ".dx");
    run.lattice.m = as_number(require_key(doc, "m", root), root + ".m");

    const ordered_json& pot = require_key(doc, "potential", root);
    const std::string pot_path = root + ".potential";
    reject_unknown_keys(pot, {"type", "V0", "x0", "x_left", "width"}, pot_path);
    const std::string pot_type = as_string(require_key(pot, "type", pot_path), pot_path + ".type");
    if (pot_type == "none") {
        run.lattice.potential = lattice::PotentialProfile::none();
    } else if (pot_type == "step") {
        run.lattice.potential = lattice::PotentialProfile::step(
            as_number(require_key(pot, "V0", pot_path), pot_path + ".V0"),
            as_number(require_key(pot, "x0", pot_path), pot_path + ".x0"));
    } else if (pot_type == "ramp") {
        run.lattice.potential = lattice::PotentialProfile::ramp(
            as_number(require_key(pot, "V0", pot_path), pot_path + ".V0"),
            as_number(require_key(pot, "x_left", pot_path), pot_path + ".x_left"),
            as_number(require_key(pot, "width", pot_path), pot_path + ".width"));
    } else {
        throw std::invalid_argument(pot_path + ".type: must be none|step|ramp");
    }

    if (doc.contains("boundary")) {
        const ordered_json& bnd = doc.at("boundary");
        const std::string bnd_path = root + ".boundary";
        reject_unknown_keys(bnd, {"type", "width", "strength"}, bnd_path);
        const std::string bnd_type =
            as_string(require_key(bnd, "type", bnd_path), bnd_path + ".type");
        if (bnd_type == "periodic") {
            run.lattice.boundary = lattice::Boundary::periodic();
        } else if (bnd_type == "absorbing") {
            run.lattice.boundary = lattice::Boundary::absorbing(
                as_number(require_key(bnd, "width", bnd_path), bnd_path + ".width"),
                as_number(require_key(bnd, "strength", bnd_path), bnd_path + ".strength"));
        } else {
            throw std::invalid_argument(bnd_path + ".type: must be periodic|absorbing");
        }
    }

    const ordered_json& pk = require_key(doc, "packet", root);
    const std::string pk_path = root + ".packet";
    reject_unknown_keys(pk, {"x0", "p0", "sigma", "branch", "energy"}, pk_path);
    run.packet.x0 = as_number(require_key(pk, "x0", pk_path), pk_path + ".x0");
    run.packet.p0 = as_number(require_key(pk, "p0", pk_path), pk_path + ".p0");
    run.packet.sigma = as_number(require_key(pk, "sigma", pk_path), pk_path + ".sigma");
    const std::string branch =
        as_string(require_key(pk, "branch", pk_path), pk_path + ".branch");
    if (branch == "plus") {
        run.packet.branch = Branch::plus;
    } else if (branch == "minus") {
        run.packet.branch = Branch::minus;
    } else {
        throw std::invalid_argument(pk_path + ".branch: must be plus|minus");
    }
    const std::string energy =
        as_string(require_key(pk, "energy", pk_path), pk_path + ".energy");
    if (energy == "positive") {
        run.packet.energy_sign = +1;
    } else if (energy == "negative") {
        run.packet.energy_sign = -1;
    } else {
        throw std::invalid_argument(pk_path + ".energy: must be positive|negative");
    }

    run.t_max = as_number(require_key(doc, "t_max", root), root + ".t_max");
    if (!(run.t_max > 0.0)) {
        throw std::invalid_argument(root + ".t_max: must be > 0");
    }
    if (doc.contains("history_stride")) {
        run.options.history_stride =
            static_cast<int>(as_integer(doc.at("history_stride"), root + ".history_stride"));
    }
    if (doc.contains("interaction_pad")) {
        run.options.interaction_pad = as_number(doc.at("interaction_pad"),
                                                root + ".interaction_pad");
    }
    if (doc.contains("ramp_kick_check")) {
        if (!doc.at("ramp_kick_check").is_boolean()) {
            throw std::invalid_argument(root + ".ramp_kick_check: must be a boolean");
        }
        run.ramp_kick_check = doc.at("ramp_kick_check").get<bool>();
    }
    if (doc.contains("analytic_reference")) {
        if (!doc.at("analytic_reference").is_boolean()) {
            throw std::invalid_argument(root + ".analytic_reference: must be a boolean");
        }
        run.analytic_reference = doc.at("analytic_reference").get<bool>();
    }
    if (doc.contains("snapshots")) {
        const ordered_json& snap = doc.at("snapshots");
        const std::string snap_path = root + ".snapshots";
        reject_unknown_keys(snap, {"stride", "prefix", "format"}, snap_path);
        run.options.snapshot_stride =
            static_cast<int>(as_integer(require_key(snap, "stride", snap_path),
                                        snap_path + ".stride"));
        run.options.snapshot_prefix =
            as_string(require_key(snap, "prefix", snap_path), snap_path + ".prefix");
        const std::string sformat =
            as_string(require_key(snap, "format", snap_path), snap_path + ".format");
        if (sformat == "csv") {
            run.options.snapshot_binary = false;
        } else if (sformat == "binary") {
            run.options.snapshot_binary = true;
        } else {
            throw std::invalid_argument(snap_path + ".format: must be csv|binary");
        }
    }

    run.lattice.validate();
    run.packet.validate(run.lattice);
    run.echo = std::move(doc);
    return run;
}

int cmd_lattice_scatter(const std::string& config_file, const std::string& out,
                        const std::string& format) {
    const LatticeRunConfig run = parse_lattice_config(config_file);

    const auto t0 = std::chrono::steady_clock::now();
    lattice::ScatterResult res;
    try {
        res = lattice::run_scattering(run.lattice, run.packet, run.t_max, run.options);
    } catch (const std::runtime_error& e) {
        throw NonConvergence(e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ordered_json summary;
    summary["config"] = run.echo;
    const double V0 = run.lattice.potential.V0;
    const double E_f = run.packet.kinetic_energy(run.lattice.m) + V0;
    summary["carrier"] = {{"kinetic_energy", run.packet.kinetic_energy(run.lattice.m)},
                          {"spatial_momentum", run.packet.spatial_momentum()},
                          {"total_energy", E_f}};
    summary["T_num"] = res.T_num;
    summary["R_num"] = res.R_num;
    summary["interaction_norm"] = res.interaction_norm;
    summary["absorbed_norm"] = res.absorbed_norm;
    summary["max_step_norm_drift"] = res.max_step_norm_drift;
    summary["transmitted_flux_integral"] = res.transmitted_flux_integral;
    summary["transmitted_plane_x"] = res.transmitted_plane_x;
    summary["steps"] = res.steps;
    summary["final_norm"] = res.final_state.norm2();

    double T_analytic = 0.0;
    bool has_analytic = false;
    if (run.analytic_reference && run.lattice.m > 0.0) {
        const Regime regime = classify_regime(E_f, V0, run.lattice.m);
        summary["regime"] = to_string(regime);
        const ScatteringSolution sol = transmission(E_f, V0, run.lattice.m, regime);
        T_analytic = sol.T;
        has_analytic = true;
        summary["T_analytic"] = sol.T;
        summary["T_abs_error"] = std::abs(res.T_num - sol.T);
    }

    if (run.ramp_kick_check) {
        lattice::KickResult kick;
        try {
            kick = lattice::ramp_momentum_kick_check(run.lattice, run.packet, run.t_max);
        } catch (const std::runtime_error& e) {
            throw NonConvergence(e.what());
        }
        summary["kick"] = {{"dp_measured", kick.dp_measured},
                           {"dp_predicted", kick.dp_predicted},
                           {"k_before", kick.k_before},
                           {"k_after", kick.k_after},
                           {"transmitted_norm", kick.transmitted_norm}};
    }

    if (run.options.history_stride > 0) {
        ordered_json hist = ordered_json::array();
        for (const lattice::HistorySample& h : res.history) {
            hist.push_back({{"t", h.t},
                            {"centroid", h.centroid},
                            {"norm2", h.norm2},
                            {"flux_at_plane", h.flux_at_plane}});
        }
        summary["history"] = std::move(hist);
    }

    if (format == "json") {
        write_output(out, summary.dump(2) + "\n");
    } else {
        Table table;
        table.columns = {"T_num", "R_num", "T_analytic", "T_abs_error", "interaction_norm",
                         "absorbed_norm", "max_step_norm_drift", "transmitted_flux_integral",
                         "steps"};
        ordered_json row;
        row["T_num"] = res.T_num;
        row["R_num"] = res.R_num;
        row["T_analytic"] = T_analytic;
        row["T_abs_error"] = has_analytic ? std::abs(res.T_num - T_analytic) : 0.0;
        row["interaction_norm"] = res.interaction_norm;
        row["absorbed_norm"] = res.absorbed_norm;
        row["max_step_norm_drift"] = res.max_step_norm_drift;
        row["transmitted_flux_integral"] = res.transmitted_flux_integral;
        row["steps"] = res.steps;
        table.rows.push_back(std::move(row));
        write_output(out, table.render(format));
    }
    std::cerr << "lattice-scatter: " << res.steps << " steps in " << seconds << " s\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1+1D Dirac step-potential toolkit: weak values, transmission identities, "
                 "pair-production rates, and quantum-walk scattering runs"};
    app.require_subcommand(1);

    std::string out, format = "csv";
    const auto add_io = [&](CLI::App* sub) {
        sub->add_option("--out", out, "output path (stdout when omitted)");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    // sweep-transmission
    double e_min = 1.01, e_max = 3.99, V0 = 5.0, m = 1.0;
    int points = 100;
    auto* sweep = app.add_subcommand("sweep-transmission",
                                     "tabulate r, T, R and the weak-value identity over E_f");
    sweep->add_option("--e-min", e_min, "lowest E_f");
    sweep->add_option("--e-max", e_max, "highest E_f");
    sweep->add_option("--points", points, "number of rows");
    sweep->add_option("--v0", V0, "step height");
    sweep->add_option("--m", m, "rest mass");
    add_io(sweep);

    // pair-rate
    std::vector<double> v0_list;
    double v0_min = 2.0, v0_max = 8.0, tol = 1e-8;
    int v0_points = 0;
    auto* rate = app.add_subcommand("pair-rate", "pair-production rate vs step height");
    rate->add_option("--v0", v0_list, "explicit V0 values");
    rate->add_option("--v0-min", v0_min, "range start (with --points)");
    rate->add_option("--v0-max", v0_max, "range end (with --points)");
    rate->add_option("--points", v0_points, "number of range points");
    rate->add_option("--m", m, "rest mass");
    rate->add_option("--tol", tol, "absolute quadrature tolerance");
    add_io(rate);

    // trotter-convergence
    double tp = 1.0, tm = 1.0, tt = 1.0;
    std::vector<int> steps_list;
    auto* trotter = app.add_subcommand("trotter-convergence",
                                       "walk-propagator error vs step count");
    trotter->add_option("--p", tp, "momentum of the mode");
    trotter->add_option("--m", tm, "rest mass");
    trotter->add_option("--t", tt, "total evolution time");
    trotter->add_option("--steps", steps_list, "ascending step counts");
    add_io(trotter);

    // series-check
    double sp = 2.8284271247461903, sm = 1.0, sef = 2.0, st_min = 0.02, st_max = 1.0;
    int s_points = 25;
    auto* series = app.add_subcommand("series-check",
                                      "nested-integral coefficients vs closed forms");
    series->add_option("--p", sp, "mode momentum (pre-selection is the E<0 state at this p)");
    series->add_option("--m", sm, "rest mass");
    series->add_option("--ef", sef, "post-selection kinetic energy");
    series->add_option("--t-min", st_min, "first time sample");
    series->add_option("--t-max", st_max, "last time sample");
    series->add_option("--points", s_points, "number of rows");
    add_io(series);

    // weak-value
    double wef = 2.0, wv0 = 5.0, wm = 1.0;
    auto* wv = app.add_subcommand("weak-value", "step weak value and both T routes at one point");
    wv->add_option("--ef", wef, "total energy E_f");
    wv->add_option("--v0", wv0, "step height");
    wv->add_option("--m", wm, "rest mass");
    add_io(wv);

    // lattice-scatter
    std::string config_file;
    auto* lat = app.add_subcommand("lattice-scatter", "quantum-walk wave-packet scattering run");
    lat->add_option("--config", config_file, "JSON run configuration")->required();
    add_io(lat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (sweep->parsed()) {
            return cmd_sweep_transmission(e_min, e_max, points, V0, m, out, format);
        }
        if (rate->parsed()) {
            return cmd_pair_rate(v0_list, v0_min, v0_max, v0_points, m, tol, out, format);
        }
        if (trotter->parsed()) {
            return cmd_trotter_convergence(tp, tm, tt, steps_list, out, format);
        }
        if (series->parsed()) {
            return cmd_series_check(sp, sm, sef, st_min, st_max, s_points, out, format);
        }
        if (wv->parsed()) {
            return cmd_weak_value(wef, wv0, wm, out, format);
        }
        if (lat->parsed()) {
            return cmd_lattice_scatter(config_file, out, format);
        }
    } catch (const NonConvergence& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
