// cli.cpp

#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbw/csv.hpp"
#include "qbw/dynamics.hpp"
#include "qbw/errors.hpp"
#include "qbw/eur.hpp"
#include "qbw/figures.hpp"
#include "qbw/params_io.hpp"
#include "qbw/sweep.hpp"
#include "qbw/workext.hpp"

namespace qbw::cli {

namespace {

using nlohmann::json;

// Physical-parameter flags shared by steady/evolve/sweep. A config file is
// read first; any flag given explicitly overrides it.
struct ParamFlags {
    std::string file;
    std::optional<double> F_over_g, J_over_g, delta_over_g, delta_A_over_g, delta_B_over_g;
    std::optional<std::string> reservoir;
    std::optional<double> n;
    std::optional<double> beta_omega0;
    std::optional<std::string> thermo_log_base;
    std::string observables = "xz";
    double omega0_out = 1.0;

    void attach(CLI::App* app) {
        app->add_option("--params", file, "JSON parameter file");
        app->add_option("--F-over-g", F_over_g, "drive amplitude F/g (default 2)");
        app->add_option("--J-over-g", J_over_g, "dissipation rate J/g (default 2)");
        app->add_option("--delta-over-g", delta_over_g, "detuning of both qubits, Delta/g");
        app->add_option("--delta-A-over-g", delta_A_over_g, "charger detuning Delta_A/g");
        app->add_option("--delta-B-over-g", delta_B_over_g, "battery detuning Delta_B/g");
        app->add_option("--reservoir", reservoir, "bosonic|fermionic");
        app->add_option("--n", n, "reservoir occupancy");
        app->add_option("--beta-omega0", beta_omega0, "inverse extraction temperature, beta*omega0");
        app->add_option("--thermo-log-base", thermo_log_base, "entropy base inside the free energy: e|2");
        app->add_option("--observables", observables, "xz, xyz or Bloch triples 'x,y,z;x,y,z'");
        app->add_option("--omega0", omega0_out, "rescale energy outputs by omega0");
    }

    RunConfig resolve() const {
        RunConfig cfg;
        cfg.params.F = 2.0;
        cfg.params.J = 2.0;
        if (!file.empty()) cfg = load_config(file);
        ChargingParams& p = cfg.params;
        if (F_over_g) p.F = *F_over_g * p.g;
        if (J_over_g) p.J = *J_over_g * p.g;
        if (delta_over_g) p.delta_A = p.delta_B = *delta_over_g * p.g;
        if (delta_A_over_g) p.delta_A = *delta_A_over_g * p.g;
        if (delta_B_over_g) p.delta_B = *delta_B_over_g * p.g;
        if (reservoir || n) {
            const ReservoirKind kind = reservoir ? parse_reservoir_kind(*reservoir) : p.reservoir.kind();
            p.reservoir = Reservoir::make(kind, n ? *n : p.reservoir.n());
        }
        if (beta_omega0) p.beta = *beta_omega0 / p.omega0;
        if (thermo_log_base) cfg.thermo_log_base = parse_log_base(*thermo_log_base);
        validate(p);
        if (!(omega0_out > 0.0)) throw UsageError("--omega0 must be > 0");
        return cfg;
    }
};

std::ostream& open_out(const std::string& path, std::ofstream& file, std::ostream& fallback) {
    if (path.empty() || path == "-") return fallback;
    file.open(path);
    if (!file) throw UsageError("cannot write '" + path + "'");
    return file;
}

json matrix_json(const ComplexMatrix& m) {
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json r = json::array(), c = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            r.push_back(m(i, j).real());
            c.push_back(m(i, j).imag());
        }
        re.push_back(r);
        im.push_back(c);
    }
    return {{"re", re}, {"im", im}};
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string optional_text(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string("absent");
}

int cmd_steady(const ParamFlags& flags, bool as_json, std::ostream& out) {
    const RunConfig cfg = flags.resolve();
    const ChargingParams& p = cfg.params;
    const ObservableSet obs = parse_observable_set(flags.observables);
    const SteadyStateReport ss = steady_state_report(p);
    const WorkReport w = efficiencies(ss.rho, initial_state(), p, cfg.thermo_log_base);
    const EurReport e = eur_report(ss.rho, obs);
    const double s = flags.omega0_out;

    if (as_json) {
        json j;
        j["params"] = config_to_json(cfg);
        j["rho"] = matrix_json(ss.rho);
        j["work"] = {{"E_B", w.e_b * s},   {"dE_B", w.de_b * s},          {"W_f", w.w_f * s},
                     {"W_e", w.w_e * s},   {"eta1", optional_json(w.eta1)}, {"eta2", optional_json(w.eta2)}};
        j["eur"] = {{"observables", flags.observables}, {"conditionals", e.conditionals},
                    {"U_l", e.u_l}, {"U_r", e.u_r}, {"tightness", e.tightness}, {"f", e.f}};
        j["diagnostics"] = {{"residual", ss.residual},
                            {"smallest_singular", ss.smallest_singular},
                            {"second_singular", ss.second_singular}};
        out << j.dump(2) << '\n';
        return kExitOk;
    }

    out << "steady state (basis ee, eg, ge, gg):\n";
    out << std::setprecision(10);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            out << "  ";
            const cd z = ss.rho(i, j);
            out << std::setw(14) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::setw(12)
                << std::abs(z.imag()) << "i";
        }
        out << '\n';
    }
    out << "residual " << ss.residual << ", singular gap " << ss.second_singular << "\n\n";
    out << "work:\n"
        << "  E_B  = " << format_number(w.e_b * s) << '\n'
        << "  dE_B = " << format_number(w.de_b * s) << '\n'
        << "  W_f  = " << format_number(w.w_f * s) << '\n'
        << "  W_e  = " << format_number(w.w_e * s) << '\n'
        << "  eta1 = " << optional_text(w.eta1) << '\n'
        << "  eta2 = " << optional_text(w.eta2) << "\n\n";
    out << "uncertainty (" << flags.observables << ", bits):\n";
    for (std::size_t x = 0; x < obs.size(); ++x)
        out << "  S(" << obs[x].name() << "|B) = " << format_number(e.conditionals[x]) << '\n';
    out << "  U_l = " << format_number(e.u_l) << '\n'
        << "  U_r = " << format_number(e.u_r) << '\n'
        << "  tightness = " << format_number(e.tightness) << '\n'
        << "  f = " << format_number(e.f) << '\n';
    return kExitOk;
}

const std::vector<Quantity> kAllQuantities = {
    Quantity::E_B, Quantity::dE_B, Quantity::W_f, Quantity::W_e,     Quantity::eta1,
    Quantity::eta2, Quantity::U_l, Quantity::U_r, Quantity::tightness};

std::vector<Quantity> parse_quantities(const std::string& list) {
    if (list.empty()) return kAllQuantities;
    std::vector<Quantity> out;
    std::stringstream ss(list);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_quantity(tok));
    return out;
}

int cmd_evolve(const ParamFlags& flags, double t_end, double dt, std::size_t stride,
               const std::string& quantities, const std::string& out_path, std::ostream& out) {
    const RunConfig cfg = flags.resolve();
    if (!(dt > 0.0)) throw UsageError("--dt must be > 0");
    if (!(t_end >= 0.0)) throw UsageError("--t-end must be >= 0");
    const std::size_t steps = t_end == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    if (stride == 0) stride = default_stride(t_end, dt);
    const double h = steps == 0 ? dt : t_end / static_cast<double>(steps);

    SweepSpec spec;
    spec.swept = SweepParam::t;
    spec.mode = SweepMode::Trajectory;
    spec.fixed = cfg.params;
    spec.dt = dt;
    spec.thermo_log_base = cfg.thermo_log_base;
    spec.observables = parse_observable_set(flags.observables);
    spec.quantities = parse_quantities(quantities);
    for (std::size_t n = 0; n <= steps; n += stride) spec.grid.push_back(h * static_cast<double>(n));
    if (steps % stride != 0) spec.grid.push_back(t_end);

    const SweepTable t = run_sweep(spec);
    std::ofstream file;
    write_csv(t, open_out(out_path, file, out), flags.omega0_out);
    for (const std::string& e : t.errors)
        if (!e.empty()) throw NumericalError(e);
    return kExitOk;
}

int cmd_sweep(const ParamFlags& flags, const std::string& name, double from, double to,
              std::size_t points, const std::string& quantities, unsigned threads,
              double dt, const std::string& out_path, std::ostream& out) {
    const RunConfig cfg = flags.resolve();
    SweepSpec spec;
    spec.swept = parse_sweep_param(name);
    spec.mode = spec.swept == SweepParam::t ? SweepMode::Trajectory : SweepMode::Steady;
    spec.grid = linspace(from, to, points);
    spec.fixed = cfg.params;
    spec.dt = dt;
    spec.thermo_log_base = cfg.thermo_log_base;
    spec.observables = parse_observable_set(flags.observables);
    spec.quantities = parse_quantities(quantities);
    const SweepTable t = run_sweep(spec, {threads, false});
    std::ofstream file;
    write_csv(t, open_out(out_path, file, out), flags.omega0_out);
    return kExitOk;
}

int cmd_figure(const std::string& id, bool list, unsigned threads, double omega0_out,
               const std::string& out_path, std::ostream& out) {
    if (list || id.empty()) {
        for (const FigurePreset& f : figure_presets()) out << f.id << "  " << f.description << '\n';
        if (!list) throw UsageError("figure: missing id");
        return kExitOk;
    }
    const SweepTable t = figure_dataset(id, {threads, false});
    std::ofstream file;
    write_csv(t, open_out(out_path, file, out), omega0_out);
    return kExitOk;
}

int cmd_derive(const std::string& in_path, const std::string& column, double threshold,
               const std::string& out_path, std::ostream& out) {
    const SweepTable t = read_csv_file(in_path);
    if (t.columns.empty() || t.rows.empty()) throw UsageError("derive: input has no data");
    std::vector<double> x;
    for (const auto& row : t.rows) {
        if (!row[0]) throw UsageError("derive: axis column has an empty value");
        x.push_back(*row[0]);
    }
    const auto y = t.column(column);
    const std::vector<double> kinks = detect_kink(finite_difference(x, y), threshold);
    const DerivativeSeries d = finite_difference(x, y, kinks);

    SweepTable r;
    r.comments.push_back(std::string(" qbw ") + kVersion + " derive column=" + column +
                         " h=" + format_number(d.h) + " threshold=" + format_number(threshold));
    std::string k;
    for (double v : kinks) k += (k.empty() ? "" : " ") + format_number(v);
    r.comments.push_back(" kinks=" + (k.empty() ? std::string("none") : k));
    r.columns = {{t.columns[0].name, false}, {column, false}, {"left", false},
                 {"right", false},           {"central", false}, {"estimate", false}};
    for (std::size_t i = 0; i < x.size(); ++i)
        r.rows.push_back({x[i], y[i], d.left[i], d.right[i], d.central[i], d.estimate[i]});
    r.errors.assign(x.size(), {});

    std::ofstream file;
    write_csv(r, open_out(out_path, file, out));
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"qbw: charger-battery quantum battery workbench"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("qbw ") + kVersion);

    ParamFlags steady_flags, evolve_flags, sweep_flags;

    auto* steady = app.add_subcommand("steady", "steady state, work and uncertainty report");
    steady_flags.attach(steady);
    bool as_json = false;
    steady->add_flag("--json", as_json, "machine-readable output");

    auto* evolve = app.add_subcommand("evolve", "trajectory quantities from |gg> versus time");
    evolve_flags.attach(evolve);
    double t_end = 0.0, dt = kDefaultStep;
    std::size_t stride = 0;
    std::string evolve_out, evolve_quantities;
    evolve->add_option("--t-end", t_end, "final time in units of 1/g")->required();
    evolve->add_option("--dt", dt, "integration step in units of 1/g");
    evolve->add_option("--stride", stride, "record every N steps (default: <= 2000 rows)");
    evolve->add_option("--quantities", evolve_quantities, "comma-separated column list");
    evolve->add_option("--out", evolve_out, "output CSV (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "steady-state (or time) sweep over one parameter");
    sweep_flags.attach(sweep);
    std::string sweep_name, sweep_out, sweep_quantities;
    double from = 0.0, to = 0.0, sweep_dt = kDefaultStep;
    std::size_t points = 33;
    unsigned sweep_threads = 1;
    sweep->add_option("--sweep", sweep_name, "J_over_g|F_over_g|Delta_over_g|n_b|n_f|t")->required();
    sweep->add_option("--from", from, "first grid value")->required();
    sweep->add_option("--to", to, "last grid value")->required();
    sweep->add_option("--points", points, "number of grid points");
    sweep->add_option("--quantities", sweep_quantities, "comma-separated column list");
    sweep->add_option("--threads", sweep_threads, "worker threads");
    sweep->add_option("--dt", sweep_dt, "integration step for t sweeps");
    sweep->add_option("--out", sweep_out, "output CSV (default stdout)");

    auto* figure = app.add_subcommand("figure", "reproduce a figure dataset");
    std::string figure_id, figure_out;
    bool figure_list = false;
    unsigned figure_threads = 1;
    double figure_omega0 = 1.0;
    figure->add_option("id", figure_id, "figure id (see --list)");
    figure->add_flag("--list", figure_list, "list figure ids");
    figure->add_option("--threads", figure_threads, "worker threads");
    figure->add_option("--omega0", figure_omega0, "rescale energy outputs by omega0");
    figure->add_option("--out", figure_out, "output CSV (default stdout)");

    auto* derive = app.add_subcommand("derive", "finite differences and kink report for a CSV column");
    std::string derive_in, derive_column, derive_out;
    double threshold = kDefaultKinkThreshold;
    derive->add_option("--in", derive_in, "input CSV")->required();
    derive->add_option("--column", derive_column, "column to differentiate")->required();
    derive->add_option("--threshold", threshold, "kink threshold (multiples of the median jump)");
    derive->add_option("--out", derive_out, "output CSV (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*steady) return cmd_steady(steady_flags, as_json, out);
        if (*evolve)
            return cmd_evolve(evolve_flags, t_end, dt, stride, evolve_quantities, evolve_out, out);
        if (*sweep)
            return cmd_sweep(sweep_flags, sweep_name, from, to, points, sweep_quantities,
                             sweep_threads, sweep_dt, sweep_out, out);
        if (*figure)
            return cmd_figure(figure_id, figure_list, figure_threads, figure_omega0, figure_out, out);
        if (*derive) return cmd_derive(derive_in, derive_column, threshold, derive_out, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}

} // namespace qbw::cli
