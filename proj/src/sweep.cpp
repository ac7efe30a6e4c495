// sweep.cpp

#include "qbw/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "qbw/csv.hpp"
#include "qbw/dynamics.hpp"
#include "qbw/errors.hpp"
#include "qbw/workext.hpp"

namespace qbw {

namespace {

constexpr SweepParam kParams[] = {SweepParam::J_over_g, SweepParam::F_over_g,
                                  SweepParam::Delta_over_g, SweepParam::n_b, SweepParam::n_f,
                                  SweepParam::t};
constexpr Quantity kQuantities[] = {Quantity::E_B,  Quantity::dE_B, Quantity::W_f,
                                    Quantity::W_e,  Quantity::eta1, Quantity::eta2,
                                    Quantity::U_l,  Quantity::U_r,  Quantity::tightness};

} // namespace

const char* to_string(SweepParam p) {
    switch (p) {
    case SweepParam::J_over_g: return "J_over_g";
    case SweepParam::F_over_g: return "F_over_g";
    case SweepParam::Delta_over_g: return "Delta_over_g";
    case SweepParam::n_b: return "n_b";
    case SweepParam::n_f: return "n_f";
    case SweepParam::t: return "t";
    }
    return "?";
}

const char* to_string(Quantity q) {
    switch (q) {
    case Quantity::E_B: return "E_B";
    case Quantity::dE_B: return "dE_B";
    case Quantity::W_f: return "W_f";
    case Quantity::W_e: return "W_e";
    case Quantity::eta1: return "eta1";
    case Quantity::eta2: return "eta2";
    case Quantity::U_l: return "U_l";
    case Quantity::U_r: return "U_r";
    case Quantity::tightness: return "tightness";
    }
    return "?";
}

const char* to_string(SweepMode m) { return m == SweepMode::Steady ? "steady" : "trajectory"; }

SweepParam parse_sweep_param(const std::string& s) {
    for (SweepParam p : kParams)
        if (s == to_string(p)) return p;
    throw UsageError("unknown sweep parameter '" + s +
                     "' (expected J_over_g, F_over_g, Delta_over_g, n_b, n_f, t)");
}

Quantity parse_quantity(const std::string& s) {
    for (Quantity q : kQuantities)
        if (s == to_string(q)) return q;
    throw UsageError("unknown quantity '" + s + "'");
}

SweepMode parse_sweep_mode(const std::string& s) {
    if (s == "steady") return SweepMode::Steady;
    if (s == "trajectory") return SweepMode::Trajectory;
    throw UsageError("unknown sweep mode '" + s + "' (expected steady|trajectory)");
}

bool is_energy(Quantity q) {
    return q == Quantity::E_B || q == Quantity::dE_B || q == Quantity::W_f || q == Quantity::W_e;
}

ChargingParams apply_sweep_value(const ChargingParams& fixed, SweepParam swept, double value) {
    ChargingParams p = fixed;
    switch (swept) {
    case SweepParam::J_over_g: p.J = value * p.g; break;
    case SweepParam::F_over_g: p.F = value * p.g; break;
    case SweepParam::Delta_over_g:
        p.delta_A = value * p.g;
        p.delta_B = value * p.g;
        break;
    case SweepParam::n_b: p.reservoir = Reservoir::bosonic(value); break;
    case SweepParam::n_f: p.reservoir = Reservoir::fermionic(value); break;
    case SweepParam::t: break;
    }
    return p;
}

std::vector<double> linspace(double from, double to, std::size_t n) {
    if (n == 0) throw UsageError("linspace: need at least one point");
    if (n == 1) return {from};
    std::vector<double> out(n);
    const double step = (to - from) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) out[i] = from + step * static_cast<double>(i);
    out.back() = to;
    return out;
}

void validate(const SweepSpec& spec) {
    if (spec.grid.empty()) throw UsageError("sweep grid is empty");
    for (std::size_t i = 0; i < spec.grid.size(); ++i) {
        if (!std::isfinite(spec.grid[i])) throw UsageError("sweep grid has a non-finite value");
        if (i > 0 && !(spec.grid[i] > spec.grid[i - 1]))
            throw UsageError("sweep grid must be strictly ascending");
    }
    if (spec.quantities.empty()) throw UsageError("sweep has no quantities");
    if ((spec.mode == SweepMode::Trajectory) != (spec.swept == SweepParam::t))
        throw UsageError("trajectory mode sweeps t, and only trajectory mode does");
    validate(spec.fixed);

    const double lo = spec.grid.front(), hi = spec.grid.back();
    switch (spec.swept) {
    case SweepParam::J_over_g:
    case SweepParam::F_over_g:
    case SweepParam::n_b:
    case SweepParam::t:
        if (lo < 0.0) throw UsageError(std::string(to_string(spec.swept)) + " must be >= 0");
        break;
    case SweepParam::n_f:
        if (lo < 0.0 || hi > 1.0) throw UsageError("n_f must lie in [0, 1]");
        break;
    case SweepParam::Delta_over_g: break;
    }
    if (spec.mode == SweepMode::Trajectory && !(spec.dt > 0.0))
        throw UsageError("trajectory sweep needs dt > 0");
}

std::size_t SweepTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == name) return i;
    std::string known;
    for (const Column& c : columns) known += (known.empty() ? "" : ", ") + c.name;
    throw UsageError("no column '" + name + "' (have: " + known + ")");
}

std::vector<std::optional<double>> SweepTable::column(const std::string& name) const {
    const std::size_t j = column_index(name);
    std::vector<std::optional<double>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[j]);
    return out;
}

void SweepTable::add_column(Column c, const std::vector<std::optional<double>>& values) {
    if (values.size() != rows.size()) throw UsageError("add_column: row count mismatch");
    columns.push_back(std::move(c));
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(values[i]);
}

namespace {

using Row = std::vector<std::optional<double>>;

Row evaluate(const ComplexMatrix& rho, const ComplexMatrix& rho0, const ChargingParams& p,
             const SweepSpec& spec) {
    const WorkReport w = efficiencies(rho, rho0, p, spec.thermo_log_base);
    bool need_eur = false;
    for (Quantity q : spec.quantities)
        need_eur |= q == Quantity::U_l || q == Quantity::U_r || q == Quantity::tightness;
    EurReport e;
    if (need_eur) e = eur_report(rho, spec.observables);

    Row row;
    for (Quantity q : spec.quantities) {
        switch (q) {
        case Quantity::E_B: row.emplace_back(w.e_b); break;
        case Quantity::dE_B: row.emplace_back(w.de_b); break;
        case Quantity::W_f: row.emplace_back(w.w_f); break;
        case Quantity::W_e: row.emplace_back(w.w_e); break;
        case Quantity::eta1: row.push_back(w.eta1); break;
        case Quantity::eta2: row.push_back(w.eta2); break;
        case Quantity::U_l: row.emplace_back(e.u_l); break;
        case Quantity::U_r: row.emplace_back(e.u_r); break;
        case Quantity::tightness: row.emplace_back(e.tightness); break;
        }
    }
    return row;
}

SweepTable empty_table(const SweepSpec& spec) {
    SweepTable t;
    t.comments.push_back(std::string(" qbw ") + kVersion);
    t.comments.push_back(std::string(" mode=") + to_string(spec.mode) +
                         " swept=" + to_string(spec.swept));
    const ChargingParams& p = spec.fixed;
    std::string obs;
    for (const Observable& o : spec.observables) obs += (obs.empty() ? "" : ";") + o.name();
    t.comments.push_back(
        " omega0=" + format_number(p.omega0) + " g=" + format_number(p.g) +
        " F_over_g=" + format_number(p.F / p.g) + " J_over_g=" + format_number(p.J / p.g) +
        " delta_A_over_g=" + format_number(p.delta_A / p.g) +
        " delta_B_over_g=" + format_number(p.delta_B / p.g) + " reservoir=" +
        to_string(p.reservoir.kind()) + " n=" + format_number(p.reservoir.n()) +
        " beta_omega0=" + format_number(p.beta * p.omega0) + " thermo_log_base=" +
        (spec.thermo_log_base == LogBase::E ? "e" : "2") + " observables=" + obs +
        (spec.mode == SweepMode::Trajectory ? " dt=" + format_number(spec.dt) : ""));

    t.columns.push_back({to_string(spec.swept), false});
    for (Quantity q : spec.quantities) t.columns.push_back({to_string(q), is_energy(q)});
    t.rows.assign(spec.grid.size(), Row(t.columns.size()));
    t.errors.assign(spec.grid.size(), {});
    for (std::size_t i = 0; i < spec.grid.size(); ++i) t.rows[i][0] = spec.grid[i];
    return t;
}

void fill_row(SweepTable& t, std::size_t i, const Row& values) {
    for (std::size_t j = 0; j < values.size(); ++j) t.rows[i][j + 1] = values[j];
}

void run_steady(const SweepSpec& spec, const SweepOptions& opts, SweepTable& t) {
    const std::size_t n = spec.grid.size();
    const ComplexMatrix rho0 = initial_state();
    std::vector<Row> results(n);
    std::vector<std::string> errors(n);

    auto work = [&](std::size_t i) {
        try {
            const ChargingParams p = apply_sweep_value(spec.fixed, spec.swept, spec.grid[i]);
            results[i] = evaluate(steady_state(p), rho0, p, spec);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < n; k = next++) work(opts.reverse ? n - 1 - k : k);
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(n)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i].empty())
            fill_row(t, i, results[i]);
        else
            t.errors[i] = errors[i];
    }
}

void run_trajectory(const SweepSpec& spec, SweepTable& t) {
    const std::size_t n = spec.grid.size();
    const double t_end = spec.grid.back();
    std::size_t steps = t_end == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(t_end / spec.dt - 1e-9));
    const double h = steps == 0 ? spec.dt : t_end / static_cast<double>(steps);

    // every grid time must coincide with an integration step
    std::vector<std::size_t> at(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double idx = spec.grid[i] / h;
        at[i] = static_cast<std::size_t>(std::llround(idx));
        if (std::abs(idx - static_cast<double>(at[i])) > 1e-6)
            throw UsageError("trajectory grid time " + std::to_string(spec.grid[i]) +
                             " is not a multiple of the step " + std::to_string(h));
    }

    const ChargingParams& p = spec.fixed;
    const ComplexMatrix rho0 = initial_state();
    std::size_t cursor = 0;
    try {
        integrate(p, rho0, t_end, spec.dt, [&](std::size_t step, double, const ComplexMatrix& rho) {
            while (cursor < n && at[cursor] == step) {
                try {
                    fill_row(t, cursor, evaluate(rho, rho0, p, spec));
                } catch (const std::exception& e) {
                    t.errors[cursor] = e.what();
                }
                ++cursor;
            }
        });
    } catch (const NumericalError& e) {
        for (std::size_t i = cursor; i < n; ++i) t.errors[i] = e.what();
    }
}

} // namespace

SweepTable run_sweep(const SweepSpec& spec, const SweepOptions& opts) {
    validate(spec);
    SweepTable t = empty_table(spec);
    if (spec.mode == SweepMode::Steady)
        run_steady(spec, opts, t);
    else
        run_trajectory(spec, t);
    return t;
}

DerivativeSeries finite_difference(const std::vector<double>& x,
                                   const std::vector<std::optional<double>>& y,
                                   const std::vector<double>& kinks) {
    const std::size_t n = x.size();
    if (n < 3) throw UsageError("finite_difference: need at least 3 points");
    if (y.size() != n) throw UsageError("finite_difference: x and y differ in length");
    const double h = (x.back() - x.front()) / static_cast<double>(n - 1);
    if (!(h > 0.0)) throw UsageError("finite_difference: grid must be ascending");
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs((x[i] - x[i - 1]) - h) > 1e-8 * h)
            throw UsageError("finite_difference: grid is not uniform");

    DerivativeSeries d;
    d.grid = x;
    d.h = h;
    d.left.assign(n, std::nullopt);
    d.right.assign(n, std::nullopt);
    d.central.assign(n, std::nullopt);
    d.estimate.assign(n, std::nullopt);

    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && y[i] && y[i - 1]) d.left[i] = (*y[i] - *y[i - 1]) / h;
        if (i + 1 < n && y[i] && y[i + 1]) d.right[i] = (*y[i + 1] - *y[i]) / h;
        if (i > 0 && i + 1 < n && y[i - 1] && y[i + 1]) d.central[i] = (*y[i + 1] - *y[i - 1]) / (2.0 * h);
    }

    auto near = [&](std::size_t i, double k) { return std::abs(x[i] - k) <= 1e-6 * h; };
    for (std::size_t i = 0; i < n; ++i) {
        bool at_kink = false, kink_left = false, kink_right = false;
        for (double k : kinks) {
            at_kink |= near(i, k);
            kink_left |= i > 0 && near(i - 1, k);
            kink_right |= i + 1 < n && near(i + 1, k);
        }
        if (at_kink) continue;
        if (i == 0 || kink_left)
            d.estimate[i] = d.right[i];
        else if (i + 1 == n || kink_right)
            d.estimate[i] = d.left[i];
        else
            d.estimate[i] = d.central[i];
    }
    return d;
}

std::vector<double> detect_kink(const DerivativeSeries& d, double threshold) {
    const std::size_t n = d.grid.size();
    std::vector<std::pair<std::size_t, double>> jumps;
    double scale = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!d.left[i] || !d.right[i]) continue;
        jumps.emplace_back(i, std::abs(*d.right[i] - *d.left[i]));
        scale = std::max({scale, std::abs(*d.left[i]), std::abs(*d.right[i])});
    }
    if (jumps.empty()) return {};

    std::vector<double> sorted;
    for (const auto& [_, j] : jumps) sorted.push_back(j);
    std::sort(sorted.begin(), sorted.end());
    const std::size_t m = sorted.size();
    const double median = m % 2 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
    const double floor = 1e-9 * (1.0 + scale);

    std::vector<double> out;
    for (const auto& [i, j] : jumps)
        if (j > threshold * median && j > floor) out.push_back(d.grid[i]);
    return out;
}

} // namespace qbw
