// figures.cpp - sweep axes and fixed parameters of each figure panel
//
// All panels use beta = 100/omega0 and omega0 = g = 1. The figure
// captions fix the parameters but not the grid resolution; every axis uses
// 33 points except J/g, which starts at 0.125 because the steady state is
// not unique without dissipation.

#include "qbw/figures.hpp"

#include "qbw/errors.hpp"

namespace qbw {

namespace {

using Q = Quantity;

const std::vector<Quantity> kWorkColumns = {Q::W_f, Q::W_e, Q::eta1, Q::eta2, Q::tightness};
const std::vector<Quantity> kEurColumns = {Q::U_l, Q::U_r, Q::eta2};
const std::vector<Quantity> kLargeJColumns = {Q::eta1, Q::eta2, Q::U_l, Q::tightness};
const std::vector<Quantity> kDerivColumns = {Q::W_f, Q::W_e, Q::eta1, Q::eta2};

struct Fixed {
    double F = 0.0;
    double J = 0.0;
    double delta = 0.0;
};

FigurePreset make(std::string id, std::string description, SweepParam axis,
                  std::vector<double> grid, Fixed fixed, std::vector<Quantity> columns,
                  bool derivatives = false) {
    FigurePreset f;
    f.id = std::move(id);
    f.description = std::move(description);
    f.derivatives = derivatives;
    SweepSpec& s = f.spec;
    s.swept = axis;
    s.grid = std::move(grid);
    s.fixed.omega0 = 1.0;
    s.fixed.g = 1.0;
    s.fixed.beta = 100.0;
    s.fixed.F = fixed.F;
    s.fixed.J = fixed.J;
    s.fixed.delta_A = fixed.delta;
    s.fixed.delta_B = fixed.delta;
    s.fixed.reservoir = axis == SweepParam::n_f ? Reservoir::fermionic(0.0) : Reservoir::bosonic(0.0);
    s.quantities = std::move(columns);
    s.mode = SweepMode::Steady;
    return f;
}

std::vector<FigurePreset> build() {
    const auto j_axis = linspace(0.125, 4.0, 32);
    const auto axis_0_4 = linspace(0.0, 4.0, 33);
    const auto nb_axis = linspace(0.0, 2.0, 33);
    const auto nf_axis = linspace(0.0, 1.0, 33);
    using P = SweepParam;

    std::vector<FigurePreset> v;
    v.push_back(make("fig2a", "W_f, W_e, eta1, eta2, tightness vs J/g; F = 2g, T = Delta = 0",
                     P::J_over_g, j_axis, {2, 0, 0}, kWorkColumns));
    v.push_back(make("fig2b", "W_f, W_e, eta1, eta2, tightness vs F/g; J = 2g, T = Delta = 0",
                     P::F_over_g, axis_0_4, {0, 2, 0}, kWorkColumns));
    v.push_back(make("fig3a", "work, efficiencies, tightness vs Delta/g; F = 2J = 6g, T = 0",
                     P::Delta_over_g, axis_0_4, {6, 3, 0}, kWorkColumns));
    v.push_back(make("fig3b", "work, efficiencies, tightness vs Delta/g; J = 2F = 4g, T = 0",
                     P::Delta_over_g, axis_0_4, {2, 4, 0}, kWorkColumns));

    const struct {
        const char* suffix;
        Fixed fixed;
        const char* text;
    } reservoir_panels[] = {
        {"a", {4, 2, 0.0}, "F = 2J = 4g, Delta = 0"},
        {"b", {2, 4, 0.0}, "J = 2F = 4g, Delta = 0"},
        {"c", {4, 2, 0.1}, "F = 2J = 4g, Delta = 0.1g"},
        {"d", {2, 4, 0.1}, "J = 2F = 4g, Delta = 0.1g"},
    };
    for (const auto& panel : reservoir_panels)
        v.push_back(make(std::string("fig4") + panel.suffix,
                         std::string("bosonic reservoir, vs n_b; ") + panel.text, P::n_b, nb_axis,
                         panel.fixed, kWorkColumns));
    for (const auto& panel : reservoir_panels)
        v.push_back(make(std::string("fig5") + panel.suffix,
                         std::string("fermionic reservoir, vs n_f; ") + panel.text, P::n_f,
                         nf_axis, panel.fixed, kWorkColumns));

    v.push_back(make("fig6a", "U_l, U_r, eta2 vs F/g; J = 2g, T = Delta = 0", P::F_over_g,
                     axis_0_4, {0, 2, 0}, kEurColumns));
    v.push_back(make("fig6b", "U_l, U_r, eta2 vs Delta/g; F = 2J = 6g, T = 0", P::Delta_over_g,
                     axis_0_4, {6, 3, 0}, kEurColumns));
    v.push_back(make("fig6c", "U_l, U_r, eta2 vs n_b; J = 2F = 4g, Delta = 0, bosonic", P::n_b,
                     nb_axis, {2, 4, 0}, kEurColumns));
    v.push_back(make("fig6d", "U_l, U_r, eta2 vs n_f; J = 2F = 4g, Delta = 0, fermionic", P::n_f,
                     nf_axis, {2, 4, 0}, kEurColumns));

    const struct {
        const char* id;
        double J;
    } large_j[] = {{"s1a", 4}, {"s1b", 10}, {"s1c", 100}, {"s1d", 1000}};
    for (const auto& panel : large_j)
        v.push_back(make(panel.id,
                         "eta1, eta2, U_l, tightness vs F/g on [0, 2J/g]; J = " +
                             std::to_string(static_cast<int>(panel.J)) + "g, T = Delta = 0",
                         P::F_over_g, linspace(0.0, 2.0 * panel.J, 33), {0, panel.J, 0},
                         kLargeJColumns));

    v.push_back(make("s2a", "derivatives of W_f, W_e, eta1, eta2 in n_f; F = 2J = 4g", P::n_f,
                     nf_axis, {4, 2, 0}, kDerivColumns, true));
    v.push_back(make("s2b", "derivatives of W_f, W_e, eta1, eta2 in n_f; J = 2F = 4g", P::n_f,
                     nf_axis, {2, 4, 0}, kDerivColumns, true));
    return v;
}

void append_derivatives(SweepTable& t, SweepParam axis) {
    std::vector<double> x;
    for (const auto& row : t.rows) x.push_back(*row[0]);

    const auto we = t.column(to_string(Quantity::W_e));
    const std::vector<double> kinks = detect_kink(finite_difference(x, we));

    const std::string var = std::string("d") + to_string(axis);
    for (Quantity q : kDerivColumns) {
        const std::string name = to_string(q);
        const DerivativeSeries d = finite_difference(x, t.column(name), kinks);
        const bool energy = is_energy(q);
        t.add_column({"d" + name + "/" + var, energy}, d.estimate);
        t.add_column({"d" + name + "/" + var + "_left", energy}, d.left);
        t.add_column({"d" + name + "/" + var + "_right", energy}, d.right);
    }
    std::vector<std::optional<double>> flag;
    for (double xi : x) {
        bool hit = false;
        for (double k : kinks) hit |= xi == k;
        flag.emplace_back(hit ? 1.0 : 0.0);
    }
    t.add_column({"kink_W_e", false}, flag);
}

} // namespace

const std::vector<FigurePreset>& figure_presets() {
    static const std::vector<FigurePreset> presets = build();
    return presets;
}

const FigurePreset& figure_preset(const std::string& id) {
    for (const FigurePreset& f : figure_presets())
        if (f.id == id) return f;
    std::string ids;
    for (const FigurePreset& f : figure_presets()) ids += (ids.empty() ? "" : ", ") + f.id;
    throw UsageError("unknown figure id '" + id + "'; valid ids: " + ids);
}

SweepTable figure_dataset(const std::string& id, const SweepOptions& opts) {
    const FigurePreset& f = figure_preset(id);
    SweepTable t = run_sweep(f.spec, opts);
    t.comments.insert(t.comments.begin() + 1, " figure=" + f.id + ": " + f.description);
    if (f.derivatives) append_derivatives(t, f.spec.swept);
    return t;
}

} // namespace qbw
