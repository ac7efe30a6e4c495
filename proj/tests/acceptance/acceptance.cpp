// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "qbw/csv.hpp"
#include "qbw/dynamics.hpp"
#include "qbw/eur.hpp"
#include "qbw/figures.hpp"
#include "qbw/model.hpp"
#include "qbw/sweep.hpp"
#include "qbw/workext.hpp"
#include "support/random_states.hpp"

using namespace qbw;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

ChargingParams resonant(double k, double l) {
    ChargingParams p;
    p.F = k;
    p.J = l;
    return p;
}

// Shared by criteria 2, 5 and 8: |gg> evolved to t = 100 at k = l = 2.
struct TrajectoryRun {
    std::vector<ComplexMatrix> states;
    ComplexMatrix final_state;
    double seconds = 0.0;
    std::string failure;
};

const TrajectoryRun& trajectory() {
    static const TrajectoryRun run = [] {
        TrajectoryRun r;
        const ChargingParams p = resonant(2.0, 2.0);
        const auto t0 = Clock::now();
        try {
            integrate(p, initial_state(), 100.0, 1e-3,
                      [&](std::size_t step, double, const ComplexMatrix& rho) {
                          if (step % 50 == 0) r.states.push_back(rho);
                          r.final_state = rho;
                      });
        } catch (const std::exception& e) {
            r.failure = e.what();
        }
        r.seconds = seconds_since(t0);
        return r;
    }();
    return run;
}

Outcome c1_closed_form() {
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (auto [k, l] : {std::pair{2.0, 2.0}, {1.0, 0.5}, {4.0, 1.0}}) {
        const ComplexMatrix num = steady_state(resonant(k, l));
        worst = std::max(worst, max_abs(num - steady_state_resonance_analytic(k, l)));
    }
    const double s = seconds_since(t0);
    return {worst < 1e-8 && s < 1.0, fmt("max entry error %.2e", worst) + fmt(", %.3f s", s)};
}

Outcome c2_trajectory() {
    const TrajectoryRun& r = trajectory();
    if (!r.failure.empty()) return {false, r.failure};
    const double d = trace_distance(r.final_state, steady_state(resonant(2.0, 2.0)));
    return {d < 1e-6 && r.seconds < 10.0, fmt("trace distance %.2e", d) + fmt(", %.2f s", r.seconds)};
}

Outcome c3_ergotropy() {
    testing::StateGenerator gen(20241015);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const ComplexMatrix rho = i % 2 ? gen.density(4) : gen.density_varied(4);
        const double closed = ergotropy_closed_form(rho, 1.0);
        const double generic = ergotropy_generic(partial_trace(rho, Subsystem::B), 1.0);
        worst = std::max(worst, std::abs(closed - generic));
    }
    return {worst < 1e-10, fmt("max difference %.2e over 1000 states", worst)};
}

Outcome c4_worked_values() {
    const ChargingParams p = resonant(2.0, 2.0);
    const WorkReport w = efficiencies(steady_state(p), initial_state(), p);
    const bool ok = std::abs(w.e_b - 0.375) <= 1e-9 && std::abs(w.w_e - 0.154508) <= 1e-6 &&
                    std::abs(w.w_f - 0.36972) <= 1e-4 && w.eta1 && std::abs(*w.eta1 - 0.9859) <= 1e-3 &&
                    w.eta2 && std::abs(*w.eta2 - 0.4120) <= 1e-3;
    std::ostringstream s;
    s << "E_B " << format_number(w.e_b) << ", W_e " << format_number(w.w_e) << ", W_f "
      << format_number(w.w_f) << ", eta1 " << (w.eta1 ? format_number(*w.eta1) : "absent")
      << ", eta2 " << (w.eta2 ? format_number(*w.eta2) : "absent");
    return {ok, s.str()};
}

Outcome c5_eur() {
    const ObservableSet xz = parse_observable_set("xz");
    const ObservableSet xyz = parse_observable_set("xyz");
    testing::StateGenerator gen(5);
    double worst = 1e300;
    for (int i = 0; i < 1000; ++i) {
        const ComplexMatrix rho = i % 2 ? gen.density(4) : gen.density_varied(4);
        worst = std::min({worst, tightness(rho, xz), tightness(rho, xyz)});
    }
    const TrajectoryRun& r = trajectory();
    if (!r.failure.empty()) return {false, r.failure};
    double worst_traj = 1e300;
    for (const ComplexMatrix& rho : r.states)
        worst_traj = std::min({worst_traj, tightness(rho, xz), tightness(rho, xyz)});

    const double f = overlap_bound_f(xz);
    // the constant term is what remains of the bound once S(A|B) is removed
    const ComplexMatrix probe = r.final_state;
    const double s_ab = vn_entropy(probe, LogBase::Two) -
                        vn_entropy(partial_trace(probe, Subsystem::B), LogBase::Two);
    const double constant = uncertainty_rhs(probe, xz) - s_ab;
    const bool ok = worst >= -1e-9 && worst_traj >= -1e-9 && f == 0.5 &&
                    std::abs(constant - 1.0) < 1e-12;
    return {ok, fmt("min tightness random %.2e", worst) + fmt(", trajectory %.2e", worst_traj) +
                    fmt(", f %.17g", f) + fmt(", constant %.15g", constant)};
}

Outcome c6_fig2() {
    SweepSpec s;
    s.swept = SweepParam::J_over_g;
    s.grid = linspace(0.25, 4.0, 16);
    s.fixed = resonant(2.0, 0.0);
    s.quantities = {Quantity::eta1, Quantity::eta2};
    const SweepTable t = run_sweep(s);
    const auto e1 = t.column("eta1");
    const auto e2 = t.column("eta2");
    bool ok = true;
    double min1 = 1.0;
    for (std::size_t i = 0; i < e1.size(); ++i) {
        if (!e1[i] || !e2[i]) return {false, "missing value at J/g = " + format_number(s.grid[i])};
        min1 = std::min(min1, *e1[i]);
        ok &= *e1[i] > 0.95;
        if (i > 0) ok &= *e2[i] >= *e2[i - 1];
    }
    return {ok, fmt("min eta1 %.4f", min1) + fmt(", eta2 from %.4f", *e2.front()) +
                    fmt(" to %.4f", *e2.back())};
}

Outcome c7_phase_transition() {
    SweepSpec s;
    s.swept = SweepParam::n_f;
    for (int i = 1; i <= 19; ++i) s.grid.push_back(0.05 * i);
    s.fixed = resonant(2.0, 2.0);
    s.fixed.reservoir = Reservoir::fermionic(0.0);
    s.quantities = {Quantity::W_e, Quantity::tightness};
    const SweepTable t = run_sweep(s);
    const auto kinks = detect_kink(finite_difference(s.grid, t.column("W_e")));
    const auto tight = t.column("tightness");
    std::size_t argmin = 0;
    for (std::size_t i = 0; i < tight.size(); ++i)
        if (tight[i] && *tight[i] < *tight[argmin]) argmin = i;
    const bool kink_ok = kinks.size() == 1 && std::abs(kinks[0] - 0.5) < 1e-12;
    const bool min_ok = std::abs(s.grid[argmin] - 0.5) < 1e-12;
    std::string k;
    for (double v : kinks) k += (k.empty() ? "" : " ") + format_number(v);
    return {kink_ok && min_ok,
            "kinks {" + k + "}, tightness minimum at n_f = " + format_number(s.grid[argmin])};
}

Outcome c8_exergy_window() {
    const TrajectoryRun& r = trajectory();
    if (!r.failure.empty()) return {false, r.failure};
    const ChargingParams p = resonant(2.0, 2.0);
    const ComplexMatrix rho0 = initial_state();
    double worst_low = 1e300, worst_high = 1e300;
    for (const ComplexMatrix& rho : r.states) {
        const WorkReport w = efficiencies(rho, rho0, p);
        worst_low = std::min(worst_low, w.w_f);
        worst_high = std::min(worst_high, w.de_b - w.w_f);
    }
    const bool ok = worst_low >= -1e-9 && worst_high >= -1e-9;
    return {ok, fmt("min W_f %.2e", worst_low) + fmt(", min dE_B - W_f %.2e", worst_high) +
                    " over " + std::to_string(r.states.size()) + " times"};
}

Outcome c9_determinism() {
    std::ostringstream a, b, err;
    const int ca = cli::run({"figure", "fig2a"}, a, err);
    const int cb = cli::run({"figure", "fig2a"}, b, err);
    const FigurePreset& f = figure_preset("fig2a");
    const std::string forward = to_csv(figure_dataset("fig2a"));
    const std::string reversed = to_csv(figure_dataset("fig2a", {1, true}));
    const std::string threaded = to_csv(figure_dataset("fig2a", {4, true}));
    const bool ok = ca == 0 && cb == 0 && a.str() == b.str() && forward == reversed &&
                    forward == threaded && a.str() == forward && !f.spec.grid.empty();
    return {ok, std::to_string(a.str().size()) + " bytes, runs " +
                    (a.str() == b.str() ? "identical" : "differ") + ", reverse order " +
                    (forward == reversed ? "identical" : "differs")};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"1 analytic vs numeric steady state", c1_closed_form},
        {"2 trajectory reaches steady state", c2_trajectory},
        {"3 ergotropy closed form vs passive state", c3_ergotropy},
        {"4 worked values at k = l = 2", c4_worked_values},
        {"5 uncertainty inequality", c5_eur},
        {"6 efficiency trends versus J/g", c6_fig2},
        {"7 fermionic phase transition at n_f = 0.5", c7_phase_transition},
        {"8 exergy window along the trajectory", c8_exergy_window},
        {"9 deterministic figure output", c9_determinism},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
