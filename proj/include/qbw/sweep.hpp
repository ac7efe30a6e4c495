// sweep.hpp - deterministic parameter sweeps, finite differences and kink detection

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbw/eur.hpp"
#include "qbw/model.hpp"

namespace qbw {

inline constexpr const char* kVersion = "1.0.0";

enum class SweepParam { J_over_g, F_over_g, Delta_over_g, n_b, n_f, t };
enum class Quantity { E_B, dE_B, W_f, W_e, eta1, eta2, U_l, U_r, tightness };
enum class SweepMode { Steady, Trajectory };

const char* to_string(SweepParam p);
const char* to_string(Quantity q);
const char* to_string(SweepMode m);
SweepParam parse_sweep_param(const std::string& s);
Quantity parse_quantity(const std::string& s);
SweepMode parse_sweep_mode(const std::string& s);
bool is_energy(Quantity q);

// Copy of `fixed` with the swept parameter set to `value` (dimensionless
// form; Delta sets both detunings).
ChargingParams apply_sweep_value(const ChargingParams& fixed, SweepParam swept, double value);

// n evenly spaced points from `from` to `to` inclusive.
std::vector<double> linspace(double from, double to, std::size_t n);

struct SweepSpec {
    SweepParam swept = SweepParam::J_over_g;
    std::vector<double> grid;
    ChargingParams fixed{};
    std::vector<Quantity> quantities;
    SweepMode mode = SweepMode::Steady;
    ObservableSet observables = parse_observable_set("xz");
    LogBase thermo_log_base = LogBase::E;
    double dt = 1e-3; // trajectory mode only
};

// Throws UsageError for an empty or non-ascending grid, values outside the
// physical domain, or a mode/parameter mismatch (t <=> trajectory).
void validate(const SweepSpec& spec);

struct Column {
    std::string name;
    bool energy = false; // rescaled by --omega0 on output
};

struct SweepTable {
    std::vector<std::string> comments;                     // without the leading '#'
    std::vector<Column> columns;                           // first column is the axis
    std::vector<std::vector<std::optional<double>>> rows;  // rows[i][column]
    std::vector<std::string> errors;                       // per row, empty on success

    std::size_t column_index(const std::string& name) const; // throws UsageError
    std::vector<std::optional<double>> column(const std::string& name) const;
    void add_column(Column c, const std::vector<std::optional<double>>& values);
};

struct SweepOptions {
    unsigned threads = 1;
    bool reverse = false; // process grid points back to front
};

// One row per grid point in grid order regardless of execution order.
// Failures at a point leave its values absent and fill its error field.
SweepTable run_sweep(const SweepSpec& spec, const SweepOptions& opts = {});

struct DerivativeSeries {
    std::vector<double> grid;
    std::vector<std::optional<double>> left;     // (y_i - y_{i-1}) / h
    std::vector<std::optional<double>> right;    // (y_{i+1} - y_i) / h
    std::vector<std::optional<double>> central;  // (y_{i+1} - y_{i-1}) / 2h
    std::vector<std::optional<double>> estimate; // central, one-sided at edges and near kinks
    double h = 0.0;
};

// Throws UsageError for fewer than 3 points or a non-uniform grid. At a
// declared kink the estimate is absent; its neighbours use the one-sided
// difference that does not straddle it.
DerivativeSeries finite_difference(const std::vector<double>& x,
                                   const std::vector<std::optional<double>>& y,
                                   const std::vector<double>& kinks = {});

inline constexpr double kDefaultKinkThreshold = 5.0;

// Interior points where |right - left| exceeds threshold times the median of
// |right - left| over the interior (and a 1e-9 relative noise floor).
std::vector<double> detect_kink(const DerivativeSeries& d,
                                double threshold = kDefaultKinkThreshold);

} // namespace qbw
