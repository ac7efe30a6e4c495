// model.hpp - charger-battery model: parameters, Hamiltonian, Liouvillian, reference states
//
// Charger A is driven and coupled to a reservoir; battery B only exchanges
// excitations with A. Joint basis {|ee>, |eg>, |ge>, |gg>} with A first.

#pragma once

#include "qbw/qla.hpp"

namespace qbw {

namespace basis {
inline constexpr int ee = 0;
inline constexpr int eg = 1;
inline constexpr int ge = 2;
inline constexpr int gg = 3;
} // namespace basis

enum class ReservoirKind { Bosonic, Fermionic };

// Reservoir occupancy n and its companion N (1 + n for bosons, 1 - n for fermions).
class Reservoir {
public:
    Reservoir() = default;

    static Reservoir bosonic(double n);
    static Reservoir fermionic(double n);
    static Reservoir make(ReservoirKind kind, double n);

    ReservoirKind kind() const { return kind_; }
    double n() const { return n_; }
    double N() const { return N_; }

    friend bool operator==(const Reservoir&, const Reservoir&) = default;

private:
    Reservoir(ReservoirKind kind, double n, double N) : kind_(kind), n_(n), N_(N) {}

    ReservoirKind kind_ = ReservoirKind::Bosonic;
    double n_ = 0.0;
    double N_ = 1.0;
};

// All energies share one unit; the figure presets use g = omega0 = 1.
struct ChargingParams {
    double omega0 = 1.0;
    double g = 1.0;
    double F = 0.0;
    double J = 0.0;
    double delta_A = 0.0;
    double delta_B = 0.0;
    Reservoir reservoir{};
    double beta = 100.0;

    double k() const { return F / g; }
    double l() const { return J / g; }

    friend bool operator==(const ChargingParams&, const ChargingParams&) = default;
};

// Throws UsageError when an invariant of ChargingParams is violated.
void validate(const ChargingParams& p);

const char* to_string(ReservoirKind kind);
ReservoirKind parse_reservoir_kind(const std::string& s);

// Bose-Einstein / Fermi-Dirac occupancy at mode frequency omega_k. T = 0 is
// the zero-temperature limit. mu is ignored for bosons.
Reservoir occupancy_from_temperature(ReservoirKind kind, double omega_k, double T,
                                     double mu = 0.0);

ComplexMatrix hamiltonian(const ChargingParams& p);

// 16x16 generator acting on column-stacked vec(rho):
//   drho/dt = -i[H, rho] + J (N D[sigma_-^A] + n D[sigma_+^A]),
//   D[L]rho = 2 L rho L^dagger - L^dagger L rho - rho L^dagger L.
ComplexMatrix liouvillian(const ChargingParams& p);

// |gg><gg|
ComplexMatrix initial_state();

// Gibbs state of H0 = omega0 sigma_+ sigma_- in the {|e>, |g>} basis.
ComplexMatrix thermal_state(double beta, double omega0);

// Closed-form steady state for zero detuning and a zero-temperature
// reservoir, with k = F/g and l = J/g. Throws UsageError for k = l = 0.
ComplexMatrix steady_state_resonance_analytic(double k, double l);

} // namespace qbw
