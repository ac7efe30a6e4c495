// workext.hpp - battery energetics: internal energy, exergy, ergotropy, efficiencies
//
// Battery Hamiltonian H0 = omega0 sigma_+ sigma_-, i.e. energies {omega0, 0}
// on {|e>, |g>}. Thermodynamic entropies default to nats.

#pragma once

#include <optional>

#include "qbw/model.hpp"

namespace qbw {

struct WorkReport {
    double e_b = 0.0;  // battery internal energy
    double de_b = 0.0; // E_B(t) - E_B(0)
    double w_f = 0.0;  // exergy
    double w_e = 0.0;  // ergotropy
    std::optional<double> eta1; // w_f / de_b, absent when |de_b| < 1e-12 omega0
    std::optional<double> eta2; // w_e / de_b
};

// omega0 times the excited population of a single-qubit state.
double internal_energy(const ComplexMatrix& rho, double omega0);

// omega0 (rho_ee,ee + rho_ge,ge), read straight from the joint state.
double battery_energy_from_joint(const ComplexMatrix& rho_ab, double omega0);

// Spectrum of rho sorted descending and placed on ascending H0 levels.
ComplexMatrix passive_state(const ComplexMatrix& rho);

// E(rho) - E(passive(rho)), via diagonalization.
double ergotropy_generic(const ComplexMatrix& rho, double omega0);

// Closed form on the joint state:
//   (omega0/2) (sqrt(4 |c|^2 + kappa^2) + kappa),
//   c = rho_ee,eg + rho_ge,gg, kappa = 2 (rho_ee,ee + rho_ge,ge) - 1.
double ergotropy_closed_form(const ComplexMatrix& rho_ab, double omega0);

// tr(H0 rho) - S(rho) / beta
double free_energy(const ComplexMatrix& rho, double omega0, double beta,
                   LogBase base = LogBase::E);

// F(rho_b) - F(rho_beta) for the battery Gibbs state rho_beta.
double exergy(const ComplexMatrix& rho_b, const ChargingParams& p, LogBase base = LogBase::E);

WorkReport efficiencies(const ComplexMatrix& rho_ab_t, const ComplexMatrix& rho_ab_0,
                        const ChargingParams& p, LogBase base = LogBase::E);

} // namespace qbw
