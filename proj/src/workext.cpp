// workext.cpp

#include "qbw/workext.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qbw/errors.hpp"

namespace qbw {

namespace {

void require_dim(const ComplexMatrix& m, int dim, const char* what) {
    if (m.rows() != dim || m.cols() != dim)
        throw UsageError(std::string(what) + ": expected a " + std::to_string(dim) + "x" +
                         std::to_string(dim) + " matrix");
}

} // namespace

double internal_energy(const ComplexMatrix& rho, double omega0) {
    require_dim(rho, 2, "internal_energy");
    return omega0 * rho(0, 0).real();
}

double battery_energy_from_joint(const ComplexMatrix& rho_ab, double omega0) {
    require_dim(rho_ab, 4, "battery_energy_from_joint");
    return omega0 * (rho_ab(basis::ee, basis::ee).real() + rho_ab(basis::ge, basis::ge).real());
}

ComplexMatrix passive_state(const ComplexMatrix& rho) {
    require_dim(rho, 2, "passive_state");
    const RealVector w = eigenvalues_hermitian(rho); // ascending
    // largest weight on |g> (index 1), the lower level
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    out(1, 1) = w(1);
    out(0, 0) = w(0);
    return out;
}

double ergotropy_generic(const ComplexMatrix& rho, double omega0) {
    require_dim(rho, 2, "ergotropy_generic");
    const RealVector w = eigenvalues_hermitian(rho);
    std::vector<double> r(w.data(), w.data() + w.size());
    std::stable_sort(r.begin(), r.end(), std::greater<>());
    const double levels[2] = {0.0, omega0}; // ascending H0 spectrum
    double passive = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) passive += r[j] * levels[j];
    return std::max(0.0, internal_energy(rho, omega0) - passive);
}

double ergotropy_closed_form(const ComplexMatrix& rho_ab, double omega0) {
    require_dim(rho_ab, 4, "ergotropy_closed_form");
    const cd coherence = rho_ab(basis::ee, basis::eg) + rho_ab(basis::ge, basis::gg);
    const double kappa =
        2.0 * (rho_ab(basis::ee, basis::ee).real() + rho_ab(basis::ge, basis::ge).real()) - 1.0;
    return 0.5 * omega0 * (std::sqrt(4.0 * std::norm(coherence) + kappa * kappa) + kappa);
}

double free_energy(const ComplexMatrix& rho, double omega0, double beta, LogBase base) {
    return internal_energy(rho, omega0) - vn_entropy(rho, base) / beta;
}

double exergy(const ComplexMatrix& rho_b, const ChargingParams& p, LogBase base) {
    const ComplexMatrix gibbs = thermal_state(p.beta, p.omega0);
    return free_energy(rho_b, p.omega0, p.beta, base) -
           free_energy(gibbs, p.omega0, p.beta, base);
}

WorkReport efficiencies(const ComplexMatrix& rho_ab_t, const ComplexMatrix& rho_ab_0,
                        const ChargingParams& p, LogBase base) {
    const ComplexMatrix rho_b = partial_trace(rho_ab_t, Subsystem::B);
    WorkReport r;
    r.e_b = battery_energy_from_joint(rho_ab_t, p.omega0);
    r.de_b = r.e_b - battery_energy_from_joint(rho_ab_0, p.omega0);
    r.w_f = exergy(rho_b, p, base);
    r.w_e = ergotropy_generic(rho_b, p.omega0);
    if (std::abs(r.de_b) >= 1e-12 * p.omega0) {
        r.eta1 = r.w_f / r.de_b;
        r.eta2 = r.w_e / r.de_b;
    }
    return r;
}

} // namespace qbw
