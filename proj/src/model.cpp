// model.cpp

#include "qbw/model.hpp"

#include <cmath>
#include <string>

#include "qbw/errors.hpp"

namespace qbw {

Reservoir Reservoir::bosonic(double n) {
    if (!(n >= 0.0) || !std::isfinite(n))
        throw UsageError("bosonic occupancy must be finite and >= 0, got " + std::to_string(n));
    return Reservoir(ReservoirKind::Bosonic, n, 1.0 + n);
}

Reservoir Reservoir::fermionic(double n) {
    if (!(n >= 0.0 && n <= 1.0))
        throw UsageError("fermionic occupancy must lie in [0, 1], got " + std::to_string(n));
    return Reservoir(ReservoirKind::Fermionic, n, 1.0 - n);
}

Reservoir Reservoir::make(ReservoirKind kind, double n) {
    return kind == ReservoirKind::Bosonic ? bosonic(n) : fermionic(n);
}

const char* to_string(ReservoirKind kind) {
    return kind == ReservoirKind::Bosonic ? "bosonic" : "fermionic";
}

ReservoirKind parse_reservoir_kind(const std::string& s) {
    if (s == "bosonic" || s == "Bosonic" || s == "boson") return ReservoirKind::Bosonic;
    if (s == "fermionic" || s == "Fermionic" || s == "fermion") return ReservoirKind::Fermionic;
    throw UsageError("unknown reservoir kind '" + s + "' (expected bosonic|fermionic)");
}

void validate(const ChargingParams& p) {
    auto finite = [](double x) { return std::isfinite(x); };
    if (!(p.omega0 > 0.0) || !finite(p.omega0)) throw UsageError("omega0 must be > 0");
    if (!(p.g > 0.0) || !finite(p.g)) throw UsageError("g must be > 0");
    if (!(p.F >= 0.0) || !finite(p.F)) throw UsageError("F must be >= 0");
    if (!(p.J >= 0.0) || !finite(p.J)) throw UsageError("J must be >= 0");
    if (!finite(p.delta_A) || !finite(p.delta_B)) throw UsageError("detunings must be finite");
    if (!(p.beta > 0.0)) throw UsageError("beta must be > 0");
}

Reservoir occupancy_from_temperature(ReservoirKind kind, double omega_k, double T, double mu) {
    if (!(T >= 0.0)) throw UsageError("temperature must be >= 0");
    if (kind == ReservoirKind::Bosonic) {
        if (T == 0.0) return Reservoir::bosonic(0.0);
        if (!(omega_k > 0.0))
            throw UsageError("bosonic occupancy needs omega_k > 0 at finite temperature");
        return Reservoir::bosonic(1.0 / std::expm1(omega_k / T));
    }
    const double gap = omega_k - mu;
    if (T == 0.0) {
        if (gap > 0.0) return Reservoir::fermionic(0.0);
        if (gap < 0.0) return Reservoir::fermionic(1.0);
        return Reservoir::fermionic(0.5);
    }
    const double x = gap / T;
    // written so that neither branch overflows
    const double n = x >= 0.0 ? std::exp(-x) / (1.0 + std::exp(-x)) : 1.0 / (1.0 + std::exp(x));
    return Reservoir::fermionic(n);
}

ComplexMatrix hamiltonian(const ChargingParams& p) {
    using namespace ops;
    const ComplexMatrix id = identity(2);
    const ComplexMatrix sp = sigma_plus();
    const ComplexMatrix sm = sigma_minus();
    return 0.5 * p.delta_A * kron(sigma_z(), id) + 0.5 * p.delta_B * kron(id, sigma_z()) +
           p.g * (kron(sp, sm) + kron(sm, sp)) + 0.5 * p.F * kron(sp + sm, id);
}

namespace {

// vec(D[L] rho) for column stacking
ComplexMatrix dissipator(const ComplexMatrix& L) {
    const ComplexMatrix id = ops::identity(static_cast<int>(L.rows()));
    const ComplexMatrix LdL = L.adjoint() * L;
    return 2.0 * kron(L.conjugate(), L) - kron(id, LdL) - kron(LdL.transpose(), id);
}

} // namespace

ComplexMatrix liouvillian(const ChargingParams& p) {
    const ComplexMatrix h = hamiltonian(p);
    const ComplexMatrix id4 = ops::identity(4);
    const cd minus_i(0.0, -1.0);

    ComplexMatrix L = minus_i * (kron(id4, h) - kron(h.transpose(), id4));
    const ComplexMatrix lower = kron(ops::sigma_minus(), ops::identity(2));
    const ComplexMatrix raise = kron(ops::sigma_plus(), ops::identity(2));
    if (p.J != 0.0) {
        if (p.reservoir.N() != 0.0) L += p.J * p.reservoir.N() * dissipator(lower);
        if (p.reservoir.n() != 0.0) L += p.J * p.reservoir.n() * dissipator(raise);
    }
    return L;
}

ComplexMatrix initial_state() {
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(basis::gg, basis::gg) = 1.0;
    return rho;
}

ComplexMatrix thermal_state(double beta, double omega0) {
    if (!(beta >= 0.0)) throw UsageError("thermal_state: beta must be >= 0");
    // 1 / (1 + e^{beta omega0}) stays finite as beta -> infinity
    const double pe = 1.0 / (1.0 + std::exp(beta * omega0));
    ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
    rho(0, 0) = pe;
    rho(1, 1) = 1.0 - pe;
    return rho;
}

ComplexMatrix steady_state_resonance_analytic(double k, double l) {
    if (!(k >= 0.0) || !(l >= 0.0))
        throw UsageError("steady_state_resonance_analytic: k and l must be >= 0");
    const double k2 = k * k, k3 = k2 * k, k4 = k2 * k2, l2 = l * l;
    const double denom = k4 + 2.0 * (2.0 + k2) * l2;
    if (!(denom > 0.0))
        throw UsageError("steady_state_resonance_analytic: singular denominator (k = l = 0)");

    const cd i(0.0, 1.0);
    const cd a = -i * k3 * l / 2.0;
    const cd b = i * k2 * l;
    const double c = -2.0 * k * l2;

    ComplexMatrix rho(4, 4);
    rho << k4 / 4.0, 0.0,      a,                           b,
           0.0,      k4 / 4.0, 0.0,                         a,
           -a,       0.0,      (k4 + 4.0 * k2 * l2) / 4.0,  c,
           -b,       -a,       c,                           (k4 + 4.0 * (4.0 + k2) * l2) / 4.0;
    return rho / denom;
}

} // namespace qbw
