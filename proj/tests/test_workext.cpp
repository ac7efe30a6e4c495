#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qbw/dynamics.hpp"
#include "qbw/workext.hpp"
#include "support/random_states.hpp"

using namespace qbw;
using qbw::testing::basis_state;
using qbw::testing::StateGenerator;

namespace {

ChargingParams resonant(double k, double l) {
    ChargingParams p;
    p.F = k;
    p.J = l;
    return p;
}

ComplexMatrix battery_example() {
    ComplexMatrix rho(2, 2);
    rho << 0.375, -0.25, -0.25, 0.625;
    return rho;
}

} // namespace

TEST_CASE("internal energy") {
    CHECK(internal_energy(basis_state(2, 1), 1.0) == 0.0);
    CHECK(internal_energy(basis_state(2, 0), 2.5) == 2.5);
    const ComplexMatrix rho_b =
        partial_trace(steady_state_resonance_analytic(2.0, 2.0), Subsystem::B);
    CHECK(internal_energy(rho_b, 1.0) == doctest::Approx(0.375).epsilon(1e-14));
}

TEST_CASE("battery energy read from the joint state") {
    CHECK(battery_energy_from_joint(initial_state(), 1.0) == 0.0);
    CHECK(battery_energy_from_joint(basis_state(4, basis::ge), 1.0) == 1.0);
    CHECK(battery_energy_from_joint(basis_state(4, basis::eg), 1.0) == 0.0);
    CHECK(battery_energy_from_joint(steady_state_resonance_analytic(2.0, 2.0), 1.0) ==
          doctest::Approx(0.375).epsilon(1e-14));

    StateGenerator gen(47);
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix rho = gen.density_varied(4);
        CHECK(std::abs(battery_energy_from_joint(rho, 1.3) -
                       internal_energy(partial_trace(rho, Subsystem::B), 1.3)) < 1e-12);
    }
}

TEST_CASE("generic ergotropy") {
    for (double beta : {0.1, 1.0, 5.0, 100.0})
        CHECK(ergotropy_generic(thermal_state(beta, 1.0), 1.0) == 0.0);
    CHECK(ergotropy_generic(basis_state(2, 0), 1.0) == doctest::Approx(1.0));
    CHECK(ergotropy_generic(basis_state(2, 1), 1.0) == 0.0);
    // sqrt(0.078125) - 0.125
    CHECK(std::abs(ergotropy_generic(battery_example(), 1.0) - 0.15450849718747373) < 1e-12);

    const ComplexMatrix passive = passive_state(battery_example());
    CHECK(passive(1, 1).real() == doctest::Approx(0.7795084971874737));
    CHECK(passive(0, 0).real() == doctest::Approx(0.22049150281252627));
}

TEST_CASE("closed-form ergotropy") {
    CHECK(ergotropy_closed_form(initial_state(), 1.0) == 0.0);
    CHECK(ergotropy_closed_form(basis_state(4, basis::ge), 1.0) == 1.0);
    CHECK(std::abs(ergotropy_closed_form(steady_state_resonance_analytic(2.0, 2.0), 1.0) -
                   0.15450849718747373) < 1e-12);
}

TEST_CASE("closed-form and passive-state ergotropy agree on random joint states") {
    StateGenerator gen(53);
    for (int trial = 0; trial < 1000; ++trial) {
        const ComplexMatrix rho = trial % 2 ? gen.density(4) : gen.density_varied(4);
        const double omega0 = gen.uniform(0.5, 2.0);
        const double closed = ergotropy_closed_form(rho, omega0);
        const double generic = ergotropy_generic(partial_trace(rho, Subsystem::B), omega0);
        CHECK(std::abs(closed - generic) < 1e-10 * omega0);
    }
}

TEST_CASE("ergotropy never exceeds the internal energy") {
    StateGenerator gen(59);
    for (int trial = 0; trial < 500; ++trial) {
        const ComplexMatrix rho = partial_trace(gen.density_varied(4), Subsystem::B);
        const double we = ergotropy_generic(rho, 1.0);
        const double e = internal_energy(rho, 1.0);
        CHECK(we >= 0.0);
        CHECK(we <= e + 1e-12);
    }
    // equality when the ground population vanishes
    CHECK(ergotropy_generic(basis_state(2, 0), 1.0) == internal_energy(basis_state(2, 0), 1.0));
    // strict when it does not
    const ComplexMatrix rho = battery_example();
    CHECK(ergotropy_generic(rho, 1.0) < internal_energy(rho, 1.0));
}

TEST_CASE("degenerate spectra give the same ergotropy in either order") {
    const ComplexMatrix mixed = 0.5 * ops::identity(2);
    CHECK(ergotropy_generic(mixed, 1.0) == 0.0);
    CHECK(ergotropy_closed_form(0.25 * ops::identity(4), 1.0) == 0.0);
}

TEST_CASE("exergy") {
    ChargingParams p;
    p.beta = 3.0;
    CHECK(exergy(thermal_state(p.beta, p.omega0), p) == 0.0);

    p.beta = 100.0;
    CHECK(std::abs(exergy(basis_state(2, 0), p) - 1.0) < 1e-6);

    // 0.375 - 0.527529336 / 100 - F(rho_beta), F(rho_beta) ~ -4e-46
    const ComplexMatrix rho_b =
        partial_trace(steady_state_resonance_analytic(2.0, 2.0), Subsystem::B);
    CHECK(std::abs(exergy(rho_b, p) - (0.375 - 0.527529336499563 / 100.0)) < 1e-12);

    // base-2 switch: S in bits
    CHECK(std::abs(exergy(rho_b, p, LogBase::Two) - (0.375 - 0.7610639576913648 / 100.0)) < 1e-12);
}

TEST_CASE("efficiencies") {
    ChargingParams p;
    const WorkReport same = efficiencies(initial_state(), initial_state(), p);
    CHECK(same.de_b == 0.0);
    CHECK_FALSE(same.eta1.has_value());
    CHECK_FALSE(same.eta2.has_value());

    // fully charged pure battery at beta -> large: W_f ~ dE_B
    p.beta = 1e6;
    const WorkReport full = efficiencies(basis_state(4, basis::ge), initial_state(), p);
    REQUIRE(full.eta1.has_value());
    CHECK(*full.eta1 == doctest::Approx(1.0));
    CHECK(*full.eta2 == doctest::Approx(1.0));

    p = resonant(2.0, 2.0);
    const WorkReport r = efficiencies(steady_state_resonance_analytic(2.0, 2.0), initial_state(), p);
    CHECK(r.de_b == doctest::Approx(0.375));
    REQUIRE(r.eta1.has_value());
    CHECK(std::abs(*r.eta1 - 0.9859325510266784) < 1e-9);
    CHECK(std::abs(*r.eta2 - 0.41202265916659664) < 1e-9);

    // nonzero E_B(0) is subtracted
    const WorkReport shifted = efficiencies(basis_state(4, basis::ge), basis_state(4, basis::ge), p);
    CHECK(shifted.e_b == 1.0);
    CHECK(shifted.de_b == 0.0);
    CHECK_FALSE(shifted.eta1.has_value());
}

TEST_CASE("exergy stays within [0, dE_B] while charging from the ground state") {
    const ChargingParams sets[] = {resonant(2.0, 2.0), resonant(2.0, 0.5), resonant(4.0, 2.0)};
    for (const ChargingParams& p : sets) {
        const Trajectory traj = evolve(p, initial_state(), 20.0, 1e-3);
        for (const ComplexMatrix& rho : traj.states) {
            const WorkReport w = efficiencies(rho, initial_state(), p);
            CHECK(w.w_f >= -1e-9);
            CHECK(w.w_f <= w.de_b + 1e-9);
            CHECK(w.w_e <= w.e_b + 1e-9);
        }
    }
}

TEST_CASE("exergy exceeds ergotropy whenever the entropy-production condition holds") {
    StateGenerator gen(61);
    int held = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        ChargingParams p;
        p.beta = gen.uniform(0.2, 20.0);
        const ComplexMatrix rho = partial_trace(gen.density_varied(4), Subsystem::B);
        const ComplexMatrix gibbs = thermal_state(p.beta, p.omega0);
        const ComplexMatrix passive = passive_state(rho);
        const double lhs = vn_entropy(gibbs, LogBase::E) - vn_entropy(passive, LogBase::E);
        const double rhs =
            p.beta * (internal_energy(gibbs, p.omega0) - internal_energy(passive, p.omega0));
        if (lhs > rhs) {
            ++held;
            CHECK(exergy(rho, p) >= ergotropy_generic(rho, p.omega0) - 1e-12);
        }
    }
    CHECK(held > 50);
}
