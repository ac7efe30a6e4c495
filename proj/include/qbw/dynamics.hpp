// dynamics.hpp - master-equation time evolution and Liouvillian steady states

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "qbw/model.hpp"

namespace qbw {

struct Trajectory {
    std::vector<double> times;         // every `stride`-th step, starting at t = 0
    std::vector<ComplexMatrix> states; // joint 4x4 states at `times`
    double step = 0.0;                 // integration step actually used
    ComplexMatrix final_state;         // state at t_end, recorded or not
    double t_end = 0.0;
};

inline constexpr double kDefaultStep = 1e-3;
inline constexpr std::size_t kMaxRecordedStates = 2000;

// Smallest stride that keeps at most kMaxRecordedStates states.
std::size_t default_stride(double t_end, double dt);

// Called after every completed step (and once for t = 0 with step index 0).
using StepObserver = std::function<void(std::size_t step, double t, const ComplexMatrix& rho)>;

// Classical fixed-step RK4 on vec(rho). dt is shrunk so an integer number of
// steps lands exactly on t_end. The state is re-Hermitized after each step.
// Throws IntegrationInstabilityError when an eigenvalue drops below -1e-6 or
// the trace drifts by more than 1e-9.
void integrate(const ChargingParams& p, const ComplexMatrix& rho0, double t_end, double dt,
               const StepObserver& observer);

Trajectory evolve(const ChargingParams& p, const ComplexMatrix& rho0, double t_end,
                  double dt = kDefaultStep, std::size_t stride = 0);

struct SteadyStateReport {
    ComplexMatrix rho;
    double smallest_singular = 0.0;
    double second_singular = 0.0;
    double largest_singular = 0.0;
    double residual = 0.0; // max |L vec(rho)|
};

// Kernel of the Liouvillian from the right-singular vector of its smallest
// singular value. Requires J > 0. Throws NonUniqueSteadyStateError when the
// second-smallest singular value is below 1e-8 * ||L||, SolverFailureError
// when the kernel state is not positive within -1e-8.
SteadyStateReport steady_state_report(const ChargingParams& p);
ComplexMatrix steady_state(const ChargingParams& p);

// (1/2) sum |eigenvalues(a - b)|
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace qbw
