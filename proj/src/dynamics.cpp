// dynamics.cpp

#include "qbw/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qbw/errors.hpp"

namespace qbw {

namespace {

using Super = Eigen::Matrix<cd, 16, 16>;
using SuperVec = Eigen::Matrix<cd, 16, 1>;
using Mat4 = Eigen::Matrix4cd;

SuperVec to_vec(const Mat4& m) {
    SuperVec v;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) v(i + 4 * j) = m(i, j);
    return v;
}

Mat4 from_vec(const SuperVec& v) {
    Mat4 m;
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) m(i, j) = v(i + 4 * j);
    return m;
}

void check_density_matrix(const ComplexMatrix& rho, const char* what) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw UsageError(std::string(what) + ": expected a 4x4 density matrix");
    require_finite(rho, what);
    if (!is_hermitian(rho, 1e-10))
        throw ValidationError(std::string(what) + ": state is not Hermitian");
    if (std::abs(rho.trace() - 1.0) > 1e-8)
        throw ValidationError(std::string(what) + ": state trace is not 1");
    if (eigenvalues_hermitian(rho).minCoeff() < -1e-9)
        throw ValidationError(std::string(what) + ": state is not positive semidefinite");
}

} // namespace

std::size_t default_stride(double t_end, double dt) {
    if (!(dt > 0.0) || !(t_end > 0.0)) return 1;
    const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    return std::max<std::size_t>(1, (steps + kMaxRecordedStates - 2) / (kMaxRecordedStates - 1));
}

void integrate(const ChargingParams& p, const ComplexMatrix& rho0, double t_end, double dt,
               const StepObserver& observer) {
    validate(p);
    if (!(dt > 0.0)) throw UsageError("evolve: dt must be > 0");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw UsageError("evolve: t_end must be >= 0");
    check_density_matrix(rho0, "evolve");

    const std::size_t steps =
        t_end == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    const double h = steps == 0 ? dt : t_end / static_cast<double>(steps);

    const Super L = liouvillian(p);
    Mat4 rho = hermitize(rho0);
    observer(0, 0.0, rho);

    Eigen::SelfAdjointEigenSolver<Mat4> solver;
    for (std::size_t n = 1; n <= steps; ++n) {
        const SuperVec y = to_vec(rho);
        const SuperVec k1 = L * y;
        const SuperVec k2 = L * (y + 0.5 * h * k1);
        const SuperVec k3 = L * (y + 0.5 * h * k2);
        const SuperVec k4 = L * (y + h * k3);
        const Mat4 next = from_vec(y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
        rho = 0.5 * (next + next.adjoint());

        solver.compute(rho, Eigen::EigenvaluesOnly);
        const double min_eig = solver.eigenvalues().minCoeff();
        if (!std::isfinite(min_eig) || min_eig < -1e-6)
            throw IntegrationInstabilityError(
                "evolve: state lost positivity (eigenvalue " + std::to_string(min_eig) +
                ") at t = " + std::to_string(h * static_cast<double>(n)) +
                "; try a smaller dt");
        observer(n, h * static_cast<double>(n), rho);
    }

    const double drift = std::abs(rho.trace() - 1.0);
    if (drift > 1e-9)
        throw IntegrationInstabilityError("evolve: trace drifted by " + std::to_string(drift) +
                                          "; try a smaller dt");
}

Trajectory evolve(const ChargingParams& p, const ComplexMatrix& rho0, double t_end, double dt,
                  std::size_t stride) {
    if (stride == 0) stride = default_stride(t_end, dt);
    Trajectory traj;
    traj.t_end = t_end;
    integrate(p, rho0, t_end, dt, [&](std::size_t n, double t, const ComplexMatrix& rho) {
        if (n % stride == 0) {
            traj.times.push_back(t);
            traj.states.push_back(rho);
        }
        traj.final_state = rho;
    });
    const std::size_t steps =
        t_end == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
    traj.step = steps == 0 ? dt : t_end / static_cast<double>(steps);
    return traj;
}

SteadyStateReport steady_state_report(const ChargingParams& p) {
    validate(p);
    if (!(p.J > 0.0)) throw UsageError("steady_state: requires dissipation J > 0");

    const ComplexMatrix L = liouvillian(p);
    const Eigen::MatrixXcd Lc = L;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(Lc, Eigen::ComputeFullV);
    const RealVector& s = svd.singularValues(); // descending
    const Eigen::Index last = s.size() - 1;

    SteadyStateReport out;
    out.largest_singular = s(0);
    out.smallest_singular = s(last);
    out.second_singular = s(last - 1);
    if (out.second_singular < 1e-8 * out.largest_singular)
        throw NonUniqueSteadyStateError(
            "steady_state: Liouvillian kernel is degenerate (second-smallest singular value " +
            std::to_string(out.second_singular) + ")");

    ComplexMatrix rho = unvec(svd.matrixV().col(last));
    const cd tr = rho.trace();
    if (std::abs(tr) < 1e-12)
        throw SolverFailureError("steady_state: kernel vector is traceless");
    rho = hermitize(rho / tr);

    const HermitianSpectrum spec = eig_hermitian(rho);
    const double min_eig = spec.eigenvalues.minCoeff();
    if (min_eig < -1e-8)
        throw SolverFailureError("steady_state: kernel state has eigenvalue " +
                                 std::to_string(min_eig));
    if (min_eig < 0.0) {
        const RealVector w = spec.eigenvalues.cwiseMax(0.0);
        rho = spec.eigenvectors * (w / w.sum()).cast<cd>().asDiagonal() *
              spec.eigenvectors.adjoint();
        rho = hermitize(rho);
    }

    out.residual = max_abs(L * vec(rho));
    if (out.residual > 1e-9 * std::max(1.0, out.largest_singular))
        throw SolverFailureError("steady_state: residual " + std::to_string(out.residual) +
                                 " too large");
    out.rho = std::move(rho);
    return out;
}

ComplexMatrix steady_state(const ChargingParams& p) { return steady_state_report(p).rho; }

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw UsageError("trace_distance: dimension mismatch");
    return 0.5 * eigenvalues_hermitian(hermitize(a - b), 1e-8).cwiseAbs().sum();
}

} // namespace qbw
