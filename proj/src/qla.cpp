// qla.cpp

#include "qbw/qla.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qbw/errors.hpp"

namespace qbw {

namespace ops {

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix sigma_x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0,
         1.0, 0.0;
    return m;
}

ComplexMatrix sigma_y() {
    ComplexMatrix m(2, 2);
    m << 0.0, cd(0.0, -1.0),
         cd(0.0, 1.0), 0.0;
    return m;
}

ComplexMatrix sigma_z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0,
         0.0, -1.0;
    return m;
}

ComplexMatrix sigma_plus() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

ComplexMatrix sigma_minus() {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix projector(const ComplexVector& v) { return v * v.adjoint(); }

} // namespace ops

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index ra = a.rows(), ca = a.cols();
    const Eigen::Index rb = b.rows(), cb = b.cols();
    ComplexMatrix out(ra * rb, ca * cb);
    for (Eigen::Index i = 0; i < ra; ++i)
        for (Eigen::Index j = 0; j < ca; ++j)
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    return out;
}

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m - m.adjoint()) <= tol;
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
    return 0.5 * (m + m.adjoint());
}

void require_finite(const ComplexMatrix& m, const char* what) {
    if (!m.allFinite())
        throw ValidationError(std::string(what) + ": matrix has non-finite entries");
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw UsageError("partial_trace: expected a 4x4 two-qubit operator, got " +
                         std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
    if (!is_hermitian(rho))
        throw ValidationError("partial_trace: operator is not Hermitian");

    // index(a, b) = 2a + b
    ComplexMatrix out = ComplexMatrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int s = 0; s < 2; ++s) {
                if (keep == Subsystem::B)
                    out(i, j) += rho(2 * s + i, 2 * s + j);
                else
                    out(i, j) += rho(2 * i + s, 2 * j + s);
            }
    return out;
}

namespace {

void check_square_hermitian(const ComplexMatrix& m, double tol, const char* what) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw UsageError(std::string(what) + ": matrix must be square and nonempty");
    require_finite(m, what);
    if (!is_hermitian(m, tol))
        throw ValidationError(std::string(what) + ": matrix is not Hermitian within tolerance");
}

} // namespace

HermitianSpectrum eig_hermitian(const ComplexMatrix& m, double tol) {
    check_square_hermitian(m, tol, "eig_hermitian");
    const Eigen::MatrixXcd h = hermitize(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eig_hermitian: eigensolver did not converge");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

RealVector eigenvalues_hermitian(const ComplexMatrix& m, double tol) {
    check_square_hermitian(m, tol, "eigenvalues_hermitian");
    const Eigen::MatrixXcd h = hermitize(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigenvalues_hermitian: eigensolver did not converge");
    return solver.eigenvalues();
}

double vn_entropy(const ComplexMatrix& rho, LogBase base, ClipStats* stats) {
    const RealVector w = eigenvalues_hermitian(rho);
    const double tr = w.sum();
    if (std::abs(tr - 1.0) > 1e-8)
        throw ValidationError("vn_entropy: trace " + std::to_string(tr) + " is not 1");

    double s = 0.0;
    for (double p : w) {
        if (p < -1e-9)
            throw PositivityError("vn_entropy: eigenvalue " + std::to_string(p) +
                                  " below -1e-9");
        if (p < -1e-12 && stats) ++stats->clipped;
        if (p > 0.0) s -= p * std::log(p);
    }
    if (base == LogBase::Two) s /= std::log(2.0);
    return std::max(s, 0.0);
}

double conditional_entropy(const ComplexMatrix& rho_ab, LogBase base, ClipStats* stats) {
    return vn_entropy(rho_ab, base, stats) -
           vn_entropy(partial_trace(rho_ab, Subsystem::B), base, stats);
}

ComplexVector vec(const ComplexMatrix& m) {
    const Eigen::Index n = m.rows();
    ComplexVector v(n * m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            v(i + j * n) = m(i, j);
    return v;
}

ComplexMatrix unvec(const ComplexVector& v) {
    const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
    if (n * n != v.size())
        throw UsageError("unvec: vector length is not a perfect square");
    ComplexMatrix m(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            m(i, j) = v(i + j * n);
    return m;
}

} // namespace qbw
