// qla.hpp - small dense complex linear algebra and entropy kernels
//
// Every operator in this project is 2x2, 4x4 (two qubits) or 16x16
// (superoperators on vectorized 4x4 states), so everything is dense.
// Two-qubit operators use the product basis with subsystem A as the
// most significant factor: {|ee>, |eg>, |ge>, |gg>}. Single-qubit
// basis order is {|e>, |g>}.

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qbw {

using cd = std::complex<double>;
using ComplexMatrix = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

enum class Subsystem { A, B };
enum class LogBase { Two, E };

struct HermitianSpectrum {
    RealVector eigenvalues;     // ascending
    ComplexMatrix eigenvectors; // column j pairs with eigenvalues[j]
};

// Tally of eigenvalues in [-1e-9, -1e-12) that were clipped to zero.
struct ClipStats {
    std::size_t clipped = 0;
};

namespace ops {
ComplexMatrix identity(int dim);
ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();
ComplexMatrix sigma_plus();  // |e><g|
ComplexMatrix sigma_minus(); // |g><e|
ComplexMatrix projector(const ComplexVector& v);
} // namespace ops

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest absolute entry.
double max_abs(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);
ComplexMatrix hermitize(const ComplexMatrix& m);
void require_finite(const ComplexMatrix& m, const char* what);

// Reduced state of a two-qubit operator. Throws UsageError unless 4x4 and
// ValidationError unless Hermitian within 1e-10.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Subsystem keep);

// Symmetrizes (M+M^dagger)/2 before solving. Throws ValidationError when M
// deviates from Hermiticity by more than tol.
HermitianSpectrum eig_hermitian(const ComplexMatrix& m, double tol = 1e-10);
RealVector eigenvalues_hermitian(const ComplexMatrix& m, double tol = 1e-10);

// -tr(rho log rho). Eigenvalues in [-1e-12, 0) are treated as zero; those in
// [-1e-9, -1e-12) are also zeroed but counted in `stats`; anything lower
// throws PositivityError. 0 log 0 = 0.
double vn_entropy(const ComplexMatrix& rho, LogBase base, ClipStats* stats = nullptr);

// S(A|B) = S(rho_AB) - S(rho_B).
double conditional_entropy(const ComplexMatrix& rho_ab, LogBase base,
                           ClipStats* stats = nullptr);

// Column-stacking vectorization: vec(m)[i + j*dim] = m(i, j).
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v);

} // namespace qbw
