// eur.hpp - quantum-memory-assisted entropic uncertainty for measurements on A
//
// Observables act on the charger A, B serves as the quantum memory. All
// entropies here are in bits.

#pragma once

#include <string>
#include <vector>

#include "qbw/qla.hpp"

namespace qbw {

class Observable {
public:
    // Throws ValidationError unless m is a 2x2 Hermitian matrix with two
    // distinct eigenvalues.
    explicit Observable(const ComplexMatrix& m, std::string name = {});

    // n . sigma for a nonzero Bloch vector (normalized internally).
    static Observable from_bloch(double nx, double ny, double nz);
    static Observable pauli(char axis); // 'x', 'y' or 'z'

    const ComplexMatrix& matrix() const { return matrix_; }
    const ComplexMatrix& eigenvectors() const { return eigenvectors_; }
    const RealVector& eigenvalues() const { return eigenvalues_; }
    ComplexMatrix projector(int i) const;
    const std::string& name() const { return name_; }

    // Unitary with M^2 = I, so the Pauli conjugation form applies.
    bool is_involution(double tol = 1e-12) const;

private:
    ComplexMatrix matrix_;
    ComplexMatrix eigenvectors_;
    RealVector eigenvalues_;
    std::string name_;
};

using ObservableSet = std::vector<Observable>;

// "xz", "xyz" (any word over {x,y,z}) or explicit Bloch vectors
// "nx,ny,nz;nx,ny,nz[;...]". Throws UsageError.
ObservableSet parse_observable_set(const std::string& spec);

// sum_i (P_i x I) rho (P_i x I) over the eigenprojectors of obs.
ComplexMatrix post_measurement_state(const ComplexMatrix& rho_ab, const Observable& obs);

// (1/2)[rho + (s x I) rho (s x I)], valid for involutions s such as Paulis.
// Throws ValidationError otherwise.
ComplexMatrix post_measurement_state_pauli(const ComplexMatrix& rho_ab, const Observable& obs);

// |<u|v>|^2 for unit vectors (normalized internally).
double overlap(const ComplexVector& u, const ComplexVector& v);

// Nested max/sum/product overlap factor of the multi-observable bound,
//   f = max_{i_m} sum_{i_2..i_{m-1}} max_{i_1} c(u1_{i_1}, u2_{i_2})
//       prod_{x=2}^{m-1} c(ux_{i_x}, u(x+1)_{i_{x+1}}),
// evaluated in the given order. For general observables reordering the set
// can change f. Requires at least two observables.
double overlap_bound_f(const ObservableSet& obs);

// sum_x [S(post_x) - S(rho_B)]
double uncertainty_lhs(const ComplexMatrix& rho_ab, const ObservableSet& obs);

// log2(1/f) + (m - 1) S(A|B)
double uncertainty_rhs(const ComplexMatrix& rho_ab, const ObservableSet& obs);

double tightness(const ComplexMatrix& rho_ab, const ObservableSet& obs);

struct EurReport {
    std::vector<double> conditionals; // S(M_x|B) per observable
    double u_l = 0.0;
    double u_r = 0.0;
    double tightness = 0.0;
    double f = 0.0;
};

EurReport eur_report(const ComplexMatrix& rho_ab, const ObservableSet& obs);

} // namespace qbw
