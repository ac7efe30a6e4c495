// random_states.hpp - seeded generators for property tests

#pragma once

#include <cstdint>
#include <random>

#include <Eigen/QR>

#include "qbw/qla.hpp"

namespace qbw::testing {

class StateGenerator {
public:
    explicit StateGenerator(std::uint64_t seed) : rng_(seed) {}

    ComplexMatrix ginibre(int dim) {
        ComplexMatrix g(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) g(i, j) = cd(normal_(rng_), normal_(rng_));
        return g;
    }

    ComplexMatrix hermitian(int dim) {
        const ComplexMatrix g = ginibre(dim);
        return 0.5 * (g + g.adjoint());
    }

    // Full-rank density matrix from G G^dagger / tr.
    ComplexMatrix density(int dim) {
        const ComplexMatrix g = ginibre(dim);
        ComplexMatrix rho = g * g.adjoint();
        return 0.5 * (rho + rho.adjoint()) / rho.trace().real();
    }

    // Mixture weighted toward low rank, so pure-ish and entangled states appear.
    ComplexMatrix density_varied(int dim) {
        const int rank = 1 + static_cast<int>(rng_() % static_cast<unsigned>(dim));
        ComplexMatrix g = ginibre(dim);
        for (int j = rank; j < dim; ++j) g.col(j).setZero();
        ComplexMatrix rho = g * g.adjoint();
        return 0.5 * (rho + rho.adjoint()) / rho.trace().real();
    }

    ComplexMatrix unitary(int dim) {
        const Eigen::MatrixXcd g = ginibre(dim);
        Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
        Eigen::MatrixXcd q = qr.householderQ();
        const Eigen::MatrixXcd r = qr.matrixQR();
        for (int j = 0; j < dim; ++j) {
            const cd d = r(j, j);
            q.col(j) *= d / std::abs(d);
        }
        return q;
    }

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

private:
    std::mt19937_64 rng_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

inline ComplexMatrix pure(const ComplexVector& v) { return v * v.adjoint() / v.squaredNorm(); }

inline ComplexMatrix basis_state(int dim, int k) {
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(k, k) = 1.0;
    return m;
}

// (|ee> + |gg>)/sqrt(2)
inline ComplexMatrix bell_state() {
    ComplexVector v = ComplexVector::Zero(4);
    v(0) = 1.0;
    v(3) = 1.0;
    return pure(v);
}

} // namespace qbw::testing
