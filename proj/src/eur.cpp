// eur.cpp

#include "qbw/eur.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qbw/errors.hpp"

namespace qbw {

Observable::Observable(const ComplexMatrix& m, std::string name) : name_(std::move(name)) {
    if (m.rows() != 2 || m.cols() != 2)
        throw ValidationError("observable must be a 2x2 matrix");
    require_finite(m, "observable");
    HermitianSpectrum spec = eig_hermitian(m); // throws if not Hermitian
    if (spec.eigenvalues(1) - spec.eigenvalues(0) < 1e-10)
        throw ValidationError("observable '" + name_ + "' is degenerate");
    matrix_ = hermitize(m);
    eigenvalues_ = std::move(spec.eigenvalues);
    eigenvectors_ = std::move(spec.eigenvectors);
}

Observable Observable::from_bloch(double nx, double ny, double nz) {
    const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw UsageError("Bloch vector must be nonzero and finite");
    std::ostringstream name;
    name << "(" << nx << "," << ny << "," << nz << ")";
    const ComplexMatrix m =
        (nx * ops::sigma_x() + ny * ops::sigma_y() + nz * ops::sigma_z()) / norm;
    return Observable(m, name.str());
}

Observable Observable::pauli(char axis) {
    // Exact eigenbases, ascending eigenvalue, so that overlaps such as
    // |<+|0>|^2 come out as exactly 1/2.
    const double s = std::sqrt(0.5);
    const cd i(0.0, 1.0);
    ComplexMatrix v(2, 2);
    Observable o = [&] {
        switch (axis) {
        case 'x': v << s, s, -s, s; return Observable(ops::sigma_x(), "x");
        case 'y': v << s, s, -i * s, i * s; return Observable(ops::sigma_y(), "y");
        case 'z': v << 0.0, 1.0, 1.0, 0.0; return Observable(ops::sigma_z(), "z");
        default: throw UsageError(std::string("unknown Pauli axis '") + axis + "'");
        }
    }();
    o.eigenvectors_ = v;
    return o;
}

ComplexMatrix Observable::projector(int i) const {
    return ops::projector(eigenvectors_.col(i));
}

bool Observable::is_involution(double tol) const {
    return max_abs(matrix_ * matrix_ - ops::identity(2)) <= tol;
}

ObservableSet parse_observable_set(const std::string& spec) {
    ObservableSet out;
    if (spec.empty()) throw UsageError("empty observable set");
    if (spec.find(',') == std::string::npos) {
        for (char c : spec) {
            if (c != 'x' && c != 'y' && c != 'z')
                throw UsageError("observable set '" + spec +
                                 "' must use x/y/z letters or Bloch triples");
            out.push_back(Observable::pauli(c));
        }
        return out;
    }
    std::stringstream all(spec);
    std::string triple;
    while (std::getline(all, triple, ';')) {
        std::stringstream ts(triple);
        std::string tok;
        std::vector<double> v;
        while (std::getline(ts, tok, ',')) {
            try {
                std::size_t used = 0;
                v.push_back(std::stod(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw UsageError("bad Bloch component '" + tok + "' in '" + spec + "'");
            }
        }
        if (v.size() != 3) throw UsageError("Bloch vector '" + triple + "' needs 3 components");
        out.push_back(Observable::from_bloch(v[0], v[1], v[2]));
    }
    return out;
}

ComplexMatrix post_measurement_state(const ComplexMatrix& rho_ab, const Observable& obs) {
    if (rho_ab.rows() != 4 || rho_ab.cols() != 4)
        throw UsageError("post_measurement_state: expected a 4x4 state");
    const ComplexMatrix id = ops::identity(2);
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 2; ++i) {
        const ComplexMatrix P = kron(obs.projector(i), id);
        out += P * rho_ab * P;
    }
    return hermitize(out);
}

ComplexMatrix post_measurement_state_pauli(const ComplexMatrix& rho_ab, const Observable& obs) {
    if (rho_ab.rows() != 4 || rho_ab.cols() != 4)
        throw UsageError("post_measurement_state_pauli: expected a 4x4 state");
    if (!obs.is_involution())
        throw ValidationError("post_measurement_state_pauli: observable is not an involution");
    const ComplexMatrix S = kron(obs.matrix(), ops::identity(2));
    return hermitize(0.5 * (rho_ab + S * rho_ab * S));
}

double overlap(const ComplexVector& u, const ComplexVector& v) {
    return std::norm(u.dot(v)) / (u.squaredNorm() * v.squaredNorm());
}

double overlap_bound_f(const ObservableSet& obs) {
    const std::size_t m = obs.size();
    if (m < 2) throw UsageError("overlap_bound_f: need at least two observables");

    auto c = [&](std::size_t x, int ix, int iy) {
        return overlap(obs[x].eigenvectors().col(ix), obs[x + 1].eigenvectors().col(iy));
    };

    double f = 0.0;
    for (int last = 0; last < 2; ++last) {
        // middle indices i_2 .. i_{m-1} (0-based observables 1 .. m-2)
        const std::size_t middle = m - 2;
        double total = 0.0;
        for (unsigned mask = 0; mask < (1u << middle); ++mask) {
            std::vector<int> idx(m);
            for (std::size_t x = 0; x < middle; ++x) idx[x + 1] = (mask >> x) & 1u;
            idx[m - 1] = last;

            double first = 0.0;
            for (int i1 = 0; i1 < 2; ++i1) first = std::max(first, c(0, i1, idx[1]));
            double term = first;
            for (std::size_t x = 1; x + 1 < m; ++x) term *= c(x, idx[x], idx[x + 1]);
            total += term;
        }
        f = std::max(f, total);
    }
    return f;
}

namespace {

struct Conditionals {
    std::vector<double> values;
    double s_b = 0.0;
};

Conditionals conditionals(const ComplexMatrix& rho_ab, const ObservableSet& obs) {
    Conditionals out;
    out.s_b = vn_entropy(partial_trace(rho_ab, Subsystem::B), LogBase::Two);
    for (const Observable& o : obs)
        out.values.push_back(vn_entropy(post_measurement_state(rho_ab, o), LogBase::Two) -
                             out.s_b);
    return out;
}

} // namespace

double uncertainty_lhs(const ComplexMatrix& rho_ab, const ObservableSet& obs) {
    const Conditionals c = conditionals(rho_ab, obs);
    double sum = 0.0;
    for (double v : c.values) sum += v;
    return sum;
}

double uncertainty_rhs(const ComplexMatrix& rho_ab, const ObservableSet& obs) {
    const double f = overlap_bound_f(obs);
    return std::log2(1.0 / f) +
           static_cast<double>(obs.size() - 1) * conditional_entropy(rho_ab, LogBase::Two);
}

double tightness(const ComplexMatrix& rho_ab, const ObservableSet& obs) {
    return uncertainty_lhs(rho_ab, obs) - uncertainty_rhs(rho_ab, obs);
}

EurReport eur_report(const ComplexMatrix& rho_ab, const ObservableSet& obs) {
    EurReport r;
    r.f = overlap_bound_f(obs);
    Conditionals c = conditionals(rho_ab, obs);
    for (double v : c.values) r.u_l += v;
    r.conditionals = std::move(c.values);
    const double s_ab = vn_entropy(rho_ab, LogBase::Two);
    r.u_r = std::log2(1.0 / r.f) + static_cast<double>(obs.size() - 1) * (s_ab - c.s_b);
    r.tightness = r.u_l - r.u_r;
    return r;
}

} // namespace qbw
