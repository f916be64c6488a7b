#include "qdsd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdsd/errors.hpp"

namespace qdsd {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalThreshold = 1e-14;

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

/// One Jacobi rotation zeroing a(p,q). The rotation is V = identity except
///   V(p,p) = c, V(p,q) = s, V(q,p) = -s*u, V(q,q) = c*u
/// with u = conj(a_pq)/|a_pq| absorbing the phase, applied as V† a V.
void rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;
    const Complex u = std::conj(apq) / r;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.rows();
    // columns: a <- a V
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * u * akq;
        a(k, q) = s * akp + c * u * akq;
    }
    // rows: a <- V† a
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * std::conj(u) * aqk;
        a(q, k) = s * apk + c * std::conj(u) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m, double hermiticity_tol) {
    if (!m.is_square()) throw NotHermitianError("hermitian_eigenvalues: matrix is not square");
    if (!m.all_finite()) throw NotHermitianError("hermitian_eigenvalues: matrix has non-finite entries");
    const double defect = m.hermiticity_defect();
    if (defect > hermiticity_tol) {
        throw NotHermitianError("hermitian_eigenvalues: hermiticity defect " + std::to_string(defect) +
                                " exceeds tolerance " + std::to_string(hermiticity_tol));
    }

    const std::size_t n = m.rows();
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    // Threshold is scaled so large-norm inputs still terminate; for the
    // unit-scale density matrices used throughout this is 1e-14 absolute.
    const double threshold = kOffDiagonalThreshold * std::max(1.0, a.frobenius_norm());

    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= threshold) {
            converged = true;
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    }
    if (!converged && off_diagonal_norm(a) > threshold)
        throw NoConvergenceError("hermitian_eigenvalues: no convergence after " +
                                 std::to_string(kMaxSweeps) + " sweeps");

    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a(i, i).real();
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    if (!m.all_finite()) throw NoConvergenceError("singular_values: matrix has non-finite entries");
    const ComplexMatrix gram = m.adjoint() * m;
    // Gram matrix is Hermitian up to rounding; give the check headroom.
    std::vector<double> lambdas =
        hermitian_eigenvalues(gram, 1e-9 * std::max(1.0, gram.frobenius_norm()));
    std::vector<double> sigmas;
    sigmas.reserve(lambdas.size());
    for (double l : lambdas) sigmas.push_back(std::sqrt(std::max(0.0, l)));
    std::sort(sigmas.begin(), sigmas.end(), std::greater<>());
    sigmas.resize(std::min(m.rows(), m.cols()));
    return sigmas;
}

double trace_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (double s : singular_values(m)) sum += s;
    return sum;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Complex f = a(ia, ja);
            if (f == Complex{}) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = f * b(ib, jb);
        }
    return out;
}

}  // namespace qdsd
