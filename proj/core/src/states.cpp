#include "qdsd/states.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qdsd/errors.hpp"
#include "qdsd/linalg.hpp"

namespace qdsd {

namespace {

ComplexMatrix projector_mixture(std::initializer_list<std::pair<int, int>> level_pairs, double weight) {
    ComplexMatrix m(9, 9);
    for (const auto& [a, b] : level_pairs) {
        const std::size_t k = level_pair_to_flat_index(a, b);
        m(k, k) = weight;
    }
    return m;
}

/// Outer product |psi><psi| of a 9-component ket given as flat-index weights.
ComplexMatrix ket_projector(const std::vector<std::pair<std::size_t, double>>& amplitudes) {
    ComplexMatrix m(9, 9);
    for (const auto& [i, vi] : amplitudes)
        for (const auto& [j, vj] : amplitudes) m(i, j) = vi * vj;
    return m;
}

ComplexMatrix psi_plus_projector() {
    const double a = 1.0 / std::sqrt(3.0);
    return ket_projector({{level_pair_to_flat_index(0, 1), a},
                          {level_pair_to_flat_index(1, 0), a},
                          {level_pair_to_flat_index(2, 2), a}});
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat, const ValidationTolerances& tol) : mat_(std::move(mat)) {
    if (!mat_.is_square() || mat_.rows() < 2)
        throw ValidationError("shape", "density matrix must be square with dim >= 2, got " +
                                           std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()));
    if (!mat_.all_finite()) throw ValidationError("finite", "density matrix has non-finite entries");
    const double defect = mat_.hermiticity_defect();
    if (defect > tol.hermiticity)
        throw ValidationError("hermiticity", "hermiticity defect " + std::to_string(defect) +
                                                 " exceeds tolerance " + std::to_string(tol.hermiticity));
    const Complex tr = mat_.trace();
    if (std::abs(tr - Complex(1.0)) > tol.trace)
        throw ValidationError("trace", "trace is " + std::to_string(tr.real()) +
                                           (tr.imag() != 0.0 ? " + " + std::to_string(tr.imag()) + "j" : "") +
                                           ", expected 1 within " + std::to_string(tol.trace));
    const std::vector<double> eigs = hermitian_eigenvalues(mat_, tol.hermiticity * 2.0);
    if (eigs.front() < -tol.psd_floor)
        throw ValidationError("positivity", "minimum eigenvalue " + std::to_string(eigs.front()) +
                                                " below -" + std::to_string(tol.psd_floor));
}

DensityMatrix maximally_entangled_state() { return DensityMatrix(psi_plus_projector()); }

DensityMatrix horodecki_state(double alpha) {
    if (!(alpha >= 2.0 && alpha <= 5.0))
        throw ParameterRangeError("alpha",
                                  "alpha = " + std::to_string(alpha) + " outside [2, 5]");
    ComplexMatrix m = psi_plus_projector();
    m *= 2.0 / 7.0;
    m += projector_mixture({{0, 0}, {1, 2}, {2, 1}}, alpha / 21.0);
    m += projector_mixture({{1, 1}, {2, 0}, {0, 2}}, (5.0 - alpha) / 21.0);
    return DensityMatrix(std::move(m));
}

DensityMatrix horodecki_state_rotated(double alpha) {
    return local_unitary_conjugate(horodecki_state(alpha), ComplexMatrix::identity(3), swap_levels_01());
}

DensityMatrix isotropic_state(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ParameterRangeError("p", "p = " + std::to_string(p) + " outside [0, 1]");
    ComplexMatrix m = psi_plus_projector();
    m *= p;
    const double mixed = (1.0 - p) / 9.0;
    for (std::size_t k = 0; k < 9; ++k) m(k, k) += mixed;
    return DensityMatrix(std::move(m));
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem subsystem) {
    if (rho.dim() != 9) throw ValidationError("shape", "partial_transpose expects a 9x9 two-qutrit state");
    ComplexMatrix out(9, 9);
    for (std::size_t ia = 0; ia < 3; ++ia)
        for (std::size_t ib = 0; ib < 3; ++ib)
            for (std::size_t ja = 0; ja < 3; ++ja)
                for (std::size_t jb = 0; jb < 3; ++jb) {
                    if (subsystem == Subsystem::B)
                        out(3 * ia + ib, 3 * ja + jb) = rho(3 * ia + jb, 3 * ja + ib);
                    else
                        out(3 * ia + ib, 3 * ja + jb) = rho(3 * ja + ib, 3 * ia + jb);
                }
    return out;
}

ComplexMatrix realign(const DensityMatrix& rho) {
    if (rho.dim() != 9) throw ValidationError("shape", "realign expects a 9x9 two-qutrit state");
    ComplexMatrix out(9, 9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t l = 0; l < 3; ++l) out(3 * i + j, 3 * k + l) = rho(3 * i + k, 3 * j + l);
    return out;
}

DensityMatrix local_unitary_conjugate(const DensityMatrix& rho, const ComplexMatrix& u_a,
                                      const ComplexMatrix& u_b, double unitarity_tol) {
    if (rho.dim() != 9)
        throw ValidationError("shape", "local_unitary_conjugate expects a 9x9 two-qutrit state");
    for (const auto* u : {&u_a, &u_b}) {
        if (u->rows() != 3 || u->cols() != 3)
            throw NotUnitaryError("local unitary factors must be 3x3");
        const double defect = max_abs_difference(u->adjoint() * (*u), ComplexMatrix::identity(3));
        if (defect > unitarity_tol)
            throw NotUnitaryError("unitarity defect " + std::to_string(defect) + " exceeds tolerance " +
                                  std::to_string(unitarity_tol));
    }
    const ComplexMatrix u = kron(u_a, u_b);
    return DensityMatrix(u * rho.matrix() * u.adjoint());
}

ComplexMatrix swap_levels_01() {
    ComplexMatrix theta(3, 3);
    theta(qutrit_level_to_index(0), qutrit_level_to_index(1)) = 1.0;
    theta(qutrit_level_to_index(1), qutrit_level_to_index(0)) = 1.0;
    theta(qutrit_level_to_index(2), qutrit_level_to_index(2)) = 1.0;
    return theta;
}

}  // namespace qdsd
