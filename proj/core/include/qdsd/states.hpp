#pragma once

#include <cstddef>
#include <utility>

#include "qdsd/complex_matrix.hpp"

namespace qdsd {

// Basis convention for one qutrit and for the pair.
//
// Single-qutrit levels: 2 is the excited state |e> (decays at gamma_e),
// 1 is the excited state |u> (decays at gamma_u), 0 is the ground state |g>.
// Matrix index of level a is 2 - a, so the single-qutrit basis order is
// (|2>, |1>, |0>). The two-qutrit product basis is ordered
//   { |2,2>, |2,1>, |2,0>, |1,2>, |1,1>, |1,0>, |0,2>, |0,1>, |0,0> },
// i.e. flat index 3*(2 - a) + (2 - b) for the pair |a,b>, with the first
// factor (atom A) major. Flat index 0 is the doubly-e-excited state and
// flat index 8 is the two-atom ground state.

constexpr std::size_t qutrit_level_to_index(int level) { return static_cast<std::size_t>(2 - level); }
constexpr int qutrit_index_to_level(std::size_t index) { return 2 - static_cast<int>(index); }

constexpr std::size_t level_pair_to_flat_index(int level_a, int level_b) {
    return 3 * qutrit_level_to_index(level_a) + qutrit_level_to_index(level_b);
}

constexpr std::pair<int, int> flat_index_to_level_pair(std::size_t flat) {
    return {qutrit_index_to_level(flat / 3), qutrit_index_to_level(flat % 3)};
}

/// Validation tolerances for DensityMatrix construction.
struct ValidationTolerances {
    double hermiticity = 1e-10;
    double trace = 1e-10;
    /// Smallest admissible eigenvalue is -psd_floor.
    double psd_floor = 1e-9;
};

/// A Hermitian, unit-trace, positive-semidefinite matrix. Construction
/// validates all three invariants (plus squareness and finiteness) and
/// throws ValidationError naming the violated one. The two-qutrit states
/// built by this module are 9x9; the integrator also accepts smaller
/// single-atom states.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix mat, const ValidationTolerances& tol = {});

    const ComplexMatrix& matrix() const noexcept { return mat_; }
    std::size_t dim() const noexcept { return mat_.rows(); }
    const Complex& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

private:
    ComplexMatrix mat_;
};

enum class Subsystem { A, B };

/// |Psi+><Psi+| with |Psi+> = (|0,1> + |1,0> + |2,2>)/sqrt(3).
DensityMatrix maximally_entangled_state();

/// The one-parameter family
///   (2/7)|Psi+><Psi+| + (alpha/7) sigma_plus + ((5-alpha)/7) sigma_minus
/// with sigma_plus  = (|0,0><0,0| + |1,2><1,2| + |2,1><2,1|)/3 and
///      sigma_minus = (|1,1><1,1| + |2,0><2,0| + |0,2><0,2|)/3.
/// Separable for alpha in [2,3], bound-entangled in (3,4], free-entangled
/// in (4,5]. Requires 2 <= alpha <= 5.
DensityMatrix horodecki_state(double alpha);

/// horodecki_state(alpha) conjugated by I3 (x) theta, where theta exchanges
/// levels |0> and |1> on the second qutrit. The mixture components become
/// |Psi~+> = (|0,0> + |1,1> + |2,2>)/sqrt(3) and the relabeled projectors.
DensityMatrix horodecki_state_rotated(double alpha);

/// p |Psi+><Psi+| + (1-p)/9 I9. Requires 0 <= p <= 1.
DensityMatrix isotropic_state(double p);

/// Partial transpose on the chosen factor. The result is Hermitian with
/// unit trace but may fail positivity; it is returned as a plain matrix.
ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem subsystem = Subsystem::B);

/// Realignment R with R[(i,j),(k,l)] = rho[(i,k),(j,l)], where i,k index the
/// first factor and j,l the second, composite indices flattened row-major
/// with the first factor major (same pairing as the basis convention above).
/// For a product state a (x) b this factorizes as vec(a) vec(b)^T.
ComplexMatrix realign(const DensityMatrix& rho);

/// (uA (x) uB) rho (uA (x) uB)†. Both factors must be 3x3 and unitary
/// within `unitarity_tol`; throws NotUnitaryError otherwise.
DensityMatrix local_unitary_conjugate(const DensityMatrix& rho, const ComplexMatrix& u_a,
                                      const ComplexMatrix& u_b, double unitarity_tol = 1e-10);

/// The 3x3 permutation exchanging levels |0> and |1> (fixing |2>);
/// the second-factor rotation that turns horodecki_state into its
/// locally equivalent partner.
ComplexMatrix swap_levels_01();

}  // namespace qdsd
