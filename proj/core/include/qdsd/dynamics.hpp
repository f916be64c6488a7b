#pragma once

#include <vector>

#include "qdsd/complex_matrix.hpp"
#include "qdsd/states.hpp"

namespace qdsd {

/// Reservoir decay rates of the two excited levels. Time throughout the
/// library is measured in units of 1/gamma_e, so trajectory code uses
/// from_ratio() which normalizes gamma_e to 1 and carries gamma_u/gamma_e.
struct DecayParams {
    double gamma_e = 1.0;
    double gamma_u = 0.5;

    static DecayParams from_ratio(double gamma_u_over_gamma_e) {
        return {1.0, gamma_u_over_gamma_e};
    }

    /// (gamma_e - gamma_u) / (gamma_e + gamma_u); 1 when |u> is metastable,
    /// 0 for symmetric rates. Throws ParameterRangeError when both rates
    /// vanish.
    double interference() const;

    /// Throws ParameterRangeError unless gamma_e > 0 and gamma_u >= 0.
    void validate() const;
};

/// Transition dipole data for a pair of excited levels decaying to a
/// common ground state.
struct DipoleSpec {
    double mu_abs_1 = 0.0;
    double mu_abs_2 = 0.0;
    double omega_1 = 0.0;
    double omega_2 = 0.0;
    /// Cosine of the angle between the two dipole vectors, in [-1, 1].
    double cos_angle = 0.0;
};

/// gamma = (2 mu^2 / 3 hbar) (omega / c)^3.
double decay_rate_from_dipole(double mu_abs, double omega, double hbar, double c);

/// Normalized dipole alignment; 1 for parallel dipoles (maximum
/// interference), 0 for perpendicular, -1 for antiparallel.
double interference_parameter(const DipoleSpec& spec);

/// Rate-asymmetry interference measure, see DecayParams::interference().
double interference_parameter(const DecayParams& params);

/// Cross damping gamma_12 = beta * sqrt(gamma_1 * gamma_2) induced by
/// non-perpendicular dipoles.
double cross_damping(const DipoleSpec& spec, double gamma_1, double gamma_2);

/// One dissipator term (weight/2)(2 L rho R† - R†L rho - rho R†L).
/// Plain decay channels have left == right; cross-damping terms do not.
struct JumpTerm {
    double weight = 0.0;
    ComplexMatrix left;
    ComplexMatrix right;
};

/// A weighted collection of dissipator terms defining the generator
/// Lambda rho = sum_k (w_k/2)(2 L_k rho R_k† - R_k†L_k rho - rho R_k†L_k).
struct JumpSpec {
    std::vector<JumpTerm> terms;

    std::size_t dim() const { return terms.empty() ? 0 : terms.front().left.rows(); }
};

/// Single V-type atom with excited levels |1>, |2> (basis order |1>, |2>,
/// ground |3>): two plain decay channels gamma_1, gamma_2 plus the two
/// cross-damping terms with weight gamma_12. Requires
/// gamma_12^2 <= gamma_1 * gamma_2 (complete positivity); throws
/// ParameterRangeError otherwise.
JumpSpec cross_damped_v_atom_dissipator(double gamma_1, double gamma_2, double gamma_12);

/// Two independent three-level atoms, each with amplitude damping
/// |e> -> |g> at gamma_e and |u> -> |g> at gamma_u: four plain channels,
/// atom A operators s (x) I3 and atom B operators I3 (x) s.
JumpSpec two_atom_amplitude_damping_dissipator(const DecayParams& params);

/// Generator application Lambda(rho) for one dissipator spec.
ComplexMatrix apply_dissipator(const JumpSpec& spec, const ComplexMatrix& rho);

/// Classical fixed-step RK4 for d rho / dt = Lambda rho with uniform step
/// <= dt_max. Guards: throws AccuracyLossError if the propagated trace
/// drifts from 1 by more than 1e-9 or the minimum eigenvalue falls below
/// -1e-7 (both signal dt_max too large for the spec's rates). Trace drift
/// in (1e-12, 1e-9] is repaired by symmetrization + renormalization.
DensityMatrix integrate_master_equation(const DensityMatrix& rho0, const JumpSpec& spec, double t,
                                        double dt_max = 1e-3);

/// Exact element-wise solution of the two-atom amplitude-damping master
/// equation: coherences evolve as pure exponentials, the fed populations
/// and coherences as the corresponding feed-in combinations, and the
/// ground-state population closes the trace. Total for t >= 0, gamma_e > 0,
/// gamma_u >= 0; expects a 9x9 state.
DensityMatrix propagate_closed_form(const DensityMatrix& rho0, double t, const DecayParams& params);

/// Change of basis from (|1>, |2>, ground) to the symmetric/antisymmetric
/// superpositions (|s>, |a>, ground) with |s,a> = (|1> +- |2>)/sqrt(2).
/// Under this rotation the cross-damped dissipator with gamma_1 = gamma_2
/// = gamma, gamma_12 = beta*gamma becomes two independent channels with
/// rates gamma(1 + beta) and gamma(1 - beta).
ComplexMatrix symmetric_antisymmetric_basis();

}  // namespace qdsd
