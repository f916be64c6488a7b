#pragma once

#include <vector>

#include "qdsd/states.hpp"

namespace qdsd {

/// All entanglement criteria evaluated at one point, derived from a single
/// partial-transpose eigendecomposition so the fields are consistent:
/// negativity equals the summed magnitudes of pt_negative_eigenvalues and
/// is zero exactly when that list is empty.
struct CriteriaSample {
    double negativity = 0.0;
    /// trace_norm(realign(rho)) - 1; positive certifies entanglement,
    /// nonpositive is inconclusive (never evidence of separability).
    double ccnr_score = 0.0;
    double pt_min_eigenvalue = 0.0;
    /// Partial-transpose eigenvalues below -tol, ascending.
    std::vector<double> pt_negative_eigenvalues;
};

/// Sum of max(0, -lambda) over the partial-transpose spectrum, with
/// |lambda| <= tol treated as zero. Positive negativity certifies an NPT
/// (distillable-candidate) state.
double negativity(const DensityMatrix& rho, double tol = 1e-10);

/// trace_norm(realign(rho)) - 1.
double ccnr_score(const DensityMatrix& rho);

/// True iff the minimum partial-transpose eigenvalue is >= -tol.
bool is_ppt(const DensityMatrix& rho, double tol = 1e-10);

CriteriaSample criteria_sample(const DensityMatrix& rho, double tol = 1e-10);

}  // namespace qdsd
