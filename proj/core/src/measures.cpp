#include "qdsd/measures.hpp"

#include "qdsd/linalg.hpp"

namespace qdsd {

namespace {

std::vector<double> pt_spectrum(const DensityMatrix& rho) {
    return hermitian_eigenvalues(partial_transpose(rho, Subsystem::B));
}

}  // namespace

double negativity(const DensityMatrix& rho, double tol) {
    double sum = 0.0;
    for (double eig : pt_spectrum(rho))
        if (eig < -tol) sum -= eig;
    return sum;
}

double ccnr_score(const DensityMatrix& rho) { return trace_norm(realign(rho)) - 1.0; }

bool is_ppt(const DensityMatrix& rho, double tol) { return pt_spectrum(rho).front() >= -tol; }

CriteriaSample criteria_sample(const DensityMatrix& rho, double tol) {
    CriteriaSample sample;
    const std::vector<double> eigs = pt_spectrum(rho);
    sample.pt_min_eigenvalue = eigs.front();
    for (double eig : eigs) {
        if (eig < -tol) {
            sample.pt_negative_eigenvalues.push_back(eig);
            sample.negativity -= eig;
        }
    }
    sample.ccnr_score = ccnr_score(rho);
    return sample;
}

}  // namespace qdsd
