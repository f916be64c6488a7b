#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qdsd/dynamics.hpp"
#include "qdsd/measures.hpp"
#include "qdsd/states.hpp"

namespace qdsd {

/// Criteria sampled along a closed-form evolution on a strictly increasing
/// time grid starting at 0 (times are gamma_e * t).
struct Trajectory {
    std::vector<double> times;
    std::vector<CriteriaSample> samples;
};

enum class TrajectoryType {
    /// No certified negativity death by the horizon: the state stayed NPT
    /// (entangled, distillable-candidate) for every sampled time. A
    /// statement about the scanned horizon, never about t = infinity.
    kNptForever,
    /// Negativity died but the realignment score never certified
    /// entanglement afterwards. Non-detection is not separability, so this
    /// is reported with entanglement_after_tn_unknown set.
    kEsdNoDsd,
    /// Negativity died and the realignment score stayed positive beyond the
    /// death: a certified window of bound entanglement (distillability
    /// sudden death).
    kDsdThenUndetected,
};

std::string_view to_string(TrajectoryType type);

/// Outcome of a death-time search.
struct EventSearch {
    /// Certified crossing time, when one exists. For a state whose quantity
    /// is already dead at t = 0 and never revives this is 0.
    std::optional<double> time;
    /// The sign pattern on the scan grid re-entered the "alive" side after
    /// first dying: the reported time is the final crossing.
    bool re_crossed = false;
    /// The quantity left the certifiable band (|value| > tol) before the
    /// horizon but never certifiably crossed: no death is reported. This is
    /// how an asymptotically-NPT state looks under a fixed tolerance.
    bool decayed_below_tolerance = false;
};

struct ScanOptions {
    /// Coarse grid points over [0, t_max] used to bracket sign changes.
    std::size_t scan_points = 2000;
    /// Bisection stops when the bracket is narrower than this.
    double time_tol = 1e-5;
    /// Negativity zero threshold (on partial-transpose eigenvalues).
    double eig_tol = 1e-10;
    /// Realignment-score zero threshold.
    double ccnr_tol = 1e-12;
};

struct DsdReport {
    std::optional<double> t_negativity_death;    // t_N
    std::optional<double> t_realignment_death;   // t_R
    /// (t_N, t_R) when the realignment score certifies entanglement past
    /// t_N; the bound-entanglement window.
    std::optional<std::pair<double, double>> window;
    TrajectoryType type = TrajectoryType::kNptForever;
    /// Set when the classification leans on CCNR non-detection, which can
    /// never certify separability.
    bool entanglement_after_tn_unknown = false;
    /// Negativity was already zero (within tol) at t = 0.
    bool initially_ppt = false;
    /// Horizon the classification scanned; kNptForever statements are
    /// relative to it.
    double horizon = 0.0;
};

/// Uniform grid of n_points over [0, t_max] (endpoints included), each
/// sample via the closed-form propagator. Requires t_max > 0, n_points >= 2.
Trajectory sample_trajectory(const DensityMatrix& rho0, const DecayParams& params, double t_max,
                             std::size_t n_points, double tol = 1e-10);

/// Earliest certified time at which the evolved state stops being NPT:
/// scans the minimum partial-transpose eigenvalue on a coarse grid, then
/// bisects the bracketed sign change to |interval| <= time_tol. A crossing
/// is certified only between a sample below -eig_tol and a later sample
/// above +eig_tol; a state that is never NPT reports time 0, and a state
/// still NPT at t_max (or whose eigenvalue merely decays into the tolerance
/// band) reports no death.
EventSearch find_negativity_death(const DensityMatrix& rho0, const DecayParams& params, double t_max,
                                  const ScanOptions& options = {});

/// Latest certified time at which the realignment score stops being
/// positive (bracket + bisection on ccnr_score). No death is reported if
/// the score is never positive, or still positive at the horizon.
EventSearch find_realignment_death(const DensityMatrix& rho0, const DecayParams& params, double t_max,
                                   const ScanOptions& options = {});

/// Classifies the trajectory per the three dynamical types, using one shared
/// criteria grid for the death searches and the post-death CCNR scan.
DsdReport classify_trajectory(const DensityMatrix& rho0, const DecayParams& params, double t_max = 20.0,
                              const ScanOptions& options = {});

}  // namespace qdsd
