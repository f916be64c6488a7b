#include "qdsd/dsd.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "qdsd/errors.hpp"
#include "qdsd/linalg.hpp"

namespace qdsd {

namespace {

std::vector<double> uniform_grid(double t_max, std::size_t n_points) {
    std::vector<double> times(n_points);
    for (std::size_t i = 0; i < n_points; ++i)
        times[i] = t_max * static_cast<double>(i) / static_cast<double>(n_points - 1);
    times.front() = 0.0;
    times.back() = t_max;
    return times;
}

struct GridSignals {
    std::vector<double> times;
    std::vector<double> min_pt_eig;
    std::vector<double> ccnr;  // filled only when requested
};

GridSignals scan_signals(const DensityMatrix& rho0, const DecayParams& params, double t_max,
                         std::size_t n_points, bool with_ccnr) {
    if (!(t_max > 0.0)) throw ParameterRangeError("t_max", "horizon must be positive");
    if (n_points < 2) throw ParameterRangeError("scan_points", "need at least 2 grid points");
    GridSignals signals;
    signals.times = uniform_grid(t_max, n_points);
    signals.min_pt_eig.reserve(n_points);
    if (with_ccnr) signals.ccnr.reserve(n_points);
    for (double t : signals.times) {
        const DensityMatrix rho = propagate_closed_form(rho0, t, params);
        signals.min_pt_eig.push_back(hermitian_eigenvalues(partial_transpose(rho)).front());
        if (with_ccnr) signals.ccnr.push_back(ccnr_score(rho));
    }
    return signals;
}

/// Generic certified-crossing search over sampled values of a continuous
/// signal g. "Alive" means g > tol; death is certified only between a
/// sample with g > tol and a later sample with g < -tol, and the crossing
/// is then bisected. Signals that merely decay into [-tol, tol] are not
/// certified (decayed_below_tolerance).
EventSearch find_last_death(const std::vector<double>& times, const std::vector<double>& values,
                            double tol, double time_tol, bool dead_from_start_reports_zero,
                            const std::function<double(double)>& refine) {
    EventSearch result;
    const std::size_t n = times.size();

    std::size_t last_alive = n;  // n = none
    std::size_t alive_runs = 0;
    bool in_run = false;
    for (std::size_t k = 0; k < n; ++k) {
        const bool alive = values[k] > tol;
        if (alive) {
            last_alive = k;
            if (!in_run) ++alive_runs;
        }
        in_run = alive;
    }
    result.re_crossed = alive_runs > 1;

    if (last_alive == n) {
        if (dead_from_start_reports_zero) result.time = 0.0;
        return result;
    }
    if (last_alive == n - 1) return result;  // still alive at the horizon

    std::size_t dead_certified = n;
    for (std::size_t k = last_alive + 1; k < n; ++k) {
        if (values[k] < -tol) {
            dead_certified = k;
            break;
        }
    }
    if (dead_certified == n) {
        result.decayed_below_tolerance = true;
        return result;
    }

    double lo = times[last_alive];
    double hi = times[dead_certified];
    while (hi - lo > time_tol) {
        const double mid = 0.5 * (lo + hi);
        if (refine(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    result.time = 0.5 * (lo + hi);
    return result;
}

EventSearch negativity_death_from_signals(const GridSignals& signals, const DensityMatrix& rho0,
                                          const DecayParams& params, const ScanOptions& options) {
    std::vector<double> alive_signal(signals.min_pt_eig.size());
    for (std::size_t k = 0; k < alive_signal.size(); ++k) alive_signal[k] = -signals.min_pt_eig[k];
    return find_last_death(
        signals.times, alive_signal, options.eig_tol, options.time_tol,
        /*dead_from_start_reports_zero=*/true, [&](double t) {
            const DensityMatrix rho = propagate_closed_form(rho0, t, params);
            return -hermitian_eigenvalues(partial_transpose(rho)).front();
        });
}

EventSearch realignment_death_from_signals(const GridSignals& signals, const DensityMatrix& rho0,
                                           const DecayParams& params, const ScanOptions& options) {
    return find_last_death(signals.times, signals.ccnr, options.ccnr_tol, options.time_tol,
                           /*dead_from_start_reports_zero=*/false, [&](double t) {
                               return ccnr_score(propagate_closed_form(rho0, t, params));
                           });
}

}  // namespace

std::string_view to_string(TrajectoryType type) {
    switch (type) {
        case TrajectoryType::kNptForever: return "NPT_FOREVER";
        case TrajectoryType::kEsdNoDsd: return "ESD_NO_DSD";
        case TrajectoryType::kDsdThenUndetected: return "DSD_THEN_UNDETECTED";
    }
    return "UNKNOWN";
}

Trajectory sample_trajectory(const DensityMatrix& rho0, const DecayParams& params, double t_max,
                             std::size_t n_points, double tol) {
    if (!(t_max > 0.0)) throw ParameterRangeError("t_max", "horizon must be positive");
    if (n_points < 2) throw ParameterRangeError("n_points", "need at least 2 samples");
    Trajectory trajectory;
    trajectory.times = uniform_grid(t_max, n_points);
    trajectory.samples.reserve(n_points);
    for (double t : trajectory.times)
        trajectory.samples.push_back(criteria_sample(propagate_closed_form(rho0, t, params), tol));
    return trajectory;
}

EventSearch find_negativity_death(const DensityMatrix& rho0, const DecayParams& params, double t_max,
                                  const ScanOptions& options) {
    const GridSignals signals = scan_signals(rho0, params, t_max, options.scan_points, false);
    return negativity_death_from_signals(signals, rho0, params, options);
}

EventSearch find_realignment_death(const DensityMatrix& rho0, const DecayParams& params, double t_max,
                                   const ScanOptions& options) {
    const GridSignals signals = scan_signals(rho0, params, t_max, options.scan_points, true);
    return realignment_death_from_signals(signals, rho0, params, options);
}

DsdReport classify_trajectory(const DensityMatrix& rho0, const DecayParams& params, double t_max,
                              const ScanOptions& options) {
    const GridSignals signals = scan_signals(rho0, params, t_max, options.scan_points, true);
    const EventSearch negativity_death = negativity_death_from_signals(signals, rho0, params, options);
    const EventSearch realignment_death = realignment_death_from_signals(signals, rho0, params, options);

    DsdReport report;
    report.horizon = t_max;
    report.t_negativity_death = negativity_death.time;
    report.t_realignment_death = realignment_death.time;
    report.initially_ppt = signals.min_pt_eig.front() >= -options.eig_tol;

    if (!negativity_death.time) {
        report.type = TrajectoryType::kNptForever;
        return report;
    }

    const double t_n = *negativity_death.time;
    bool ccnr_positive_after_death = false;
    for (std::size_t k = 0; k < signals.times.size(); ++k) {
        if (signals.times[k] > t_n && signals.ccnr[k] > options.ccnr_tol) {
            ccnr_positive_after_death = true;
            break;
        }
    }
    if (ccnr_positive_after_death) {
        report.type = TrajectoryType::kDsdThenUndetected;
        if (realignment_death.time && *realignment_death.time > t_n)
            report.window = std::make_pair(t_n, *realignment_death.time);
    } else {
        report.type = TrajectoryType::kEsdNoDsd;
        report.entanglement_after_tn_unknown = true;
    }
    return report;
}

}  // namespace qdsd
