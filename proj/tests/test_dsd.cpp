#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qdsd/dsd.hpp"
#include "qdsd/dynamics.hpp"
#include "qdsd/errors.hpp"
#include "qdsd/linalg.hpp"
#include "qdsd/states.hpp"

using namespace qdsd;

namespace {

const DecayParams kStandard = DecayParams::from_ratio(0.5);

DensityMatrix ground_state() {
    ComplexMatrix m(9, 9);
    m(8, 8) = 1.0;
    return DensityMatrix(std::move(m));
}

double min_pt_eig_at(const DensityMatrix& rho0, double t) {
    return hermitian_eigenvalues(partial_transpose(propagate_closed_form(rho0, t, kStandard))).front();
}

}  // namespace

TEST_CASE("sample_trajectory: grid shape and the alpha = 4.2 death index") {
    const Trajectory trajectory = sample_trajectory(horodecki_state(4.2), kStandard, 1.0, 1001);
    REQUIRE(trajectory.times.size() == 1001);
    REQUIRE(trajectory.samples.size() == 1001);
    CHECK(trajectory.times.front() == 0.0);
    CHECK(trajectory.times.back() == 1.0);
    for (std::size_t i = 1; i < trajectory.times.size(); ++i)
        CHECK(trajectory.times[i] > trajectory.times[i - 1]);

    // Negativity dies at t ~ 0.1826: positive through index 182, zero from
    // index 183 onward.
    CHECK(trajectory.samples[182].negativity > 0.0);
    for (std::size_t i = 183; i < trajectory.samples.size(); ++i)
        CHECK(trajectory.samples[i].negativity == 0.0);
}

TEST_CASE("sample_trajectory: stationary separable state stays undetected") {
    const Trajectory trajectory = sample_trajectory(ground_state(), kStandard, 2.0, 101);
    for (const CriteriaSample& sample : trajectory.samples) {
        CHECK(sample.negativity == 0.0);
        CHECK(sample.ccnr_score <= 1e-12);
    }
}

TEST_CASE("sample_trajectory: rotated state keeps positive negativity through t_max = 10") {
    const Trajectory trajectory = sample_trajectory(horodecki_state_rotated(4.2), kStandard, 10.0, 201);
    for (const CriteriaSample& sample : trajectory.samples) CHECK(sample.negativity > 0.0);
}

TEST_CASE("sample_trajectory rejects bad grids") {
    CHECK_THROWS_AS(sample_trajectory(ground_state(), kStandard, 0.0, 10), ParameterRangeError);
    CHECK_THROWS_AS(sample_trajectory(ground_state(), kStandard, 1.0, 1), ParameterRangeError);
}

TEST_CASE("find_negativity_death reproduces the published death times") {
    const EventSearch death_42 = find_negativity_death(horodecki_state(4.2), kStandard, 20.0);
    REQUIRE(death_42.time.has_value());
    CHECK(*death_42.time > 0.1816);
    CHECK(*death_42.time < 0.1836);
    CHECK(!death_42.re_crossed);

    const EventSearch death_45 = find_negativity_death(horodecki_state(4.5), kStandard, 20.0);
    REQUIRE(death_45.time.has_value());
    CHECK(*death_45.time > 0.6867);
    CHECK(*death_45.time < 0.6887);
}

TEST_CASE("find_negativity_death: rotated state never certifies a death") {
    const EventSearch search = find_negativity_death(horodecki_state_rotated(4.2), kStandard, 20.0);
    CHECK(!search.time.has_value());
    // Its minimum PT eigenvalue decays through the tolerance band without
    // ever crossing zero.
    CHECK(search.decayed_below_tolerance);
}

TEST_CASE("find_negativity_death: initially PPT states report time zero") {
    for (double alpha : {2.5, 3.5}) {
        const EventSearch search = find_negativity_death(horodecki_state(alpha), kStandard, 20.0);
        REQUIRE(search.time.has_value());
        CHECK(*search.time == 0.0);
    }
}

TEST_CASE("find_realignment_death reproduces the published detection limits") {
    const EventSearch death_42 = find_realignment_death(horodecki_state(4.2), kStandard, 20.0);
    REQUIRE(death_42.time.has_value());
    CHECK(*death_42.time > 0.2416);
    CHECK(*death_42.time < 0.2436);

    const EventSearch death_45 = find_realignment_death(horodecki_state(4.5), kStandard, 20.0);
    REQUIRE(death_45.time.has_value());
    CHECK(*death_45.time >= 0.298);
    CHECK(*death_45.time <= 0.300);

    CHECK(!find_realignment_death(ground_state(), kStandard, 20.0).time.has_value());
}

TEST_CASE("bisection brackets a true sign change of the minimum PT eigenvalue") {
    const DensityMatrix rho0 = horodecki_state(4.2);
    const ScanOptions options;
    const EventSearch search = find_negativity_death(rho0, kStandard, 20.0, options);
    REQUIRE(search.time.has_value());
    const double before = min_pt_eig_at(rho0, *search.time - options.time_tol);
    const double after = min_pt_eig_at(rho0, *search.time + options.time_tol);
    const bool opposite_signs = before < 0.0 && after > 0.0;
    const bool below_tol_side_near_zero =
        std::abs(before) <= 10.0 * options.eig_tol || std::abs(after) <= 10.0 * options.eig_tol;
    CHECK((opposite_signs || below_tol_side_near_zero));
}

TEST_CASE("death times are grid independent") {
    const DensityMatrix rho0 = horodecki_state(4.2);
    ScanOptions coarse, fine;
    coarse.scan_points = 1001;
    fine.scan_points = 4001;
    const auto t_n_coarse = find_negativity_death(rho0, kStandard, 20.0, coarse).time;
    const auto t_n_fine = find_negativity_death(rho0, kStandard, 20.0, fine).time;
    REQUIRE(t_n_coarse);
    REQUIRE(t_n_fine);
    CHECK(std::abs(*t_n_coarse - *t_n_fine) <= 2.0 * coarse.time_tol);

    const auto t_r_coarse = find_realignment_death(rho0, kStandard, 20.0, coarse).time;
    const auto t_r_fine = find_realignment_death(rho0, kStandard, 20.0, fine).time;
    REQUIRE(t_r_coarse);
    REQUIRE(t_r_fine);
    CHECK(std::abs(*t_r_coarse - *t_r_fine) <= 2.0 * coarse.time_tol);
}

TEST_CASE("negativity death time grows with alpha until the family stops dying") {
    // Certified deaths exist up to alpha ~ 4.81; beyond, the persistently
    // negative PT block keeps the state NPT at every finite time.
    double previous = 0.0;
    for (double alpha : {4.1, 4.2, 4.3, 4.5, 4.7, 4.8}) {
        const auto death = find_negativity_death(horodecki_state(alpha), kStandard, 20.0);
        REQUIRE(death.time.has_value());
        CHECK(*death.time > previous);
        previous = *death.time;
    }
    for (double alpha : {4.9, 5.0}) {
        const auto death = find_negativity_death(horodecki_state(alpha), kStandard, 20.0);
        CHECK(!death.time.has_value());
    }
}

TEST_CASE("rotated family stays NPT over the full horizon") {
    for (double alpha : {4.1, 4.5, 5.0}) {
        const DensityMatrix sigma = horodecki_state_rotated(alpha);
        // Strictly negative at every grid point to t = 20; certifiably below
        // -1e-10 on the first half before the eigenvalue decays into the
        // tolerance band.
        for (int k = 0; k <= 200; ++k) {
            const double t = 20.0 * k / 200.0;
            const double eig = min_pt_eig_at(sigma, t);
            CHECK(eig < 0.0);
            if (t <= 10.0) CHECK(eig < -1e-10);
        }
    }
}

TEST_CASE("classify_trajectory: the three dynamical types") {
    SUBCASE("free-entangled family state suffers distillability sudden death") {
        const DsdReport report = classify_trajectory(horodecki_state(4.2), kStandard, 20.0);
        CHECK(report.type == TrajectoryType::kDsdThenUndetected);
        REQUIRE(report.t_negativity_death);
        REQUIRE(report.t_realignment_death);
        REQUIRE(report.window);
        CHECK(report.window->first == doctest::Approx(0.18256).epsilon(5e-3));
        CHECK(report.window->second == doctest::Approx(0.24256).epsilon(5e-3));
        CHECK(report.window->second > report.window->first);
        CHECK(!report.initially_ppt);
        CHECK(!report.entanglement_after_tn_unknown);
    }

    SUBCASE("rotated partner never dies") {
        const DsdReport report = classify_trajectory(horodecki_state_rotated(4.2), kStandard, 20.0);
        CHECK(report.type == TrajectoryType::kNptForever);
        CHECK(!report.t_negativity_death);
        CHECK(report.horizon == 20.0);
    }

    SUBCASE("alpha = 4.5 dies after realignment detection already failed") {
        const DsdReport report = classify_trajectory(horodecki_state(4.5), kStandard, 20.0);
        CHECK(report.type == TrajectoryType::kEsdNoDsd);
        CHECK(report.entanglement_after_tn_unknown);
        REQUIRE(report.t_negativity_death);
        REQUIRE(report.t_realignment_death);
        CHECK(*report.t_realignment_death < *report.t_negativity_death);
        CHECK(!report.window);
    }

    SUBCASE("isotropic state has no certified bound-entanglement window") {
        const DsdReport report = classify_trajectory(isotropic_state(0.9), kStandard, 20.0);
        CHECK(report.type != TrajectoryType::kDsdThenUndetected);
        CHECK(!report.window);
    }

    SUBCASE("initially PPT bound-entangled state reports its detection window from zero") {
        const DsdReport report = classify_trajectory(horodecki_state(3.5), kStandard, 20.0);
        CHECK(report.initially_ppt);
        REQUIRE(report.t_negativity_death);
        CHECK(*report.t_negativity_death == 0.0);
        CHECK(report.type == TrajectoryType::kDsdThenUndetected);
        REQUIRE(report.window);
        CHECK(report.window->first == 0.0);
    }
}

TEST_CASE("to_string covers the trajectory types") {
    CHECK(to_string(TrajectoryType::kNptForever) == "NPT_FOREVER");
    CHECK(to_string(TrajectoryType::kEsdNoDsd) == "ESD_NO_DSD");
    CHECK(to_string(TrajectoryType::kDsdThenUndetected) == "DSD_THEN_UNDETECTED");
}
