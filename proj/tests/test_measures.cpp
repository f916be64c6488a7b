#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qdsd/dynamics.hpp"
#include "qdsd/linalg.hpp"
#include "qdsd/measures.hpp"
#include "qdsd/states.hpp"
#include "test_support.hpp"

using namespace qdsd;
using qdsd_test::random_unitary;

namespace {

DensityMatrix diagonal_product_state() {
    ComplexMatrix a(3, 3), b(3, 3);
    a(0, 0) = 1.0;
    b(0, 0) = 1.0;
    return DensityMatrix(kron(a, b));
}

DensityMatrix random_separable_mixture(std::mt19937& rng, int components) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    ComplexMatrix sum(9, 9);
    double total = 0.0;
    for (int c = 0; c < components; ++c) {
        const double w = uniform(rng) + 0.1;
        sum += Complex(w) * kron(qdsd_test::random_density_matrix(rng, 3).matrix(),
                                 qdsd_test::random_density_matrix(rng, 3).matrix());
        total += w;
    }
    sum *= Complex(1.0 / total);
    return DensityMatrix(std::move(sum));
}

}  // namespace

TEST_CASE("negativity: products, the maximally entangled state, and the post-death window") {
    CHECK(negativity(diagonal_product_state()) == 0.0);
    CHECK(negativity(maximally_entangled_state()) == doctest::Approx(1.0).epsilon(1e-12));

    // Just past the detected negativity death the evolved state is PPT.
    const auto evolved = propagate_closed_form(horodecki_state(4.2), 0.19, DecayParams::from_ratio(0.5));
    CHECK(negativity(evolved) == 0.0);
}

TEST_CASE("ccnr_score: maximally mixed, maximally entangled, bound-entanglement window") {
    // Realignment of I/9 is vec(I/3) vec(I/3)^T: rank one with singular
    // value 1/3, so the score is 1/3 - 1 = -2/3.
    CHECK(ccnr_score(isotropic_state(0.0)) == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));
    CHECK(ccnr_score(maximally_entangled_state()) == doctest::Approx(2.0).epsilon(1e-12));

    const auto evolved = propagate_closed_form(horodecki_state(4.2), 0.2, DecayParams::from_ratio(0.5));
    CHECK(negativity(evolved) == 0.0);  // inside the window: PPT...
    CHECK(ccnr_score(evolved) > 0.0);   // ...but certified entangled.
}

TEST_CASE("is_ppt across the family") {
    CHECK(is_ppt(horodecki_state(3.5)));
    CHECK(!is_ppt(horodecki_state(4.5)));
    CHECK(is_ppt(isotropic_state(0.1)));
}

TEST_CASE("criteria_sample bundles a consistent snapshot") {
    SUBCASE("maximally mixed") {
        const CriteriaSample sample = criteria_sample(isotropic_state(0.0));
        CHECK(sample.negativity == 0.0);
        CHECK(sample.ccnr_score == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));
        CHECK(sample.pt_min_eigenvalue == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
        CHECK(sample.pt_negative_eigenvalues.empty());
    }
    SUBCASE("maximally entangled") {
        const CriteriaSample sample = criteria_sample(maximally_entangled_state());
        CHECK(sample.negativity == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(sample.ccnr_score == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(sample.pt_min_eigenvalue == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
        REQUIRE(sample.pt_negative_eigenvalues.size() == 3);
        for (double eig : sample.pt_negative_eigenvalues)
            CHECK(eig == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("separable family member") {
        const CriteriaSample sample = criteria_sample(horodecki_state(2.0));
        CHECK(sample.negativity == 0.0);
        CHECK(sample.ccnr_score <= 0.0);
    }
    SUBCASE("negativity is the summed magnitude of the listed eigenvalues") {
        std::mt19937 rng(606);
        const DensityMatrix rho = qdsd_test::random_density_matrix(rng);
        const CriteriaSample sample = criteria_sample(rho);
        double sum = 0.0;
        for (double eig : sample.pt_negative_eigenvalues) sum -= eig;
        CHECK(sample.negativity == doctest::Approx(sum).epsilon(1e-12));
        CHECK((sample.negativity == 0.0) == sample.pt_negative_eigenvalues.empty());
    }
}

TEST_CASE("negativity is invariant under local unitaries") {
    std::mt19937 rng(777);
    const DensityMatrix rho = horodecki_state(4.4);
    for (int trial = 0; trial < 5; ++trial) {
        const auto conjugated =
            local_unitary_conjugate(rho, random_unitary(rng, 3), random_unitary(rng, 3));
        CHECK(negativity(conjugated) == doctest::Approx(negativity(rho)).epsilon(1e-10));
    }
}

TEST_CASE("no separable construction ever scores CCNR-positive") {
    std::mt19937 rng(140);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(ccnr_score(random_separable_mixture(rng, 1 + trial % 4)) <= 1e-12);
    // The family's own separable building blocks.
    for (double alpha : {2.0, 2.5, 3.0}) CHECK(ccnr_score(horodecki_state(alpha)) <= 1e-12);
}

TEST_CASE("negativity boundary of the family sits at alpha = 4") {
    CHECK(negativity(horodecki_state(3.9)) == 0.0);
    CHECK(negativity(horodecki_state(3.99)) == 0.0);
    CHECK(negativity(horodecki_state(4.01)) > 1e-10);
    CHECK(negativity(horodecki_state(4.1)) > 1e-6);
}

TEST_CASE("isotropic negativity is nondecreasing in p") {
    double previous = -1.0;
    for (int k = 0; k < 50; ++k) {
        const double p = static_cast<double>(k) / 49.0;
        const double value = negativity(isotropic_state(p));
        CHECK(value >= previous - 1e-12);
        previous = value;
    }
}
