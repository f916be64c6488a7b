#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "qdsd/errors.hpp"
#include "qdsd/matrix_io.hpp"
#include "qdsd/states.hpp"
#include "test_support.hpp"

using namespace qdsd;

TEST_CASE("write/read round trip is exact") {
    std::mt19937 rng(808);
    const DensityMatrix rho = qdsd_test::random_density_matrix(rng);
    std::stringstream stream;
    write_density_matrix(stream, rho.matrix());
    const ComplexMatrix back = read_density_matrix(stream);
    REQUIRE(back.rows() == 9);
    CHECK(max_abs_difference(back, rho.matrix()) == 0.0);
}

TEST_CASE("writer emits the documented layout") {
    ComplexMatrix m(2, 2);
    m(0, 0) = Complex(0.5, 0.0);
    m(0, 1) = Complex(0.25, -0.125);
    m(1, 0) = Complex(0.25, 0.125);
    m(1, 1) = Complex(0.5, 0.0);
    std::stringstream stream;
    write_density_matrix(stream, m);
    std::string line;
    std::getline(stream, line);
    CHECK(line == "dim 2");
    std::getline(stream, line);
    CHECK(line == "0.5+0j 0.25-0.125j");
    std::getline(stream, line);
    CHECK(line == "0.25+0.125j 0.5+0j");
}

TEST_CASE("reader accepts arbitrary whitespace between tokens") {
    std::stringstream stream("  dim\t2\n\n 1+0j\t0+0j\n\n\n0+0j\n   0+0j  \n");
    const ComplexMatrix m = read_density_matrix(stream);
    CHECK(m(0, 0) == Complex(1.0));
    CHECK(m(1, 1) == Complex(0.0));
}

TEST_CASE("reader parses exponents and signs in both parts") {
    std::stringstream stream("dim 1 -1.5e-3+2.25E+1j");
    const ComplexMatrix m = read_density_matrix(stream);
    CHECK(m(0, 0).real() == doctest::Approx(-1.5e-3));
    CHECK(m(0, 0).imag() == doctest::Approx(22.5));
}

TEST_CASE("parse errors carry line and column") {
    SUBCASE("bad header") {
        std::stringstream stream("dmi 9");
        CHECK_THROWS_AS(read_density_matrix(stream), ParseError);
    }
    SUBCASE("bad dimension") {
        std::stringstream stream("dim nine");
        CHECK_THROWS_AS(read_density_matrix(stream), ParseError);
    }
    SUBCASE("missing imaginary part") {
        std::stringstream stream("dim 1\n0.5\n");
        try {
            read_density_matrix(stream);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 1);
        }
    }
    SUBCASE("truncated input") {
        std::stringstream stream("dim 2\n1+0j 0+0j\n0+0j\n");
        CHECK_THROWS_AS(read_density_matrix(stream), ParseError);
    }
    SUBCASE("garbage number") {
        std::stringstream stream("dim 1\nxyz+0j\n");
        CHECK_THROWS_AS(read_density_matrix(stream), ParseError);
    }
    SUBCASE("trailing junk") {
        std::stringstream stream("dim 1\n1+0j extra\n");
        try {
            read_density_matrix(stream);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 6);
        }
    }
}

TEST_CASE("file helpers raise IoError for missing paths") {
    CHECK_THROWS_AS(read_density_matrix_file("/nonexistent/dir/m.txt"), IoError);
    CHECK_THROWS_AS(write_density_matrix_file("/nonexistent/dir/m.txt", ComplexMatrix::identity(2)),
                    IoError);
}
