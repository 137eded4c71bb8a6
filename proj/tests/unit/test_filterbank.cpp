#include <doctest.h>

#include <cmath>

#include "qmf/filterbank.hpp"

using namespace qmf;

namespace {

const double r2 = std::sqrt(2.0);

FilterSystem perturbed_haar(double delta) {
    FilterSystem fs = haar();
    fs.filters[0] = fs.filters[0] + basis(1) * Complex(delta);
    return fs;
}

}  // namespace

TEST_SUITE("filterbank") {

TEST_CASE("built-in systems validate") {
    for (const char* name : {"haar", "cantor3", "daubechies4", "permutative2", "permutative3", "permutative5"}) {
        CAPTURE(name);
        const ValidationReport r = validate(builtin(name));
        CHECK(r.passed);
        CHECK(r.max_isometry_defect <= 1e-12);
        CHECK(r.max_completeness_defect <= 1e-12);
    }
}

TEST_CASE("a 0.05 perturbation of one Haar coefficient fails") {
    const ValidationReport r = validate(perturbed_haar(0.05));
    CHECK_FALSE(r.passed);
    CHECK(r.max_isometry_defect > 0.05);
}

TEST_CASE("isometry defect of a damped Haar high-pass is |0.905 - 1|") {
    FilterSystem fs = haar();
    fs.filters[1] = (basis(0) - basis(1) * Complex(0.9)) * Complex(1.0 / r2);
    const ValidationReport r = validate(fs);
    CHECK_FALSE(r.passed);
    CHECK(r.max_isometry_defect == doctest::Approx(0.095).epsilon(1e-12));
}

TEST_CASE("Daubechies four-tap closed form") {
    const FilterSystem fs = daubechies4();
    const double s3 = std::sqrt(3.0);
    const double c = 4.0 * r2;
    const double expected[] = {(1 + s3) / c, (3 + s3) / c, (3 - s3) / c, (1 - s3) / c};
    for (int k = 0; k < 4; ++k) CHECK(std::abs(fs.filter(0).coeff(k) - expected[k]) < 1e-12);
}

TEST_CASE("Daubechies filters have p vanishing moments and validate") {
    for (int p = 1; p <= 6; ++p) {
        CAPTURE(p);
        const FilterSystem fs = daubechies(p);
        CHECK(validate(fs).passed);
        CHECK(fs.filter(0).support_size() == static_cast<std::size_t>(2 * p));
        // sum_k (-1)^k k^j m_0^(k) = 0 for j < p
        for (int j = 0; j < p; ++j) {
            Complex s{};
            for (const auto& [k, c] : fs.filter(0).coeffs()) s += ((k % 2 == 0) ? 1.0 : -1.0) * std::pow(double(k), j) * c;
            CHECK(std::abs(s) < 1e-8);
        }
        for (const auto& [k, c] : fs.filter(0).coeffs()) CHECK(c.imag() == 0.0);
    }
    CHECK_THROWS_AS(daubechies(0), std::invalid_argument);
}

TEST_CASE("high_pass_from_low") {
    const LaurentPoly m1 = high_pass_from_low(haar().filter(0));
    CHECK(std::abs(m1.coeff(1) - 1.0 / r2) < 1e-15);
    CHECK(std::abs(m1.coeff(0) + 1.0 / r2) < 1e-15);
    CHECK_THROWS_AS(high_pass_from_low(basis(0) + basis(1)), std::invalid_argument);
}

TEST_CASE("polyphase components of Haar") {
    const auto A = polyphase(haar());
    REQUIRE(A.size() == 2);
    CHECK(std::abs(A[0][0].coeff(0) - 1.0 / r2) < 1e-15);
    CHECK(std::abs(A[0][1].coeff(0) - 1.0 / r2) < 1e-15);
    CHECK(std::abs(A[1][1].coeff(0) + 1.0 / r2) < 1e-15);
}

TEST_CASE("mixing by a unitary preserves validity; a non-unitary breaks it") {
    const double t = 0.3;
    const std::vector<std::vector<Complex>> u{{std::cos(t), Complex(0, std::sin(t))},
                                              {Complex(0, std::sin(t)), std::cos(t)}};
    CHECK(validate(mix(daubechies4(), u)).passed);
    const std::vector<std::vector<Complex>> bad{{1.0, 1.0}, {0.0, 1.0}};
    CHECK_FALSE(validate(mix(haar(), bad)).passed);
    CHECK_THROWS_AS(mix(haar(), {{1.0}}), std::invalid_argument);
}

TEST_CASE("validate argument errors") {
    CHECK_THROWS_AS(validate(haar(), 0.0), std::invalid_argument);
    FilterSystem fs = haar();
    fs.filters.pop_back();
    CHECK_THROWS_AS(validate(fs), std::invalid_argument);
    CHECK_THROWS_AS(builtin("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(builtin("permutative1"), std::invalid_argument);
    CHECK_THROWS_AS(haar().filter(2), std::invalid_argument);
}

}
