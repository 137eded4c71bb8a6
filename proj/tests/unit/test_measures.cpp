#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "qmf/measures.hpp"

using namespace qmf;

namespace {

std::vector<oracle::Coeffs> filters_of(const FilterSystem& fs) {
    std::vector<oracle::Coeffs> m;
    for (const auto& f : fs.filters) m.push_back(oracle::coeffs(f));
    return m;
}

Word random_word(std::mt19937_64& rng, int N, int len) {
    std::uniform_int_distribution<int> d(0, N - 1);
    std::vector<int> a;
    for (int i = 0; i < len; ++i) a.push_back(d(rng));
    return Word(N, a);
}

}  // namespace

TEST_SUITE("measures") {

TEST_CASE("both engines agree with circle sampling") {
    std::mt19937_64 rng(21);
    for (const auto& fs : {haar(), daubechies4(), cantor3(), permutative_shift(2)}) {
        const auto m = filters_of(fs);
        for (int trial = 0; trial < 8; ++trial) {
            const LaurentPoly f = oracle::random_unit(rng, 6);
            const Word a = random_word(rng, fs.N, 1 + trial % 3);
            const double ref = oracle::mu_by_sampling(m, fs.N, a.digits(), oracle::coeffs(f), 128);
            CHECK(mu_operator(fs, f, a) == doctest::Approx(ref).epsilon(1e-10));
            CHECK(mu_spectral(fs, f, a) == doctest::Approx(ref).epsilon(1e-10));
        }
    }
}

TEST_CASE("mu_basis equals the operator engine on basis vectors") {
    for (const auto& fs : {daubechies4(), cantor3()}) {
        for (Degree p = -4; p <= 4; ++p) {
            for (const auto& a : Word::all(fs.N, 2)) {
                CHECK(mu_basis(fs, p, a) == doctest::Approx(mu_operator(fs, basis(p), a)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("tables are additive, total to ||f||^2 and coarsen consistently") {
    std::mt19937_64 rng(22);
    const FilterSystem fs = daubechies4();
    const LaurentPoly f = oracle::random_poly(rng, 7) * Complex(2.0);
    const MeasureTable t3 = measure_table(fs, f, 3, Engine::Operator);
    const MeasureTable t2 = measure_table(fs, f, 2, Engine::Spectral);
    CHECK(t3.values.size() == 8);
    CHECK(t3.total() == doctest::Approx(f.norm2()).epsilon(1e-12));
    CHECK(refinement_defect(t3, t2) < 1e-12);
    CHECK(coarsen(t3).level == 2);
    CHECK(measure_table(fs, f, 0, Engine::Operator).values.front() == doctest::Approx(f.norm2()));
    CHECK(t3.at(Word(2, {1, 0, 1})) == t3.values[5]);
}

TEST_CASE("large tables use the parallel path and still match") {
    std::mt19937_64 rng(23);
    const FilterSystem fs = daubechies4();
    const LaurentPoly f = oracle::random_unit(rng, 8);
    const MeasureTable a = measure_table(fs, f, 13, Engine::Operator);
    const MeasureTable b = measure_table(fs, f, 13, Engine::Spectral);
    double d = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) d = std::max(d, std::abs(a.values[i] - b.values[i]));
    CHECK(d < 1e-12);
    CHECK(a.total() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("table errors") {
    CHECK_THROWS_AS(measure_table(haar(), basis(0), 25, Engine::Operator), std::invalid_argument);
    CHECK_THROWS_AS(measure_table(haar(), basis(0), 2, Engine::Product), std::invalid_argument);
    CHECK_THROWS_AS(clip_measure(-1e-6), std::runtime_error);
    CHECK(clip_measure(-1e-15) == 0.0);
    CHECK(parse_engine("spectral") == Engine::Spectral);
    CHECK_THROWS_AS(parse_engine("magic"), std::invalid_argument);
}

TEST_CASE("eigenvectors and product measures") {
    const auto e = eigen_detect(cantor3(), basis(0));
    CHECK(e.is_eigen);
    CHECK(std::abs(e.lambdas[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(e.lambdas[1]) < 1e-15);
    CHECK(std::abs(e.lambdas[2] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK_THROWS_AS(eigen_detect(haar(), basis(0) * Complex(2.0)), std::invalid_argument);
    CHECK_THROWS_AS(eigen_detect(haar(), LaurentPoly{}), std::invalid_argument);

    const ProductCheck pc = product_check(haar(), basis(0) * Complex(3.0), 5);
    CHECK(pc.is_product);
    CHECK(pc.probabilities[0] == doctest::Approx(0.5));

    // e_1 is not a joint eigenvector of the Haar adjoints.
    CHECK_FALSE(check_product(haar(), basis(1), 3));
}

TEST_CASE("product spec and TV distance") {
    CHECK_THROWS_AS(ProductSpec({0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec({1.2, -0.2}), std::invalid_argument);
    CHECK_THROWS_AS(ProductSpec({1.0}), std::invalid_argument);
    const ProductSpec s({0.25, 0.75});
    CHECK(product_measure(s, Word(2, {1, 1, 0})) == doctest::Approx(0.75 * 0.75 * 0.25));
    const MeasureTable t = product_table(s, 3);
    CHECK(t.at(Word(2, {1, 1, 0})) == doctest::Approx(0.75 * 0.75 * 0.25));
    CHECK(t.total() == doctest::Approx(1.0));
    CHECK(tv_distance(t, t) == 0.0);
    const MeasureTable u = product_table(ProductSpec({0.5, 0.5}), 3);
    CHECK(tv_distance(t, u) > 0.0);
    CHECK_THROWS_AS(tv_distance(t, product_table(s, 2)), std::invalid_argument);
}

TEST_CASE("covariance identities hold") {
    std::mt19937_64 rng(24);
    for (const auto& fs : {daubechies4(), cantor3()}) {
        const LaurentPoly f = oracle::random_unit(rng, 6);
        const auto c = covariance_check(fs, random_word(rng, fs.N, 2), random_word(rng, fs.N, 2), f);
        CHECK(c.passed);
        CHECK(c.pull_lhs == doctest::Approx(c.pull_rhs).epsilon(1e-10));
    }
}

TEST_CASE("state invariance of the vector state") {
    const FilterSystem fs = haar();
    const Monomial m{Word(2, {0, 1}), Word(2, {1}), 1.0};
    const auto s = state_invariance(fs, basis(0), m);
    CHECK(s.passed);
    // A non-eigenvector state is not invariant for every monomial.
    bool some_fail = false;
    const LaurentPoly f = (basis(0) + basis(1)) * Complex(1.0 / std::sqrt(2.0));
    for (const auto& a : Word::all(2, 1)) {
        for (const auto& b : Word::all(2, 2)) some_fail |= !check_state_invariance(fs, f, Monomial{a, b, 1.0});
    }
    CHECK(some_fail);
}

TEST_CASE("build_isometry_apply is isometric from L2(mu_f)") {
    std::mt19937_64 rng(25);
    const FilterSystem fs = cantor3();
    const LaurentPoly f = oracle::random_unit(rng, 5);
    std::normal_distribution<double> g;
    std::vector<std::pair<Word, Complex>> step;
    double expected = 0.0;
    for (const auto& a : Word::all(3, 2)) {
        const Complex c(g(rng), g(rng));
        step.emplace_back(a, c);
        expected += std::norm(c) * mu_operator(fs, f, a);
    }
    CHECK(build_isometry_apply(fs, f, step).norm2() == doctest::Approx(expected).epsilon(1e-12));

    step.push_back(step.front());
    CHECK_THROWS_AS(build_isometry_apply(fs, f, step), std::invalid_argument);
    CHECK_THROWS_AS(build_isometry_apply(fs, f, {{Word(3, {0}), 1.0}, {Word(3, {0, 1}), 1.0}}),
                    std::invalid_argument);
}

TEST_CASE("cyclic subspaces") {
    for (int k = 0; k <= 5; ++k) CHECK(cyclic_span_dim(haar(), basis(0), k) == (1 << k));
    // e_0 is fixed by S_0 for the permutative system: the span is one-dimensional.
    CHECK(cyclic_span_dim(permutative_shift(2), basis(0), 4) == 1);
    CHECK_THROWS_AS(cyclic_span_dim(haar(), basis(0), 13), std::invalid_argument);

    const auto parts = greedy_decompose(permutative_shift(2), {basis(0), basis(0), basis(1)}, 3);
    REQUIRE(parts.size() == 2);
    CHECK(std::abs(inner(parts[0].vector, parts[1].vector)) < 1e-12);
    CHECK(parts[1].table.total() == doctest::Approx(1.0));
    CHECK_THROWS_AS(greedy_decompose(haar(), {LaurentPoly{}}, 2), std::invalid_argument);
}

TEST_CASE("self-similarity of the Cantor measure") {
    const FilterSystem fs = cantor3();
    for (int k = 1; k <= 5; ++k) {
        const MeasureTable fine = measure_table(fs, basis(0), k, Engine::Operator);
        const MeasureTable coarse = measure_table(fs, basis(0), k - 1, Engine::Operator);
        CHECK(self_similarity_defect(fine, coarse, cantor_ifs(), {0.5, 0.5}) < 1e-12);
        // Wrong weights are detected.
        CHECK(self_similarity_defect(fine, coarse, cantor_ifs(), {0.7, 0.3}) > 0.01);
    }
}

TEST_CASE("density statistics") {
    const MeasureTable t = measure_table(cantor3(), basis(0), 3, Engine::Operator);
    const DensityStats d = density_stats(t, 4);
    CHECK(d.max_density == doctest::Approx(27.0 / 8.0));
    CHECK(d.min_density == 0.0);
    CHECK(d.histogram.size() == 4);
    CHECK(d.bin_edges.size() == 5);
    std::size_t total = 0;
    for (auto h : d.histogram) total += h;
    CHECK(total == 27);
    const DensityStats leb = density_stats(measure_table(haar(), basis(0), 4, Engine::Spectral));
    CHECK(leb.max_density == doctest::Approx(1.0));
    CHECK(leb.min_density == doctest::Approx(1.0));
}

}
