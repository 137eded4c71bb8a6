#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qmf/cuntz.hpp"

using namespace qmf;

namespace {

std::vector<oracle::Coeffs> filters_of(const FilterSystem& fs) {
    std::vector<oracle::Coeffs> m;
    for (const auto& f : fs.filters) m.push_back(oracle::coeffs(f));
    return m;
}

std::vector<FilterSystem> systems() { return {haar(), daubechies4(), cantor3(), permutative_shift(3)}; }

Word random_word(std::mt19937_64& rng, int N, int len) {
    std::uniform_int_distribution<int> d(0, N - 1);
    std::vector<int> a;
    for (int i = 0; i < len; ++i) a.push_back(d(rng));
    return Word(N, a);
}

}  // namespace

TEST_SUITE("cuntz") {

TEST_CASE("S_j acts as the dense matrix m_j^(n - N k)") {
    std::mt19937_64 rng(3);
    for (const auto& fs : systems()) {
        const auto m = filters_of(fs);
        const LaurentPoly f = oracle::random_poly(rng, 5);
        for (int j = 0; j < fs.N; ++j) {
            const LaurentPoly g = apply_S(fs, j, f);
            for (Degree n = -60; n <= 60; ++n) {
                Complex ref{};
                for (const auto& [k, c] : f.coeffs()) ref += oracle::dense_S(m[j], fs.N, n, k) * c;
                CHECK(std::abs(g.coeff(n) - ref) < 1e-12);
            }
        }
    }
}

TEST_CASE("S_j^* is the adjoint: <S_j f, g> = <f, S_j^* g>") {
    std::mt19937_64 rng(4);
    for (const auto& fs : systems()) {
        for (int trial = 0; trial < 10; ++trial) {
            const LaurentPoly f = oracle::random_poly(rng, 6);
            const LaurentPoly g = oracle::random_poly(rng, 12);
            for (int j = 0; j < fs.N; ++j) {
                CHECK(std::abs(inner(apply_S(fs, j, f), g) - inner(f, apply_S_star(fs, j, g))) < 1e-11);
            }
        }
    }
}

TEST_CASE("S_a^* agrees with root averaging on the circle") {
    std::mt19937_64 rng(8);
    for (const auto& fs : systems()) {
        const auto m = filters_of(fs);
        const LaurentPoly f = oracle::random_poly(rng, 8);
        const Word a = random_word(rng, fs.N, 3);
        const LaurentPoly g = apply_word_star(fs, a, f);
        for (double t : {0.0, 0.21, 0.5, 0.77}) {
            CHECK(std::abs(eval(g, t) - oracle::adjoint_word_at(m, fs.N, a.digits(), oracle::coeffs(f), t)) < 1e-11);
        }
    }
}

TEST_CASE("Cuntz relations on basis vectors") {
    for (const auto& fs : systems()) {
        for (Degree n = -20; n <= 20; ++n) {
            const LaurentPoly e = basis(n);
            LaurentPoly sum;
            for (int i = 0; i < fs.N; ++i) {
                for (int j = 0; j < fs.N; ++j) {
                    const LaurentPoly v = apply_S_star(fs, i, apply_S(fs, j, e));
                    CHECK(distance(v, i == j ? e : LaurentPoly{}) < 1e-12);
                }
                sum += apply_S(fs, i, apply_S_star(fs, i, e));
            }
            CHECK(distance(sum, e) < 1e-12);
        }
    }
}

TEST_CASE("m_a is S_a e_0 and matches the oracle product") {
    std::mt19937_64 rng(9);
    for (const auto& fs : systems()) {
        for (int len = 0; len <= 4; ++len) {
            const Word a = random_word(rng, fs.N, len);
            const LaurentPoly ma = m_word(fs, a);
            CHECK(distance(ma, apply_word(fs, a, basis(0))) < 1e-12);
            const auto ref = oracle::word_filter(filters_of(fs), fs.N, a.digits());
            for (const auto& [k, c] : ref) CHECK(std::abs(ma.coeff(k) - c) < 1e-12);
        }
    }
}

TEST_CASE("word order: S_a = S_{a1} S_{a2}") {
    const FilterSystem fs = daubechies4();
    const LaurentPoly f = basis(1) + basis(-2) * Complex(0.5);
    const Word a(2, {1, 0});
    CHECK(distance(apply_word(fs, a, f), apply_S(fs, 1, apply_S(fs, 0, f))) < 1e-14);
    CHECK(distance(apply_word_star(fs, a, f), apply_S_star(fs, 0, apply_S_star(fs, 1, f))) < 1e-14);
}

TEST_CASE("projections are idempotent, self-adjoint and sum to the identity") {
    std::mt19937_64 rng(10);
    const FilterSystem fs = cantor3();
    const LaurentPoly f = oracle::random_poly(rng, 6);
    const LaurentPoly g = oracle::random_poly(rng, 6);
    LaurentPoly total;
    for (const auto& a : Word::all(3, 2)) {
        const LaurentPoly pf = projection(fs, a, f);
        CHECK(distance(projection(fs, a, pf), pf) < 1e-12);
        CHECK(std::abs(inner(pf, g) - inner(f, projection(fs, a, g))) < 1e-12);
        total += pf;
    }
    CHECK(distance(total, f) < 1e-12);
}

TEST_CASE("monomials and the endomorphism alpha") {
    const FilterSystem fs = haar();
    const LaurentPoly f = basis(0) * Complex(0.6) + basis(3) * Complex(0.0, 0.8);
    const Monomial m{Word(2, {1}), Word(2, {0, 1}), Complex(2.0, -1.0)};
    const LaurentPoly direct = apply_word(fs, m.left, apply_word_star(fs, m.right, f)) * m.scalar;
    CHECK(distance(monomial_apply(fs, m, f), direct) < 1e-14);

    const auto terms = alpha_on_monomial(fs, m);
    REQUIRE(terms.size() == 2);
    LaurentPoly ref;
    for (int i = 0; i < 2; ++i) ref += apply_S(fs, i, monomial_apply(fs, m, apply_S_star(fs, i, f)));
    CHECK(distance(apply_monomials(fs, terms, f), ref) < 1e-14);
    CHECK(distance(monomial_apply(fs, Monomial::identity(2), f), f) == 0.0);
}

TEST_CASE("errors") {
    const FilterSystem fs = haar();
    CHECK_THROWS_AS(apply_S(fs, 2, basis(0)), std::invalid_argument);
    CHECK_THROWS_AS(apply_S_star(fs, -1, basis(0)), std::invalid_argument);
    CHECK_THROWS_AS(apply_word(fs, Word(3, {2}), basis(0)), std::invalid_argument);
    CHECK_THROWS_AS(require_word_for(fs, Word(3, {0})), std::invalid_argument);
}

}
