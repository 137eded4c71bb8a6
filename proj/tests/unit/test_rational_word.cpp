#include <doctest.h>

#include "qmf/rational.hpp"
#include "qmf/word.hpp"

using namespace qmf;

TEST_SUITE("rational") {

TEST_CASE("reduced form and arithmetic") {
    const Rational a(6, -8);
    CHECK(a.num() == -3);
    CHECK(a.den() == 4);
    CHECK(a + Rational(3, 4) == Rational(0));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(a.to_string() == "-3/4");
    CHECK(a.to_double() == -0.75);
}

TEST_CASE("floor rounds toward minus infinity") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-4, 2).floor() == -2);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(ipow(10, 40), std::overflow_error);
    CHECK_THROWS_AS(parse_rational("1/x"), std::invalid_argument);
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(parse_rational("5") == Rational(5));
}

}

TEST_SUITE("word") {

TEST_CASE("index puts a_1 first and matches interval order") {
    const Word a(3, {2, 0, 1});
    CHECK(a.index() == 2 * 9 + 0 * 3 + 1);
    CHECK(Word::from_index(3, 3, a.index()) == a);
    const auto all = Word::all(2, 3);
    REQUIRE(all.size() == 8);
    for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].index() == i);
    CHECK(all[1] == Word(2, {0, 0, 1}));
}

TEST_CASE("concat, prefix, drop_front, reversed") {
    const Word a(2, {1, 0});
    const Word b(2, {1});
    CHECK(a.concat(b) == Word(2, {1, 0, 1}));
    CHECK(a.prepend(0) == Word(2, {0, 1, 0}));
    CHECK(a.append(1) == Word(2, {1, 0, 1}));
    CHECK(a.reversed() == Word(2, {0, 1}));
    CHECK(a.prefix(1) == b);
    CHECK(a.drop_front() == Word(2, {0}));
    CHECK(Word::empty(2).concat(a) == a);
    CHECK_THROWS_AS(a.concat(Word(3, {2})), std::invalid_argument);
    CHECK_THROWS_AS(a.prefix(3), std::out_of_range);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(Word(2, {2}), std::invalid_argument);
    CHECK_THROWS_AS(Word(1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Word::from_index(2, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(checked_power(2, 64), std::overflow_error);
    CHECK(checked_power(3, 4) == 81);
}

TEST_CASE("to_string uses commas only for large alphabets") {
    CHECK(Word(3, {0, 2}).to_string() == "02");
    CHECK(Word(12, {11, 3}).to_string() == "11,3");
}

}
