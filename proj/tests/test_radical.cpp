#include "whg/radical.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using whg::Int;
using whg::Radical;
using whg::Rational;

namespace {

// Independent oracle: pull the largest square divisor out of m by brute
// force over all candidate roots.
std::pair<Int, Int> squarefree_oracle(const Int& m) {
    Int best_root = 1;
    for (Int d = 1; d * d <= m; ++d) {
        if (m % (d * d) == 0) best_root = d;
    }
    return {best_root, m / (best_root * best_root)};
}

Radical random_radical(std::mt19937& rng) {
    std::uniform_int_distribution<int> radicand(0, 30);
    std::uniform_int_distribution<int> numerator(-4, 4);
    std::uniform_int_distribution<int> denominator(1, 3);
    std::uniform_int_distribution<int> terms(0, 3);
    Radical value;
    const int count = terms(rng);
    for (int i = 0; i < count; ++i) {
        value += Radical::sqrt_int(Rational(numerator(rng), denominator(rng)), radicand(rng));
    }
    return value;
}

}  // namespace

TEST_CASE("factorial and binomial") {
    CHECK(whg::factorial(0) == 1);
    CHECK(whg::factorial(5) == 120);
    CHECK(whg::binomial(10, 4) == 210);
    CHECK(whg::binomial(4, 10) == 0);
    CHECK(whg::factorial(20) == Int("2432902008176640000"));
}

TEST_CASE("normalization pulls out square factors") {
    // (1, 8) -> 2 sqrt(2), checked against the factorization oracle.
    const auto [root, rest] = squarefree_oracle(8);
    CHECK(root == 2);
    CHECK(rest == 2);
    const Radical r = Radical::sqrt_int(1, 8);
    CHECK(r == Radical::sqrt_int(2, 2));
    CHECK(r.str() == "2*sqrt(2)");

    CHECK(Radical::sqrt_int(1, 1) == Radical(1));
    CHECK(Radical::sqrt_int(3, 0) == Radical());
    CHECK(Radical::sqrt_int(3, 0).str() == "0");

    for (int m = 2; m <= 500; ++m) {
        const auto [s, f] = squarefree_oracle(m);
        const Radical value = Radical::sqrt_int(1, m);
        REQUIRE(value.terms().size() == 1);
        CHECK(value.terms().begin()->first == f);
        CHECK(value.terms().begin()->second == s);
    }
}

TEST_CASE("normalization rejects negative radicands") {
    CHECK_THROWS_AS(Radical::sqrt_int(1, -2), std::domain_error);
    CHECK_THROWS_AS(Radical::sqrt_rational(Rational(-1, 2)), std::domain_error);
}

TEST_CASE("normalization is idempotent on its own outputs") {
    for (int m = 0; m <= 200; ++m) {
        const Radical once = Radical::sqrt_int(1, m);
        if (once.is_zero()) continue;
        const auto& [radicand, coeff] = *once.terms().begin();
        CHECK(Radical::sqrt_int(coeff, radicand) == once);
    }
}

TEST_CASE("addition with cancellation") {
    const Radical sqrt2 = Radical::sqrt_int(1, 2);
    CHECK(sqrt2 + sqrt2 == Radical::sqrt_int(2, 2));
    CHECK((sqrt2 + (-sqrt2)).is_zero());
    const Radical sqrt3 = Radical::sqrt_int(1, 3);
    CHECK(Radical(1) + sqrt3 + Radical(2) - sqrt3 == Radical(3));
    // sqrt(8) and 2 sqrt(2) normalize to the identical representation.
    CHECK((Radical::sqrt_int(1, 8) - Radical::sqrt_int(2, 2)).is_zero());
}

TEST_CASE("multiplication combines radicands") {
    const Radical sqrt2 = Radical::sqrt_int(1, 2);
    const Radical sqrt3 = Radical::sqrt_int(1, 3);
    CHECK(sqrt2 * sqrt2 == Radical(2));
    CHECK(sqrt2 * sqrt3 == Radical::sqrt_int(1, 6));
    const Radical sum = sqrt2 + sqrt3;
    CHECK(sum * sum == Radical(5) + Radical::sqrt_int(2, 6));
}

TEST_CASE("sqrt(a)*sqrt(a) == a for a <= 10^4") {
    for (int a = 0; a <= 10000; ++a) {
        const Radical root = Radical::sqrt_int(1, a);
        CHECK(root * root == Radical(a));
    }
}

TEST_CASE("ring axioms on random values") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 300; ++trial) {
        const Radical a = random_radical(rng);
        const Radical b = random_radical(rng);
        const Radical c = random_radical(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("rational rendering") {
    CHECK(Radical(Rational(1, 2)).str() == "1/2");
    CHECK(Radical(Rational(-3, 4)).str() == "-3/4");
    CHECK(Radical(7).str() == "7");
    CHECK(Radical::sqrt_int(Rational(3, 2), 5).str() == "3/2*sqrt(5)");
    CHECK(Radical::sqrt_int(-1, 2).str() == "-sqrt(2)");
    CHECK((Radical(1) + Radical::sqrt_int(1, 2)).str() == "1 + sqrt(2)");
}

TEST_CASE("sqrt of a rational") {
    CHECK(Radical::sqrt_rational(Rational(1, 2)) == Radical::sqrt_int(Rational(1, 2), 2));
    CHECK(Radical::sqrt_rational(Rational(9, 4)) == Radical(Rational(3, 2)));
    const Radical v = Radical::sqrt_rational(Rational(3, 8));
    CHECK(v * v == Radical(Rational(3, 8)));
}

TEST_CASE("scalar helpers") {
    CHECK(Radical(Rational(2, 3)).rational_value() == Rational(2, 3));
    CHECK_THROWS_AS(Radical::sqrt_int(1, 2).rational_value(), std::logic_error);
    CHECK(Radical::sqrt_int(Rational(-1, 2), 3).abs_squared_single_term() == Rational(3, 4));
    const Radical x = Radical::sqrt_int(Rational(2, 5), 3);
    CHECK(x * x.inverse_single_term() == Radical(1));
}
