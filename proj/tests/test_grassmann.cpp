#include "whg/grassmann.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using whg::Int;
using whg::Radical;
using whg::Rational;
namespace gr = whg::grassmann;
using Elem = gr::GrassmannElement;

namespace {

Elem theta(int k, int i) { return Elem::theta(k, i); }

Radical sqrt_int(const Int& m) { return Radical::sqrt_int(1, m); }

// n-fold distinct partial derivative operator g_n applied by brute force:
// sum over n-subsets of sequential single-variable removals.
Elem apply_gn(const Elem& x, int n) {
    const int k = x.order();
    Elem result(k);
    const std::uint32_t limit = 1u << k;
    for (std::uint32_t subset = 0; subset < limit; ++subset) {
        if (__builtin_popcount(subset) != n) continue;
        for (const auto& [m, c] : x.terms()) {
            if ((m.theta & subset) != subset) continue;  // some removal annihilates
            result.add_term(gr::Monomial{m.theta & ~subset, m.theta_bar}, c);
        }
    }
    return result;
}

Elem random_element(std::mt19937& rng, int k) {
    std::uniform_int_distribution<int> mask(0, (1 << k) - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> radicand(1, 10);
    std::uniform_int_distribution<int> terms(0, 4);
    Elem e(k);
    const int count = terms(rng);
    for (int i = 0; i < count; ++i) {
        e.add_term(gr::Monomial{static_cast<std::uint32_t>(mask(rng)),
                                static_cast<std::uint32_t>(mask(rng))},
                   Radical::sqrt_int(coeff(rng), radicand(rng)));
    }
    return e;
}

}  // namespace

TEST_CASE("nilpotency and commutativity of the generators") {
    const int k = 2;
    CHECK(gr::g_mul(theta(k, 1), theta(k, 1)).is_zero());
    CHECK(gr::g_mul(theta(k, 1), theta(k, 2)) == gr::g_mul(theta(k, 2), theta(k, 1)));
    const Elem sum = theta(k, 1) + theta(k, 2);
    CHECK(gr::g_mul(sum, sum) == gr::g_mul(theta(k, 1), theta(k, 2)).scaled(Radical(2)));
}

TEST_CASE("order mismatch is rejected") {
    CHECK_THROWS_AS(gr::g_mul(gr::eta(2), gr::eta(3)), std::invalid_argument);
    CHECK_THROWS_AS(gr::eta(0), std::invalid_argument);
}

TEST_CASE("eta basics") {
    CHECK(gr::eta(1) == theta(1, 1));
    CHECK(gr::g_pow(gr::eta(2), 2) ==
          gr::g_mul(theta(2, 1), theta(2, 2)).scaled(Radical(2)));
    for (int k = 1; k <= 8; ++k) {
        CHECK(gr::g_pow(gr::eta(k), k + 1).is_zero());
        CHECK_FALSE(gr::g_pow(gr::eta(k), k).is_zero());
    }
}

TEST_CASE("symmetric polynomials") {
    const Elem expected = gr::g_mul(theta(3, 1), theta(3, 2)) +
                          gr::g_mul(theta(3, 1), theta(3, 3)) +
                          gr::g_mul(theta(3, 2), theta(3, 3));
    CHECK(gr::sym_poly(3, 2) == expected);
    CHECK(gr::sym_poly(5, 0) == Elem::constant(5, Radical(1)));
    CHECK_THROWS_AS(gr::sym_poly(3, 4), std::invalid_argument);

    // eta^n = n! e_n
    for (int k = 1; k <= 8; ++k) {
        for (int n = 0; n <= k; ++n) {
            CHECK(gr::g_pow(gr::eta(k), n) ==
                  gr::sym_poly(k, n).scaled(Radical(Rational(whg::factorial(n)))));
        }
    }
}

TEST_CASE("eta derivative by single removals") {
    const Elem product = gr::g_mul(theta(2, 1), theta(2, 2));
    CHECK(gr::eta_derivative(product) == theta(2, 1) + theta(2, 2));

    // The superset-counting factor behind the closed form: a fixed
    // (n-1)-subset extends to k-n+1 different n-subsets.
    for (int k = 2; k <= 6; ++k) {
        for (int n = 1; n <= k; ++n) {
            int extensions = 0;
            const std::uint32_t fixed = (1u << (n - 1)) - 1;  // {1..n-1}
            for (std::uint32_t s = 0; s < (1u << k); ++s) {
                if (__builtin_popcount(s) == n && (s & fixed) == fixed) ++extensions;
            }
            CHECK(extensions == k - n + 1);
        }
    }

    // d e_n / d eta = (k - n + 1) e_{n-1}; the paper's printed factor
    // (k - n) is inconsistent with its own D_n ladder.
    for (int k = 1; k <= 8; ++k) {
        for (int n = 1; n <= k; ++n) {
            CHECK(gr::eta_derivative(gr::sym_poly(k, n)) ==
                  gr::sym_poly(k, n - 1).scaled(Radical(k - n + 1)));
        }
    }
}

TEST_CASE("derivative nilpotency") {
    for (int k = 1; k <= 8; ++k) {
        Elem generic(k);
        for (int n = 0; n <= k; ++n) generic += gr::sym_poly(k, n);
        Elem value = generic;
        for (int step = 0; step <= k; ++step) value = gr::eta_derivative(value);
        CHECK(value.is_zero());
    }
}

TEST_CASE("derivative powers expand as n! g_n") {
    std::mt19937 rng(77);
    for (int k = 1; k <= 6; ++k) {
        for (int trial = 0; trial < 6; ++trial) {
            const Elem x = random_element(rng, k);
            Elem repeated = x;
            for (int n = 1; n <= k; ++n) {
                repeated = gr::eta_derivative(repeated);
                CHECK(repeated ==
                      apply_gn(x, n).scaled(Radical(Rational(whg::factorial(n)))));
            }
        }
    }
}

TEST_CASE("berezin integrals of eta powers") {
    for (int k = 1; k <= 8; ++k) {
        for (int n = 0; n < k; ++n) {
            CHECK(gr::berezin(gr::g_pow(gr::eta(k), n), gr::Side::theta).is_zero());
            CHECK(gr::berezin(gr::g_pow(gr::eta_bar(k), n), gr::Side::theta_bar).is_zero());
        }
        const Radical expected = Radical(Rational(whg::factorial(k)));
        CHECK(gr::berezin(gr::g_pow(gr::eta(k), k), gr::Side::theta).constant_term() ==
              expected);
        CHECK(gr::berezin(gr::g_pow(gr::eta_bar(k), k), gr::Side::theta_bar).constant_term() ==
              expected);
    }
}

TEST_CASE("dicke polynomial ladder") {
    CHECK(gr::dicke_poly(4, 0) == Elem::constant(4, Radical(1)));
    for (int k = 1; k <= 6; ++k) {
        const Elem h = gr::eta(k);
        for (int n = 0; n < k; ++n) {
            CHECK(gr::g_mul(h, gr::dicke_poly(k, n)) ==
                  gr::dicke_poly(k, n + 1).scaled(sqrt_int(Int(n + 1) * Int(k - n))));
        }
        for (int n = 1; n <= k; ++n) {
            CHECK(gr::eta_derivative(gr::dicke_poly(k, n)) ==
                  gr::dicke_poly(k, n - 1).scaled(sqrt_int(Int(n) * Int(k + 1 - n))));
        }
    }
}

TEST_CASE("sigma measure") {
    const Elem expected = Elem::constant(1, Radical(1)) +
                          gr::g_mul(theta(1, 1), Elem::theta_bar(1, 1));
    CHECK(gr::sigma_measure(1) == expected);

    for (int k = 1; k <= 6; ++k) {
        const Elem sigma = gr::sigma_measure(k);
        const Elem h = gr::eta(k);
        const Elem hb = gr::eta_bar(k);
        for (int n = 0; n <= k; ++n) {
            const auto integrand = gr::g_mul(sigma, gr::g_mul(gr::g_pow(h, n), gr::g_pow(hb, n)));
            const Radical moment =
                gr::berezin(gr::berezin(integrand, gr::Side::theta), gr::Side::theta_bar)
                    .constant_term();
            CHECK(moment == Radical(Rational(whg::factorial(k), whg::factorial(k - n))));
        }
    }

    // Mixed moments vanish: only total theta degree k survives both
    // integrals, which forces equal powers.
    for (int k = 1; k <= 5; ++k) {
        const Elem sigma = gr::sigma_measure(k);
        const Elem h = gr::eta(k);
        const Elem hb = gr::eta_bar(k);
        for (int n = 0; n <= k; ++n) {
            for (int m = 0; m <= k; ++m) {
                if (n == m) continue;
                const auto integrand =
                    gr::g_mul(sigma, gr::g_mul(gr::g_pow(h, n), gr::g_pow(hb, m)));
                CHECK(gr::berezin(gr::berezin(integrand, gr::Side::theta), gr::Side::theta_bar)
                          .is_zero());
            }
        }
    }
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(20240818);
    for (int k = 1; k <= 6; ++k) {
        for (int trial = 0; trial < 8; ++trial) {
            const Elem a = random_element(rng, k);
            const Elem b = random_element(rng, k);
            const Elem c = random_element(rng, k);
            CHECK(a + b == b + a);
            CHECK(gr::g_mul(a, b) == gr::g_mul(b, a));
            CHECK(gr::g_mul(gr::g_mul(a, b), c) == gr::g_mul(a, gr::g_mul(b, c)));
            CHECK(gr::g_mul(a, b + c) == gr::g_mul(a, b) + gr::g_mul(a, c));
        }
    }
}

TEST_CASE("monomial rendering") {
    CHECK(gr::monomial_str(gr::Monomial{}) == "1");
    CHECK(gr::monomial_str(gr::Monomial{0b101u, 0b010u}) == "t{1,3}tb{2}");
    CHECK(gr::monomial_str(gr::Monomial{0u, 0b10u}) == "tb{2}");
}
