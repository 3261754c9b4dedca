#include "whg/grassmann.hpp"

namespace whg::grassmann {

std::string monomial_str(const Monomial& m) {
    if (m.theta == 0 && m.theta_bar == 0) return "1";
    auto index_list = [](std::uint32_t bits) {
        std::string out;
        for (int i = 0; bits != 0; ++i, bits >>= 1) {
            if (bits & 1u) {
                if (!out.empty()) out += ",";
                out += std::to_string(i + 1);
            }
        }
        return out;
    };
    std::string out;
    if (m.theta != 0) out += "t{" + index_list(m.theta) + "}";
    if (m.theta_bar != 0) out += "tb{" + index_list(m.theta_bar) + "}";
    return out;
}

GrassmannElement eta(int k) {
    check_order(k);
    GrassmannElement e(k);
    for (int i = 1; i <= k; ++i) e += GrassmannElement::theta(k, i);
    return e;
}

GrassmannElement eta_bar(int k) {
    check_order(k);
    GrassmannElement e(k);
    for (int i = 1; i <= k; ++i) e += GrassmannElement::theta_bar(k, i);
    return e;
}

namespace {

GrassmannElement subset_sum(int k, int n, bool conjugate) {
    check_order(k);
    if (n < 0 || n > k) throw std::invalid_argument("symmetric polynomial degree out of range");
    GrassmannElement e(k);
    const std::uint32_t limit = 1u << k;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (__builtin_popcount(mask) != n) continue;
        e.add_term(conjugate ? Monomial{0u, mask} : Monomial{mask, 0u}, Radical(1));
    }
    return e;
}

}  // namespace

GrassmannElement sym_poly(int k, int n) { return subset_sum(k, n, false); }

GrassmannElement sym_poly_bar(int k, int n) { return subset_sum(k, n, true); }

GrassmannElement dicke_poly(int k, int n) {
    const Radical coeff = Radical::sqrt_rational(
        Rational(factorial(n) * factorial(k - n), factorial(k)));
    return sym_poly(k, n).scaled(coeff);
}

GrassmannElement sigma_measure(int k) {
    check_order(k);
    GrassmannElement sigma(k);
    const GrassmannElement h = eta(k);
    const GrassmannElement hb = eta_bar(k);
    for (int n = 0; n <= k; ++n) {
        const Rational coeff(1, factorial(k) * factorial(k - n));
        sigma += g_mul(g_pow(h, k - n), g_pow(hb, k - n)).scaled(Radical(coeff));
    }
    return sigma;
}

}  // namespace whg::grassmann
