#include "whg/radical.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace whg {

Int factorial(int n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    Int result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rational& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

namespace {

// m = s^2 * f with f square-free. Trial division up to cbrt(m); whatever
// remains has at most two prime factors, so one integer-sqrt test settles it.
void squarefree_split(Int m, Int& square_root_part, Int& squarefree_part) {
    square_root_part = 1;
    squarefree_part = 1;
    for (Int d = 2; d * d * d <= m; ++d) {
        if (m % d != 0) continue;
        int exponent = 0;
        while (m % d == 0) {
            m /= d;
            ++exponent;
        }
        for (int i = 0; i < exponent / 2; ++i) square_root_part *= d;
        if (exponent % 2 != 0) squarefree_part *= d;
    }
    const Int root = boost::multiprecision::sqrt(m);
    if (root * root == m) {
        square_root_part *= root;
    } else {
        squarefree_part *= m;
    }
}

}  // namespace

Radical::Radical(int value) : Radical(Rational(value)) {}

Radical::Radical(const Rational& value) {
    if (value != 0) terms_.emplace(Int(1), value);
}

Radical Radical::sqrt_int(const Rational& coefficient, const Int& radicand) {
    if (radicand < 0) throw std::domain_error("negative radicand");
    Radical result;
    if (coefficient == 0 || radicand == 0) return result;
    Int square_root_part;
    Int squarefree_part;
    squarefree_split(radicand, square_root_part, squarefree_part);
    result.terms_.emplace(squarefree_part, coefficient * square_root_part);
    return result;
}

Radical Radical::sqrt_rational(const Rational& value) {
    if (value < 0) throw std::domain_error("negative radicand");
    const Int num = boost::multiprecision::numerator(value);
    const Int den = boost::multiprecision::denominator(value);
    return sqrt_int(Rational(1, den), num * den);
}

bool Radical::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational Radical::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::logic_error("irrational Radical value");
    return terms_.begin()->second;
}

void Radical::add_term(const Int& radicand, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(radicand, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Radical Radical::operator-() const {
    Radical result;
    for (const auto& [m, q] : terms_) result.terms_.emplace(m, -q);
    return result;
}

Radical& Radical::operator+=(const Radical& other) {
    for (const auto& [m, q] : other.terms_) add_term(m, q);
    return *this;
}

Radical& Radical::operator-=(const Radical& other) {
    for (const auto& [m, q] : other.terms_) add_term(m, -q);
    return *this;
}

Radical operator*(const Radical& a, const Radical& b) {
    Radical result;
    for (const auto& [ma, qa] : a.terms_) {
        for (const auto& [mb, qb] : b.terms_) {
            // sqrt(ma)*sqrt(mb) = g*sqrt((ma/g)*(mb/g)) with g = gcd; the
            // cofactors of square-free numbers are coprime, so the product
            // radicand is already square-free.
            const Int g = boost::multiprecision::gcd(ma, mb);
            result.add_term((ma / g) * (mb / g), qa * qb * g);
        }
    }
    return result;
}

Radical& Radical::operator*=(const Radical& other) {
    *this = *this * other;
    return *this;
}

Rational Radical::abs_squared_single_term() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1) throw std::logic_error("multi-term Radical magnitude");
    const auto& [m, q] = *terms_.begin();
    return q * q * Rational(m);
}

Radical Radical::inverse_single_term() const {
    if (terms_.size() != 1) throw std::logic_error("inverse of non-single-term Radical");
    const auto& [m, q] = *terms_.begin();
    Radical result;
    result.terms_.emplace(m, Rational(1) / (q * Rational(m)));
    return result;
}

double Radical::approx() const {
    double value = 0.0;
    for (const auto& [m, q] : terms_) {
        value += static_cast<double>(q) * std::sqrt(static_cast<double>(m));
    }
    return value;
}

std::string Radical::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, q] : terms_) {
        if (!out.empty()) out += " + ";
        if (m == 1) {
            out += to_string(q);
        } else if (q == 1) {
            out += "sqrt(" + m.str() + ")";
        } else if (q == -1) {
            out += "-sqrt(" + m.str() + ")";
        } else {
            out += to_string(q) + "*sqrt(" + m.str() + ")";
        }
    }
    return out;
}

}  // namespace whg
