#pragma once

#include "whg/rational.hpp"

#include <map>
#include <string>

namespace whg {

// Element of the ring of rational combinations of square roots of
// square-free nonnegative integers: sum_m q_m * sqrt(m). Terms are keyed
// by the square-free radicand m; the key 1 holds the rational part and an
// empty term map is zero. Keeping radicands square-free at construction
// makes equality a plain map comparison.
class Radical {
public:
    Radical() = default;
    Radical(int value);  // NOLINT(google-explicit-constructor)
    Radical(const Rational& value);  // NOLINT(google-explicit-constructor)

    // coefficient * sqrt(radicand) with the square part of the radicand
    // pulled into the coefficient. Throws std::domain_error for a negative
    // radicand: every matrix element in scope is real.
    static Radical sqrt_int(const Rational& coefficient, const Int& radicand);

    // sqrt(p/d) = sqrt(p*d)/d for p/d >= 0.
    static Radical sqrt_rational(const Rational& value);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    // The value as a Rational; throws std::logic_error if irrational.
    Rational rational_value() const;

    // Square-free radicand -> nonzero rational coefficient.
    const std::map<Int, Rational>& terms() const { return terms_; }

    Radical operator-() const;
    Radical& operator+=(const Radical& other);
    Radical& operator-=(const Radical& other);
    Radical& operator*=(const Radical& other);

    friend Radical operator+(Radical a, const Radical& b) { return a += b; }
    friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
    friend Radical operator*(const Radical& a, const Radical& b);

    bool operator==(const Radical& other) const = default;

    // |value|^2 as a Rational; defined for values with at most one term.
    Rational abs_squared_single_term() const;

    // 1/(q*sqrt(m)) = sqrt(m)/(q*m); defined for single-term values.
    Radical inverse_single_term() const;

    // Floating approximation, used only to pick report witnesses.
    double approx() const;

    // "q*sqrt(m)" terms joined by " + "; unit coefficients render as
    // "sqrt(m)", the rational part as "p/q", zero as "0".
    std::string str() const;

private:
    void add_term(const Int& radicand, const Rational& coefficient);

    std::map<Int, Rational> terms_;
};

}  // namespace whg
