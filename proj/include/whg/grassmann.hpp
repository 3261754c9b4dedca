#pragma once

#include "whg/radical.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace whg::grassmann {

// The algebra of k commuting nilpotent variables theta_i (theta_i^2 = 0)
// together with their conjugates theta_bar_i. Monomials are a pair of
// bitsets over the k slots; products drop any term whose index sets
// intersect. Elements are parameterized over the coefficient ring, which
// must provide +, *, unary -, exact ==, and is_zero().

inline constexpr int kMaxOrder = 16;

struct Monomial {
    std::uint32_t theta = 0;
    std::uint32_t theta_bar = 0;

    auto operator<=>(const Monomial&) const = default;

    int degree() const { return __builtin_popcount(theta); }
    int conjugate_degree() const { return __builtin_popcount(theta_bar); }
};

// "t{1,3}tb{2}" style, "1" for the empty monomial. Indices are 1-based.
std::string monomial_str(const Monomial& m);

inline void check_order(int order) {
    if (order < 1 || order > kMaxOrder) {
        throw std::invalid_argument("Grassmann order out of range");
    }
}

template <class Coeff>
class Element {
public:
    explicit Element(int order) : order_(order) { check_order(order); }

    static Element constant(int order, const Coeff& value) {
        Element e(order);
        e.add_term(Monomial{}, value);
        return e;
    }
    static Element theta(int order, int i) {
        Element e(order);
        e.add_term(Monomial{slot(order, i), 0u}, Coeff(1));
        return e;
    }
    static Element theta_bar(int order, int i) {
        Element e(order);
        e.add_term(Monomial{0u, slot(order, i)}, Coeff(1));
        return e;
    }

    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Coeff>& terms() const { return terms_; }

    Coeff coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff(0) : it->second;
    }
    Coeff constant_term() const { return coefficient(Monomial{}); }

    void add_term(const Monomial& m, const Coeff& value) {
        if (value.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, value);
        } else {
            it->second += value;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element& operator+=(const Element& other) {
        require_same_order(other);
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }
    Element& operator-=(const Element& other) {
        require_same_order(other);
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    Element scaled(const Coeff& factor) const {
        Element result(order_);
        for (const auto& [m, c] : terms_) result.add_term(m, c * factor);
        return result;
    }

    bool operator==(const Element&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.str() + ")*" + monomial_str(m);
        }
        return out;
    }

private:
    static std::uint32_t slot(int order, int i) {
        if (i < 1 || i > order) throw std::invalid_argument("variable index out of range");
        return 1u << (i - 1);
    }
    void require_same_order(const Element& other) const {
        if (order_ != other.order_) throw std::invalid_argument("Grassmann order mismatch");
    }

    int order_;
    std::map<Monomial, Coeff> terms_;
};

// Commutative product with theta_i^2 = 0 and theta_bar_i^2 = 0: a term is
// dropped as soon as the index sets of the factors intersect. Terms are
// snapshotted into flat arrays first; the pair loop dominates for dense
// elements like the sigma measure.
template <class Coeff>
Element<Coeff> g_mul(const Element<Coeff>& a, const Element<Coeff>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("Grassmann order mismatch");
    struct Flat {
        Monomial m;
        const Coeff* c;
    };
    std::vector<Flat> left;
    left.reserve(a.terms().size());
    for (const auto& [m, c] : a.terms()) left.push_back({m, &c});
    std::vector<Flat> right;
    right.reserve(b.terms().size());
    for (const auto& [m, c] : b.terms()) right.push_back({m, &c});

    Element<Coeff> result(a.order());
    for (const Flat& ta : left) {
        for (const Flat& tb : right) {
            if ((ta.m.theta & tb.m.theta) != 0 || (ta.m.theta_bar & tb.m.theta_bar) != 0) {
                continue;
            }
            result.add_term(Monomial{ta.m.theta | tb.m.theta, ta.m.theta_bar | tb.m.theta_bar},
                            *ta.c * *tb.c);
        }
    }
    return result;
}

template <class Coeff>
Element<Coeff> g_pow(const Element<Coeff>& a, int n) {
    Element<Coeff> result = Element<Coeff>::constant(a.order(), Coeff(1));
    for (int i = 0; i < n; ++i) result = g_mul(result, a);
    return result;
}

// d/d eta = sum_i d/d theta_i: each single-variable derivative removes
// theta_i when present and annihilates the term otherwise. Commuting
// variables, so there is no sign.
template <class Coeff>
Element<Coeff> eta_derivative(const Element<Coeff>& x) {
    Element<Coeff> result(x.order());
    for (const auto& [m, c] : x.terms()) {
        for (int i = 0; i < x.order(); ++i) {
            const std::uint32_t bit = 1u << i;
            if (m.theta & bit) {
                result.add_term(Monomial{m.theta & ~bit, m.theta_bar}, c);
            }
        }
    }
    return result;
}

enum class Side { theta, theta_bar };

// Berezin integral against d eta = d theta_1 ... d theta_k: keeps only the
// terms carrying the full index set on the chosen side and clears that set.
template <class Coeff>
Element<Coeff> berezin(const Element<Coeff>& x, Side side) {
    const std::uint32_t full = (x.order() == 32) ? ~0u : ((1u << x.order()) - 1u);
    Element<Coeff> result(x.order());
    for (const auto& [m, c] : x.terms()) {
        if (side == Side::theta) {
            if (m.theta == full) result.add_term(Monomial{0u, m.theta_bar}, c);
        } else {
            if (m.theta_bar == full) result.add_term(Monomial{m.theta, 0u}, c);
        }
    }
    return result;
}

using GrassmannElement = Element<Radical>;

// eta = sum_i theta_i and its conjugate.
GrassmannElement eta(int k);
GrassmannElement eta_bar(int k);

// Elementary symmetric polynomial e_n over theta (resp. theta_bar):
// the sum of all n-subsets; e_0 = 1.
GrassmannElement sym_poly(int k, int n);
GrassmannElement sym_poly_bar(int k, int n);

// Grassmann analogue of the Dicke state: D_n = sqrt(n!(k-n)!/k!) e_n.
GrassmannElement dicke_poly(int k, int n);

// sigma(eta, eta_bar) = sum_{n=0}^{k} eta^{k-n} eta_bar^{k-n} / (k!(k-n)!),
// expanded in the monomial basis.
GrassmannElement sigma_measure(int k);

}  // namespace whg::grassmann
