#pragma once

#include "whg/check_report.hpp"
#include "whg/fock.hpp"
#include "whg/radical.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace whg::bargmann {

// Analytic realization of the algebra: r formal generators eta_1..eta_r in
// a commutative algebra truncated at total degree k (every monomial of
// total degree k+1 is identically zero). Creation acts as multiplication
// by eta_i, annihilation as the monomial derivative below.

struct TruncatedMonomial {
    std::vector<int> exponents;

    int total() const;
    auto operator<=>(const TruncatedMonomial&) const = default;
    std::string str() const;  // "(l1,...,lr)"
};

class BargmannFunction {
public:
    BargmannFunction(int rank, int level);
    static BargmannFunction one(int rank, int level);

    int rank() const { return rank_; }
    int level() const { return level_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TruncatedMonomial, Radical>& terms() const { return terms_; }

    // Terms beyond total degree k are dropped (the truncation is the
    // nilpotency of the generators).
    void add_term(const TruncatedMonomial& m, const Radical& value);

    BargmannFunction& operator+=(const BargmannFunction& other);
    BargmannFunction& operator-=(const BargmannFunction& other);
    friend BargmannFunction operator+(BargmannFunction a, const BargmannFunction& b) {
        return a += b;
    }
    friend BargmannFunction operator-(BargmannFunction a, const BargmannFunction& b) {
        return a -= b;
    }
    BargmannFunction scaled(const Radical& factor) const;
    bool operator==(const BargmannFunction&) const = default;

    // "(l1,...,lr) coefficient" lines.
    std::string dump() const;

private:
    int rank_;
    int level_;
    std::map<TruncatedMonomial, Radical> terms_;
};

// f_n = sqrt((k - sum n)!/(k! prod n_i!)) * prod eta_i^{n_i}; f_0 = 1.
BargmannFunction basis_function(const fock::MultiIndex& n, int level);

// Multiplication by eta_i: exponent shift with truncation.
BargmannFunction multiply_by_eta(int mode, const BargmannFunction& f);

// Monomial rule l_i * (k + 1 - sum l) with exponent l_i - 1; the unique
// rule with eta_partial(f_n) = sqrt(n_i (k+1-sum n)) f_{n-e_i}.
BargmannFunction eta_partial(int mode, const BargmannFunction& f);

// Intertwining of |n> -> f_n with the matrix representation, plus the
// rank-1 cross-check against the concrete theta realization of eta.
CheckReport verify_bargmann(int rank, int level);

}  // namespace whg::bargmann
