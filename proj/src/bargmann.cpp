#include "whg/bargmann.hpp"

#include "whg/grassmann.hpp"

#include <functional>
#include <stdexcept>

namespace whg::bargmann {

int TruncatedMonomial::total() const {
    int sum = 0;
    for (int v : exponents) sum += v;
    return sum;
}

std::string TruncatedMonomial::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(exponents[i]);
    }
    out += ")";
    return out;
}

BargmannFunction::BargmannFunction(int rank, int level) : rank_(rank), level_(level) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    if (level < 1) throw std::invalid_argument("level must be >= 1");
}

BargmannFunction BargmannFunction::one(int rank, int level) {
    BargmannFunction f(rank, level);
    f.add_term(TruncatedMonomial{std::vector<int>(rank, 0)}, Radical(1));
    return f;
}

void BargmannFunction::add_term(const TruncatedMonomial& m, const Radical& value) {
    if (static_cast<int>(m.exponents.size()) != rank_) {
        throw std::invalid_argument("monomial rank mismatch");
    }
    for (int v : m.exponents) {
        if (v < 0) throw std::invalid_argument("negative exponent");
    }
    if (m.total() > level_) return;  // truncated away
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BargmannFunction& BargmannFunction::operator+=(const BargmannFunction& other) {
    if (rank_ != other.rank_ || level_ != other.level_) {
        throw std::invalid_argument("rank/level mismatch");
    }
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

BargmannFunction& BargmannFunction::operator-=(const BargmannFunction& other) {
    if (rank_ != other.rank_ || level_ != other.level_) {
        throw std::invalid_argument("rank/level mismatch");
    }
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

BargmannFunction BargmannFunction::scaled(const Radical& factor) const {
    BargmannFunction result(rank_, level_);
    for (const auto& [m, c] : terms_) result.add_term(m, c * factor);
    return result;
}

std::string BargmannFunction::dump() const {
    std::string out;
    for (const auto& [m, c] : terms_) out += m.str() + " " + c.str() + "\n";
    return out;
}

BargmannFunction basis_function(const fock::MultiIndex& n, int level) {
    const int total = n.total();
    if (total > level) throw std::invalid_argument("total occupation above level");
    Int denominator = factorial(level);
    for (int v : n.n) denominator *= factorial(v);
    const Radical coeff =
        Radical::sqrt_rational(Rational(factorial(level - total), denominator));
    BargmannFunction f(n.rank(), level);
    f.add_term(TruncatedMonomial{n.n}, coeff);
    return f;
}

BargmannFunction multiply_by_eta(int mode, const BargmannFunction& f) {
    if (mode < 1 || mode > f.rank()) throw std::invalid_argument("mode out of range");
    BargmannFunction result(f.rank(), f.level());
    for (const auto& [m, c] : f.terms()) {
        TruncatedMonomial shifted = m;
        ++shifted.exponents[mode - 1];
        result.add_term(shifted, c);  // degree k+1 terms vanish in add_term
    }
    return result;
}

BargmannFunction eta_partial(int mode, const BargmannFunction& f) {
    if (mode < 1 || mode > f.rank()) throw std::invalid_argument("mode out of range");
    BargmannFunction result(f.rank(), f.level());
    for (const auto& [m, c] : f.terms()) {
        const int exponent = m.exponents[mode - 1];
        if (exponent == 0) continue;
        TruncatedMonomial lowered = m;
        --lowered.exponents[mode - 1];
        result.add_term(lowered, c * Radical(exponent * (f.level() + 1 - m.total())));
    }
    return result;
}

CheckReport verify_bargmann(int rank, int level) {
    CheckReport report{.check = "bargmann", .rank = rank, .level = level};
    const fock::FockBasis b(rank, level);

    std::vector<BargmannFunction> functions;
    for (int idx = 0; idx < b.size(); ++idx) {
        functions.push_back(basis_function(b.state(idx), level));
    }

    for (int mode = 1; mode <= rank; ++mode) {
        const fock::SparseOperator raise = fock::creation(mode, b);
        const fock::SparseOperator lower = fock::annihilation(mode, b);
        bool multiply_ok = true;
        bool partial_ok = true;
        for (int col = 0; col < b.size(); ++col) {
            BargmannFunction expected_up(rank, level);
            BargmannFunction expected_down(rank, level);
            for (int row = 0; row < b.size(); ++row) {
                const Radical up = raise.at(row, col);
                if (!up.is_zero()) expected_up += functions[row].scaled(up);
                const Radical down = lower.at(row, col);
                if (!down.is_zero()) expected_down += functions[row].scaled(down);
            }
            if (!(multiply_by_eta(mode, functions[col]) == expected_up)) multiply_ok = false;
            if (!(eta_partial(mode, functions[col]) == expected_down)) partial_ok = false;
        }
        report.require("eta_" + std::to_string(mode) + " multiplication intertwines creation(" +
                           std::to_string(mode) + ")",
                       multiply_ok);
        report.require("eta_" + std::to_string(mode) + " derivative intertwines annihilation(" +
                           std::to_string(mode) + ")",
                       partial_ok);
    }

    {
        // Derivative monomials of total order k+1 annihilate everything;
        // checked on the sum of all basis monomials.
        BargmannFunction generic(rank, level);
        for (int idx = 0; idx < b.size(); ++idx) {
            generic.add_term(TruncatedMonomial{b.state(idx).n}, Radical(1));
        }
        bool nilpotent = true;
        std::vector<int> composition(rank, 0);
        std::function<void(int, int)> sweep = [&](int position, int remaining) {
            if (!nilpotent) return;
            if (position == rank - 1) {
                composition[position] = remaining;
                BargmannFunction value = generic;
                for (int i = 0; i < rank; ++i) {
                    for (int step = 0; step < composition[i]; ++step) {
                        value = eta_partial(i + 1, value);
                    }
                }
                if (!value.is_zero()) nilpotent = false;
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                composition[position] = v;
                sweep(position + 1, remaining - v);
            }
        };
        sweep(0, level + 1);
        report.require("every derivative monomial of total order k+1 vanishes", nilpotent);
    }

    if (rank == 1) {
        // Concrete realization: eta = sum theta_i of order k. Powers map to
        // powers, multiplication and derivative agree on the subalgebra.
        namespace gr = grassmann;
        const gr::GrassmannElement concrete_eta = gr::eta(level);
        std::vector<gr::GrassmannElement> concrete_powers;
        concrete_powers.push_back(gr::GrassmannElement::constant(level, Radical(1)));
        for (int p = 1; p <= level + 1; ++p) {
            concrete_powers.push_back(gr::g_mul(concrete_powers.back(), concrete_eta));
        }

        bool independent = true;
        for (int p = 0; p <= level; ++p) {
            if (concrete_powers[p].is_zero()) independent = false;
        }
        report.require("theta realization: eta^p != 0 for p <= k and eta^(k+1) == 0",
                       independent && concrete_powers[level + 1].is_zero());

        bool derivative_match = true;
        for (int p = 0; p <= level; ++p) {
            // Abstract rule on eta^p.
            BargmannFunction abstract(1, level);
            abstract.add_term(TruncatedMonomial{{p}}, Radical(1));
            const BargmannFunction derived = eta_partial(1, abstract);
            gr::GrassmannElement expected(level);
            if (p > 0) {
                for (const auto& [m, c] : derived.terms()) {
                    expected += concrete_powers[m.exponents[0]].scaled(c);
                }
            }
            if (!(gr::eta_derivative(concrete_powers[p]) == expected)) derivative_match = false;
        }
        report.require("theta realization: eta_partial agrees with the eta-derivative on powers",
                       derivative_match);
    }

    return report;
}

}  // namespace whg::bargmann
