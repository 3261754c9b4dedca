#include "whg/coherent.hpp"

#include "whg/grassmann.hpp"

#include <functional>
#include <stdexcept>

namespace whg::coherent {

using fock::FockBasis;
using fock::MultiIndex;
using fock::SparseOperator;

SymbolicCoefficient::SymbolicCoefficient(int rank, int level) : rank_(rank), level_(level) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    if (level < 1) throw std::invalid_argument("level must be >= 1");
}

SymbolicCoefficient SymbolicCoefficient::one(int rank, int level) {
    SymbolicCoefficient c(rank, level);
    c.add_term(SymKey{0, 0, ZMonomial{std::vector<int>(rank, 0), std::vector<int>(rank, 0)}},
               Radical(1));
    return c;
}

SymbolicCoefficient SymbolicCoefficient::term(int rank, int level, int eta_power,
                                              int eta_bar_power, ZMonomial zm,
                                              Radical coefficient) {
    SymbolicCoefficient c(rank, level);
    c.add_term(SymKey{eta_power, eta_bar_power, std::move(zm)}, coefficient);
    return c;
}

void SymbolicCoefficient::add_term(const SymKey& key, const Radical& value) {
    if (static_cast<int>(key.zm.z.size()) != rank_ ||
        static_cast<int>(key.zm.z_bar.size()) != rank_) {
        throw std::invalid_argument("z-monomial rank mismatch");
    }
    if (key.eta_power < 0 || key.eta_bar_power < 0) {
        throw std::invalid_argument("negative eta power");
    }
    // eta^{k+1} = 0 and likewise for the conjugate.
    if (key.eta_power > level_ || key.eta_bar_power > level_) return;
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolicCoefficient& SymbolicCoefficient::operator+=(const SymbolicCoefficient& other) {
    if (rank_ != other.rank_ || level_ != other.level_) {
        throw std::invalid_argument("rank/level mismatch");
    }
    for (const auto& [key, value] : other.terms_) add_term(key, value);
    return *this;
}

SymbolicCoefficient& SymbolicCoefficient::operator-=(const SymbolicCoefficient& other) {
    if (rank_ != other.rank_ || level_ != other.level_) {
        throw std::invalid_argument("rank/level mismatch");
    }
    for (const auto& [key, value] : other.terms_) add_term(key, -value);
    return *this;
}

SymbolicCoefficient operator*(const SymbolicCoefficient& a, const SymbolicCoefficient& b) {
    if (a.rank_ != b.rank_ || a.level_ != b.level_) {
        throw std::invalid_argument("rank/level mismatch");
    }
    SymbolicCoefficient result(a.rank_, a.level_);
    for (const auto& [ka, va] : a.terms_) {
        for (const auto& [kb, vb] : b.terms_) {
            SymKey key;
            key.eta_power = ka.eta_power + kb.eta_power;
            key.eta_bar_power = ka.eta_bar_power + kb.eta_bar_power;
            key.zm.z.resize(a.rank_);
            key.zm.z_bar.resize(a.rank_);
            for (int i = 0; i < a.rank_; ++i) {
                key.zm.z[i] = ka.zm.z[i] + kb.zm.z[i];
                key.zm.z_bar[i] = ka.zm.z_bar[i] + kb.zm.z_bar[i];
            }
            result.add_term(key, va * vb);
        }
    }
    return result;
}

SymbolicCoefficient SymbolicCoefficient::scaled(const Radical& factor) const {
    SymbolicCoefficient result(rank_, level_);
    for (const auto& [key, value] : terms_) result.add_term(key, value * factor);
    return result;
}

SymbolicCoefficient SymbolicCoefficient::conjugate() const {
    SymbolicCoefficient result(rank_, level_);
    for (const auto& [key, value] : terms_) {
        result.add_term(SymKey{key.eta_bar_power, key.eta_power,
                               ZMonomial{key.zm.z_bar, key.zm.z}},
                        value);
    }
    return result;
}

std::string SymbolicCoefficient::str() const {
    if (terms_.empty()) return "0";
    auto exponents = [](const char* name, const std::vector<int>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            out += std::string("*") + name + std::to_string(i + 1);
            if (v[i] != 1) out += "^" + std::to_string(v[i]);
        }
        return out;
    };
    std::string out;
    for (const auto& [key, value] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + value.str() + ")";
        if (key.eta_power > 0) {
            out += "*eta";
            if (key.eta_power != 1) out += "^" + std::to_string(key.eta_power);
        }
        if (key.eta_bar_power > 0) {
            out += "*etabar";
            if (key.eta_bar_power != 1) out += "^" + std::to_string(key.eta_bar_power);
        }
        out += exponents("z", key.zm.z);
        out += exponents("zbar", key.zm.z_bar);
    }
    return out;
}

SpinOperators spin_operators(int two_j) {
    if (two_j < 1) throw std::invalid_argument("two_j must be >= 1");
    const FockBasis b(1, two_j);
    SpinOperators ops{two_j, fock::creation(1, b), fock::annihilation(1, b),
                      SparseOperator(two_j + 1), SparseOperator(two_j + 1)};
    for (int n = 0; n <= two_j; ++n) {
        ops.z.set(n, n, Radical(Rational(2 * n - two_j, 2)));  // m = n - j
    }
    ops.squared = ops.z * ops.z +
                  (ops.plus * ops.minus + ops.minus * ops.plus)
                      .scaled(Radical(Rational(1, 2)));

    // Structure relations hold by construction; fail loudly if not.
    if (!(commutator(ops.z, ops.plus) == ops.plus)) {
        throw std::logic_error("[j_z, j_+] != j_+");
    }
    if (!(commutator(ops.z, ops.minus) == ops.minus.scaled(Radical(-1)))) {
        throw std::logic_error("[j_z, j_-] != -j_-");
    }
    if (!(commutator(ops.plus, ops.minus) == ops.z.scaled(Radical(2)))) {
        throw std::logic_error("[j_+, j_-] != 2 j_z");
    }
    const Rational casimir(two_j * (two_j + 2), 4);  // j(j+1)
    if (!(ops.squared == SparseOperator::identity(two_j + 1).scaled(Radical(casimir)))) {
        throw std::logic_error("j^2 != j(j+1) I");
    }
    return ops;
}

std::map<MultiIndex, Radical> bg_coefficients(int rank, int level) {
    const FockBasis b(rank, level);
    std::map<MultiIndex, Radical> coeffs;
    for (int idx = 0; idx < b.size(); ++idx) {
        const MultiIndex& n = b.state(idx);
        Int denominator = factorial(level);
        for (int v : n.n) denominator *= factorial(v);
        coeffs.emplace(n, Radical::sqrt_rational(
                              Rational(factorial(level - n.total()), denominator)));
    }
    return coeffs;
}

CoherentState build_coherent_state(int rank, int level) {
    FockBasis b(rank, level);
    const auto coeffs = bg_coefficients(rank, level);
    std::vector<SymbolicCoefficient> entries;
    for (int idx = 0; idx < b.size(); ++idx) {
        const MultiIndex& n = b.state(idx);
        entries.push_back(SymbolicCoefficient::term(
            rank, level, n.total(), 0,
            ZMonomial{n.n, std::vector<int>(rank, 0)}, coeffs.at(n)));
    }
    return CoherentState{std::move(b), std::move(entries)};
}

SymbolicCoefficient normalization_inverse_square(int rank, int level) {
    const FockBasis b(rank, level);
    SymbolicCoefficient result(rank, level);
    for (int idx = 0; idx < b.size(); ++idx) {
        const MultiIndex& n = b.state(idx);
        Int denominator = factorial(level);
        for (int v : n.n) denominator *= factorial(v);
        const Rational c_squared(factorial(level - n.total()), denominator);
        result.add_term(SymKey{n.total(), n.total(), ZMonomial{n.n, n.n}},
                        Radical(c_squared));
    }
    return result;
}

Rational gaussian_moment(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("negative moment order");
    if (n != m) return Rational(0);
    return Rational(factorial(n));
}

Rational sigma_moment(int eta_power, int eta_bar_power, int level) {
    if (eta_power < 0 || eta_bar_power < 0 || eta_power > level || eta_bar_power > level) {
        return Rational(0);
    }
    if (eta_power != eta_bar_power) return Rational(0);
    return Rational(factorial(level), factorial(level - eta_power));
}

CheckReport eigen_check(int rank, int level) {
    CheckReport report{.check = "bg_eigenvalue", .rank = rank, .level = level};
    const CoherentState state = build_coherent_state(rank, level);
    const FockBasis& b = state.basis;

    for (int mode = 1; mode <= rank; ++mode) {
        const SparseOperator lower = fock::annihilation(mode, b);

        std::vector<SymbolicCoefficient> lhs(b.size(), SymbolicCoefficient(rank, level));
        for (const auto& [pos, value] : lower.entries()) {
            lhs[pos.first] += state.entries[pos.second].scaled(value);
        }

        ZMonomial z_i{std::vector<int>(rank, 0), std::vector<int>(rank, 0)};
        z_i.z[mode - 1] = 1;
        const SymbolicCoefficient lambda =
            SymbolicCoefficient::term(rank, level, 1, 0, z_i, Radical(1));

        bool ok = true;
        for (int idx = 0; idx < b.size(); ++idx) {
            if (!(lhs[idx] == lambda * state.entries[idx])) {
                ok = false;
                break;
            }
        }
        report.require("j_" + std::to_string(mode) + "^- |CS> == (eta z_" +
                           std::to_string(mode) + ") |CS>",
                       ok);
    }

    {
        // lambda_1^{n_1} ... lambda_r^{n_r} == 0 whenever sum n == k+1.
        std::vector<SymbolicCoefficient> lambdas;
        for (int mode = 1; mode <= rank; ++mode) {
            ZMonomial z_i{std::vector<int>(rank, 0), std::vector<int>(rank, 0)};
            z_i.z[mode - 1] = 1;
            lambdas.push_back(SymbolicCoefficient::term(rank, level, 1, 0, z_i, Radical(1)));
        }
        bool nilpotent = true;
        std::vector<int> composition(rank, 0);
        std::function<void(int, int)> sweep = [&](int position, int remaining) {
            if (!nilpotent) return;
            if (position == rank - 1) {
                composition[position] = remaining;
                SymbolicCoefficient product = SymbolicCoefficient::one(rank, level);
                for (int i = 0; i < rank; ++i) {
                    for (int step = 0; step < composition[i]; ++step) {
                        product = product * lambdas[i];
                    }
                }
                if (!product.is_zero()) nilpotent = false;
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                composition[position] = v;
                sweep(position + 1, remaining - v);
            }
        };
        sweep(0, level + 1);
        report.require("lambda products of total degree k+1 vanish identically", nilpotent);
    }

    return report;
}

namespace {

// Integrates one symbolic coefficient against the full measure: formal
// Gaussian moments mode by mode in z, Berezin/sigma moments in eta.
Radical integrate_against_measure(const SymbolicCoefficient& value, int level) {
    Radical total;
    for (const auto& [key, coeff] : value.terms()) {
        Rational moment = sigma_moment(key.eta_power, key.eta_bar_power, level);
        if (moment == 0) continue;
        for (std::size_t i = 0; i < key.zm.z.size() && moment != 0; ++i) {
            moment *= gaussian_moment(key.zm.z[i], key.zm.z_bar[i]);
        }
        if (moment != 0) total += coeff * Radical(moment);
    }
    return total;
}

}  // namespace

CheckReport resolution_check(int rank, int level) {
    CheckReport report{.check = "bg_resolution", .rank = rank, .level = level};
    const CoherentState state = build_coherent_state(rank, level);
    const FockBasis& b = state.basis;

    // The sigma moment rule used below, re-derived at the theta level from
    // Berezin integration against the expanded measure.
    if (level <= 8) {
        namespace gr = grassmann;
        const auto sigma = gr::sigma_measure(level);
        const auto h = gr::eta(level);
        const auto hb = gr::eta_bar(level);
        bool ok = true;
        for (int n = 0; n <= level && ok; ++n) {
            const auto integrand =
                gr::g_mul(sigma, gr::g_mul(gr::g_pow(h, n), gr::g_pow(hb, n)));
            const Radical value =
                gr::berezin(gr::berezin(integrand, gr::Side::theta), gr::Side::theta_bar)
                    .constant_term();
            ok = value == Radical(Rational(factorial(level), factorial(level - n)));
        }
        report.require("theta-level sigma moments: int sigma eta^n etabar^n == k!/(k-n)!", ok);
    } else {
        report.notes.push_back("theta-level sigma cross-check runs for k <= 8 only");
    }

    {
        // <CS|CS> reproduces the closed-form |N|^{-2} expansion; this is the
        // cancellation that lets unnormalized states stand in for the
        // normalized ones under the measure.
        SymbolicCoefficient norm(rank, level);
        for (int idx = 0; idx < b.size(); ++idx) {
            norm += state.entries[idx] * state.entries[idx].conjugate();
        }
        report.require("sum_n |entry_n|^2 == |N|^{-2} expansion",
                       norm == normalization_inverse_square(rank, level));
    }

    {
        bool identity = true;
        std::string witness;
        for (int row = 0; row < b.size() && identity; ++row) {
            for (int col = 0; col < b.size(); ++col) {
                const SymbolicCoefficient product =
                    state.entries[row] * state.entries[col].conjugate();
                const Radical value = integrate_against_measure(product, level);
                const Radical expected = row == col ? Radical(1) : Radical();
                if (!(value == expected)) {
                    identity = false;
                    witness = (value - expected).str() + " at (" + std::to_string(row) + "," +
                              std::to_string(col) + ")";
                    break;
                }
            }
        }
        report.require("int |CS> dmu <CS| == identity on dimension " + std::to_string(b.size()),
                       identity, witness);
    }

    return report;
}

CheckReport recurrence_check(int rank, int level) {
    CheckReport report{.check = "bg_recurrence", .rank = rank, .level = level};
    const FockBasis b(rank, level);
    const auto closed = bg_coefficients(rank, level);

    report.require("C_0 == 1", closed.at(b.state(0)) == Radical(1));

    bool forward = true;
    for (int idx = 0; idx < b.size() && forward; ++idx) {
        const MultiIndex& n = b.state(idx);
        if (n.total() >= level) continue;
        for (int mode = 1; mode <= rank; ++mode) {
            MultiIndex raised = n;
            ++raised.n[mode - 1];
            const Radical factor =
                Radical::sqrt_int(1, Int(n.n[mode - 1] + 1) * Int(level - n.total()));
            if (!(closed.at(raised) * factor == closed.at(n))) {
                forward = false;
                break;
            }
        }
    }
    report.require("closed form satisfies C_{n+e_i} sqrt((n_i+1)(k-sum n)) == C_n", forward);

    // Iterate the recurrences upward from C_0 = 1 and compare, checking
    // every admissible mode (path independence).
    bool iterated_match = true;
    std::map<MultiIndex, Radical> iterated;
    iterated.emplace(b.state(0), Radical(1));
    for (int idx = 1; idx < b.size() && iterated_match; ++idx) {
        const MultiIndex& n = b.state(idx);
        bool assigned = false;
        for (int mode = 1; mode <= rank; ++mode) {
            if (n.n[mode - 1] == 0) continue;
            MultiIndex lowered = n;
            --lowered.n[mode - 1];
            const Radical step = Radical::sqrt_int(
                1, Int(n.n[mode - 1]) * Int(level + 1 - n.total()));
            const Radical candidate = iterated.at(lowered) * step.inverse_single_term();
            if (!assigned) {
                iterated.emplace(n, candidate);
                assigned = true;
            } else if (!(iterated.at(n) == candidate)) {
                iterated_match = false;
                break;
            }
        }
    }
    report.require("recurrence iteration from C_0 is mode-independent", iterated_match);

    bool agree = iterated_match;
    if (agree) {
        for (const auto& [n, value] : closed) {
            if (!(iterated.at(n) == value)) {
                agree = false;
                break;
            }
        }
    }
    report.require("iterated coefficients match the closed form", agree);

    return report;
}

std::vector<StateEntry> state_entries(const CoherentState& state) {
    std::vector<StateEntry> entries;
    for (int idx = 0; idx < state.basis.size(); ++idx) {
        const MultiIndex& n = state.basis.state(idx);
        StateEntry entry;
        entry.index = n;
        entry.eta_power = n.total();
        entry.z_monomial = n.n;
        // Single-term by construction.
        for (const auto& [key, value] : state.entries[idx].terms()) {
            entry.coefficient = value;
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace whg::coherent
