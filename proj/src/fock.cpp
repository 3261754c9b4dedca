#include "whg/fock.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace whg::fock {

int MultiIndex::total() const {
    int sum = 0;
    for (int v : n) sum += v;
    return sum;
}

std::string MultiIndex::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(n[i]);
    }
    out += ")";
    return out;
}

FockBasis::FockBasis(int rank, int level) : rank_(rank), level_(level) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    std::vector<int> current(rank, 0);
    // Graded lexicographic: all tuples of total t, for t = 0..k, each layer
    // enumerated in ascending lexicographic order.
    std::function<void(int, int)> fill = [&](int position, int remaining) {
        if (position == rank - 1) {
            current[position] = remaining;
            states_.push_back(MultiIndex{current});
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            current[position] = v;
            fill(position + 1, remaining - v);
        }
    };
    for (int t = 0; t <= level; ++t) fill(0, t);
    for (int i = 0; i < static_cast<int>(states_.size()); ++i) {
        lookup_.emplace(states_[i].n, i);
    }
}

int FockBasis::index_of(const MultiIndex& state) const {
    auto it = lookup_.find(state.n);
    if (it == lookup_.end()) throw std::invalid_argument("state outside basis");
    return it->second;
}

std::optional<int> FockBasis::try_index(const MultiIndex& state) const {
    auto it = lookup_.find(state.n);
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

SparseOperator::SparseOperator(int dimension) : dim_(dimension) {
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
}

SparseOperator SparseOperator::identity(int dimension) {
    SparseOperator id(dimension);
    for (int i = 0; i < dimension; ++i) id.set(i, i, Radical(1));
    return id;
}

void SparseOperator::check_index(int row, int col) const {
    if (row < 0 || row >= dim_ || col < 0 || col >= dim_) {
        throw std::out_of_range("operator index out of range");
    }
}

Radical SparseOperator::at(int row, int col) const {
    check_index(row, col);
    auto it = entries_.find({row, col});
    return it == entries_.end() ? Radical() : it->second;
}

void SparseOperator::add(int row, int col, const Radical& value) {
    check_index(row, col);
    if (value.is_zero()) return;
    auto [it, inserted] = entries_.emplace(std::make_pair(row, col), value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

void SparseOperator::set(int row, int col, Radical value) {
    check_index(row, col);
    if (value.is_zero()) {
        entries_.erase({row, col});
    } else {
        entries_[{row, col}] = std::move(value);
    }
}

SparseOperator SparseOperator::transpose() const {
    SparseOperator result(dim_);
    for (const auto& [pos, value] : entries_) result.set(pos.second, pos.first, value);
    return result;
}

Radical SparseOperator::trace() const {
    Radical sum;
    for (const auto& [pos, value] : entries_) {
        if (pos.first == pos.second) sum += value;
    }
    return sum;
}

SparseOperator SparseOperator::scaled(const Radical& factor) const {
    SparseOperator result(dim_);
    for (const auto& [pos, value] : entries_) {
        result.add(pos.first, pos.second, value * factor);
    }
    return result;
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& other) {
    if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch");
    for (const auto& [pos, value] : other.entries_) add(pos.first, pos.second, value);
    return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& other) {
    if (dim_ != other.dim_) throw std::invalid_argument("dimension mismatch");
    for (const auto& [pos, value] : other.entries_) add(pos.first, pos.second, -value);
    return *this;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch");
    SparseOperator result(a.dim_);
    for (const auto& [pos, value] : a.entries_) {
        const auto row_begin = b.entries_.lower_bound({pos.second, 0});
        const auto row_end = b.entries_.lower_bound({pos.second + 1, 0});
        for (auto it = row_begin; it != row_end; ++it) {
            result.add(pos.first, it->first.second, value * it->second);
        }
    }
    return result;
}

std::string SparseOperator::dump(const FockBasis& basis) const {
    std::string out;
    for (const auto& [pos, value] : entries_) {
        out += basis.state(pos.first).str() + " " + basis.state(pos.second).str() + " " +
               value.str() + "\n";
    }
    return out;
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
    return a * b - b * a;
}

SparseOperator power(const SparseOperator& a, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative operator power");
    SparseOperator result = SparseOperator::identity(a.dimension());
    for (int i = 0; i < exponent; ++i) result = result * a;
    return result;
}

std::optional<std::string> max_violation(const SparseOperator& deviation) {
    if (deviation.is_zero()) return std::nullopt;
    const std::pair<int, int>* where = nullptr;
    const Radical* what = nullptr;
    double best = -1.0;
    for (const auto& [pos, value] : deviation.entries()) {
        const double magnitude = std::abs(value.approx());
        if (magnitude > best) {
            best = magnitude;
            where = &pos;
            what = &value;
        }
    }
    return what->str() + " at (" + std::to_string(where->first) + "," +
           std::to_string(where->second) + ")";
}

FockBasis basis(int rank, int level) { return FockBasis(rank, level); }

Rational structure_function(int mode, const MultiIndex& state, int level) {
    if (mode < 1 || mode > state.rank()) throw std::invalid_argument("mode out of range");
    return Rational(Int(state.n[mode - 1]) * Int(level + 1 - state.total()));
}

SparseOperator annihilation(int mode, const FockBasis& basis) {
    if (mode < 1 || mode > basis.rank()) throw std::invalid_argument("mode out of range");
    SparseOperator op(basis.size());
    for (int col = 0; col < basis.size(); ++col) {
        const MultiIndex& state = basis.state(col);
        if (state.n[mode - 1] == 0) continue;
        MultiIndex lowered = state;
        --lowered.n[mode - 1];
        const Int radicand = Int(state.n[mode - 1]) * Int(basis.level() + 1 - state.total());
        op.add(basis.index_of(lowered), col, Radical::sqrt_int(1, radicand));
    }
    return op;
}

SparseOperator creation(int mode, const FockBasis& basis) {
    if (mode < 1 || mode > basis.rank()) throw std::invalid_argument("mode out of range");
    SparseOperator op(basis.size());
    for (int col = 0; col < basis.size(); ++col) {
        const MultiIndex& state = basis.state(col);
        if (state.total() == basis.level()) continue;  // amplitude vanishes at the top layer
        MultiIndex raised = state;
        ++raised.n[mode - 1];
        const Int radicand =
            Int(state.n[mode - 1] + 1) * Int(basis.level() - state.total());
        op.add(basis.index_of(raised), col, Radical::sqrt_int(1, radicand));
    }
    return op;
}

SparseOperator number(int mode, const FockBasis& basis) {
    if (mode < 1 || mode > basis.rank()) throw std::invalid_argument("mode out of range");
    SparseOperator op(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        op.set(i, i, Radical(basis.state(i).n[mode - 1]));
    }
    return op;
}

namespace {

std::string mode_tag(const char* name, int i) {
    return std::string(name) + "(" + std::to_string(i) + ")";
}

void require_zero(CheckReport& report, std::string relation, const SparseOperator& deviation) {
    auto witness = max_violation(deviation);
    report.require(std::move(relation), !witness.has_value(),
                   witness.value_or(std::string{}));
}

SparseOperator number_sum(const FockBasis& b) {
    SparseOperator sum(b.size());
    for (int i = 1; i <= b.rank(); ++i) sum += number(i, b);
    return sum;
}

}  // namespace

CheckReport basis_check(int rank, int level) {
    CheckReport report{.check = "basis", .rank = rank, .level = level};
    const FockBasis b(rank, level);

    const Int expected = binomial(level + rank, rank);
    report.require("dimension == (k+r)!/(k!r!)", Int(b.size()) == expected,
                   std::to_string(b.size()) + " != " + expected.str());

    bool ordered = true;
    for (int i = 0; i + 1 < b.size(); ++i) {
        const auto& a = b.state(i);
        const auto& c = b.state(i + 1);
        if (std::make_pair(a.total(), a.n) >= std::make_pair(c.total(), c.n)) {
            ordered = false;
            break;
        }
    }
    report.require("graded-lex order strictly increasing", ordered);

    bool round_trip = true;
    for (int i = 0; i < b.size(); ++i) {
        if (b.index_of(b.state(i)) != i) {
            round_trip = false;
            break;
        }
    }
    report.require("rank/unrank round trip", round_trip);

    bool positivity = true;
    for (int i = 0; i < b.size() && positivity; ++i) {
        const auto& state = b.state(i);
        for (int mode = 1; mode <= rank; ++mode) {
            const Rational f = structure_function(mode, state, level);
            const bool zero_pattern = (f == 0) == (state.n[mode - 1] == 0);
            if (f < 0 || !zero_pattern) {
                positivity = false;
                break;
            }
        }
    }
    report.require("F_i(n) >= 0 on the basis, zero exactly when n_i == 0", positivity);

    return report;
}

CheckReport verify_wh_relations(int rank, int level) {
    CheckReport report{.check = "wh_relations", .rank = rank, .level = level};
    const FockBasis b(rank, level);

    std::vector<SparseOperator> lower;
    std::vector<SparseOperator> raise;
    std::vector<SparseOperator> num;
    for (int i = 1; i <= rank; ++i) {
        lower.push_back(annihilation(i, b));
        raise.push_back(creation(i, b));
        num.push_back(number(i, b));
    }
    const SparseOperator n_sum = number_sum(b);
    const SparseOperator identity = SparseOperator::identity(b.size());

    for (int i = 0; i < rank; ++i) {
        SparseOperator rhs = identity.scaled(Radical(level));
        rhs -= n_sum;
        rhs -= num[i];
        require_zero(report,
                     "[" + mode_tag("a-", i + 1) + "," + mode_tag("a+", i + 1) +
                         "] == k*I - (N_sum + " + mode_tag("N", i + 1) + ")",
                     commutator(lower[i], raise[i]) - rhs);
    }

    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            SparseOperator plus_rhs(b.size());
            SparseOperator minus_rhs(b.size());
            if (i == j) {
                plus_rhs = raise[j];
                minus_rhs = lower[j].scaled(Radical(-1));
            }
            require_zero(report,
                         "[" + mode_tag("N", i + 1) + "," + mode_tag("a+", j + 1) +
                             "] == +delta_ij*" + mode_tag("a+", j + 1),
                         commutator(num[i], raise[j]) - plus_rhs);
            require_zero(report,
                         "[" + mode_tag("N", i + 1) + "," + mode_tag("a-", j + 1) +
                             "] == -delta_ij*" + mode_tag("a-", j + 1),
                         commutator(num[i], lower[j]) - minus_rhs);
        }
    }

    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            require_zero(report,
                         "[" + mode_tag("a+", i + 1) + "," + mode_tag("a+", j + 1) + "] == 0",
                         commutator(raise[i], raise[j]));
            require_zero(report,
                         "[" + mode_tag("a-", i + 1) + "," + mode_tag("a-", j + 1) + "] == 0",
                         commutator(lower[i], lower[j]));
        }
    }

    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            if (i == j) continue;
            require_zero(report,
                         "[" + mode_tag("a+", i + 1) + ",[" + mode_tag("a+", i + 1) + "," +
                             mode_tag("a-", j + 1) + "]] == 0",
                         commutator(raise[i], commutator(raise[i], lower[j])));
            require_zero(report,
                         "[" + mode_tag("a-", i + 1) + ",[" + mode_tag("a-", i + 1) + "," +
                             mode_tag("a+", j + 1) + "]] == 0",
                         commutator(lower[i], commutator(lower[i], raise[j])));
        }
    }

    return report;
}

int SuGenerators::count() const {
    return static_cast<int>(raising.size() + lowering.size() + cartan.size() + mixed.size());
}

SuGenerators su_generators(int rank, int level) {
    const FockBasis b(rank, level);
    SuGenerators g;
    for (int i = 1; i <= rank; ++i) {
        g.raising.push_back(creation(i, b));
        g.lowering.push_back(annihilation(i, b));
    }
    const SparseOperator n_sum = number_sum(b);
    const SparseOperator identity = SparseOperator::identity(b.size());
    for (int i = 1; i <= rank; ++i) {
        SparseOperator h = identity.scaled(Radical(level));
        h -= n_sum;
        h -= number(i, b);
        g.cartan.push_back(h.scaled(Radical(Rational(1, 2))));
    }
    for (int alpha = 1; alpha <= rank; ++alpha) {
        for (int beta = 1; beta <= rank; ++beta) {
            if (alpha == beta) continue;
            g.mixed.emplace(std::make_pair(alpha, beta),
                            commutator(g.raising[alpha - 1], g.lowering[beta - 1]));
        }
    }
    return g;
}

CheckReport su_generators_check(int rank, int level) {
    CheckReport report{.check = "su_generators", .rank = rank, .level = level};
    const FockBasis b(rank, level);
    const SuGenerators g = su_generators(rank, level);

    report.require("generator count == r(r+2)", g.count() == rank * (rank + 2));

    // Mixed Weyl generators act as sqrt(n_b (n_a + 1)) |n + e_a - e_b>.
    for (const auto& [modes, op] : g.mixed) {
        const auto [alpha, beta] = modes;
        SparseOperator expected(b.size());
        for (int col = 0; col < b.size(); ++col) {
            const MultiIndex& state = b.state(col);
            if (state.n[beta - 1] == 0) continue;
            MultiIndex moved = state;
            --moved.n[beta - 1];
            ++moved.n[alpha - 1];
            const Int radicand = Int(state.n[beta - 1]) * Int(state.n[alpha - 1] + 1);
            expected.add(b.index_of(moved), col, Radical::sqrt_int(1, radicand));
        }
        require_zero(report,
                     "E(+" + std::to_string(alpha) + ",-" + std::to_string(beta) +
                         ") == sqrt(n_b*(n_a+1)) shift",
                     op - expected);
    }

    for (int i = 1; i <= rank; ++i) {
        SparseOperator expected(b.size());
        for (int idx = 0; idx < b.size(); ++idx) {
            const MultiIndex& state = b.state(idx);
            expected.set(idx, idx,
                         Radical(Rational(level - state.total() - state.n[i - 1], 2)));
        }
        require_zero(report, mode_tag("H", i) + " == diag((k - sum n - n_i)/2)",
                     g.cartan[i - 1] - expected);
    }

    bool traceless = true;
    for (const auto& [modes, op] : g.mixed) {
        if (!op.trace().is_zero()) {
            traceless = false;
            break;
        }
    }
    report.require("trace E(+a,-b) == 0", traceless);

    const SparseOperator n_sum = number_sum(b);
    bool casimir_free = true;
    for (const auto& [modes, op] : g.mixed) {
        if (!commutator(n_sum, op).is_zero()) {
            casimir_free = false;
            break;
        }
    }
    for (int i = 0; i < rank; ++i) {
        if (!commutator(n_sum, commutator(g.raising[i], g.lowering[i])).is_zero()) {
            casimir_free = false;
        }
    }
    report.require("[sum_i N_i, [a_a^+, a_b^-]] == 0", casimir_free);

    return report;
}

std::vector<std::vector<int>> cartan_matrix(int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) {
        a[i][i] = 2;
        if (i > 0) a[i][i - 1] = -1;
        if (i + 1 < rank) a[i][i + 1] = -1;
    }
    return a;
}

namespace {

// b_{plus_mode}^+ b_{minus_mode}^- on the total-occupation-k symmetric
// representation over modes 0..r, with mode 0 eliminated via n_0 = k - sum.
SparseOperator boson_bilinear(int plus_mode, int minus_mode, const FockBasis& b) {
    SparseOperator op(b.size());
    for (int col = 0; col < b.size(); ++col) {
        const MultiIndex& state = b.state(col);
        std::vector<int> aug(b.rank() + 1);
        aug[0] = b.level() - state.total();
        std::copy(state.n.begin(), state.n.end(), aug.begin() + 1);

        if (aug[minus_mode] == 0) continue;
        const Int lowering_factor = aug[minus_mode];
        --aug[minus_mode];
        const Int raising_factor = aug[plus_mode] + 1;
        ++aug[plus_mode];

        MultiIndex target{std::vector<int>(aug.begin() + 1, aug.end())};
        op.add(b.index_of(target), col,
               Radical::sqrt_int(1, lowering_factor * raising_factor));
    }
    return op;
}

}  // namespace

CheckReport serre_check(int rank, int level) {
    CheckReport report{.check = "serre_relations", .rank = rank, .level = level};
    const FockBasis b(rank, level);
    const auto a = cartan_matrix(rank);

    std::vector<SparseOperator> e;
    std::vector<SparseOperator> f;
    std::vector<SparseOperator> h;
    for (int i = 1; i <= rank; ++i) {
        e.push_back(boson_bilinear(i - 1, i, b));
        f.push_back(boson_bilinear(i, i - 1, b));
        SparseOperator hi(b.size());
        for (int idx = 0; idx < b.size(); ++idx) {
            const MultiIndex& state = b.state(idx);
            const int n_prev = (i == 1) ? level - state.total() : state.n[i - 2];
            hi.set(idx, idx, Radical(n_prev - state.n[i - 1]));
        }
        h.push_back(hi);
    }

    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            SparseOperator rhs(b.size());
            if (i == j) rhs = h[j];
            require_zero(report,
                         "[" + mode_tag("e", i + 1) + "," + mode_tag("f", j + 1) +
                             "] == delta_ij*" + mode_tag("h", j + 1),
                         commutator(e[i], f[j]) - rhs);
        }
    }
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            require_zero(report,
                         "[" + mode_tag("h", i + 1) + "," + mode_tag("e", j + 1) +
                             "] == a_ij*" + mode_tag("e", j + 1),
                         commutator(h[i], e[j]) - e[j].scaled(Radical(a[i][j])));
            require_zero(report,
                         "[" + mode_tag("h", i + 1) + "," + mode_tag("f", j + 1) +
                             "] == -a_ij*" + mode_tag("f", j + 1),
                         commutator(h[i], f[j]) - f[j].scaled(Radical(-a[i][j])));
        }
    }
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            require_zero(report,
                         "[" + mode_tag("h", i + 1) + "," + mode_tag("h", j + 1) + "] == 0",
                         commutator(h[i], h[j]));
        }
    }
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            if (std::abs(i - j) < 2) continue;
            require_zero(report,
                         "[" + mode_tag("e", i + 1) + "," + mode_tag("e", j + 1) + "] == 0",
                         commutator(e[i], e[j]));
            require_zero(report,
                         "[" + mode_tag("f", i + 1) + "," + mode_tag("f", j + 1) + "] == 0",
                         commutator(f[i], f[j]));
        }
    }
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            if (std::abs(i - j) != 1) continue;
            const SparseOperator serre_e = e[i] * e[i] * e[j] -
                                           (e[i] * e[j] * e[i]).scaled(Radical(2)) +
                                           e[j] * e[i] * e[i];
            const SparseOperator serre_f = f[i] * f[i] * f[j] -
                                           (f[i] * f[j] * f[i]).scaled(Radical(2)) +
                                           f[j] * f[i] * f[i];
            require_zero(report,
                         "e_i^2 e_j - 2 e_i e_j e_i + e_j e_i^2 == 0 (i=" +
                             std::to_string(i + 1) + ",j=" + std::to_string(j + 1) + ")",
                         serre_e);
            require_zero(report,
                         "f_i^2 f_j - 2 f_i f_j f_i + f_j f_i^2 == 0 (i=" +
                             std::to_string(i + 1) + ",j=" + std::to_string(j + 1) + ")",
                         serre_f);
        }
    }
    if (rank == 1) {
        report.notes.push_back("rank 1: Chevalley su(2) relations only, no Serre terms");
    }

    return report;
}

CommutingLadders commuting_ladders(int rank, int level) {
    const FockBasis b(rank, level);
    CommutingLadders ladders;
    for (int i = 1; i <= rank; ++i) {
        ladders.raising.push_back(boson_bilinear(i, 0, b));
        ladders.lowering.push_back(boson_bilinear(0, i, b));
    }
    return ladders;
}

CheckReport commuting_ladders_check(int rank, int level) {
    CheckReport report{.check = "commuting_ladders", .rank = rank, .level = level};
    const FockBasis b(rank, level);
    const CommutingLadders ladders = commuting_ladders(rank, level);

    for (int i = 1; i <= rank; ++i) {
        require_zero(report, mode_tag("j-", i) + " == annihilation(" + std::to_string(i) + ")",
                     ladders.lowering[i - 1] - annihilation(i, b));
        require_zero(report, mode_tag("j+", i) + " == creation(" + std::to_string(i) + ")",
                     ladders.raising[i - 1] - creation(i, b));
    }

    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            require_zero(report,
                         "[" + mode_tag("j-", i + 1) + "," + mode_tag("j-", j + 1) + "] == 0",
                         commutator(ladders.lowering[i], ladders.lowering[j]));
            require_zero(report,
                         "[" + mode_tag("j+", i + 1) + "," + mode_tag("j+", j + 1) + "] == 0",
                         commutator(ladders.raising[i], ladders.raising[j]));
        }
    }

    // Dual route: the nested-commutator construction from the Chevalley
    // Weyl generators must reproduce the bosonic bilinears.
    {
        std::vector<SparseOperator> e;
        std::vector<SparseOperator> f;
        for (int i = 1; i <= rank; ++i) {
            e.push_back(boson_bilinear(i - 1, i, b));
            f.push_back(boson_bilinear(i, i - 1, b));
        }
        SparseOperator recursive_plus = f[0];
        SparseOperator recursive_minus = e[0];
        bool matches = ladders.raising[0] == recursive_plus &&
                       ladders.lowering[0] == recursive_minus;
        for (int i = 2; i <= rank && matches; ++i) {
            recursive_plus = commutator(f[i - 1], recursive_plus);
            recursive_minus = commutator(recursive_minus, e[i - 1]);
            matches = ladders.raising[i - 1] == recursive_plus &&
                      ladders.lowering[i - 1] == recursive_minus;
        }
        report.require("nested commutators of Weyl generators reproduce j_i^+-", matches);
    }

    // Nilpotency: every mixed monomial of total degree k+1 vanishes.
    {
        std::vector<std::vector<SparseOperator>> lower_powers(rank);
        std::vector<std::vector<SparseOperator>> raise_powers(rank);
        for (int i = 0; i < rank; ++i) {
            lower_powers[i].push_back(SparseOperator::identity(b.size()));
            raise_powers[i].push_back(SparseOperator::identity(b.size()));
            for (int p = 1; p <= level + 1; ++p) {
                lower_powers[i].push_back(lower_powers[i][p - 1] * ladders.lowering[i]);
                raise_powers[i].push_back(raise_powers[i][p - 1] * ladders.raising[i]);
            }
        }
        bool nilpotent = true;
        std::vector<int> composition(rank, 0);
        std::function<void(int, int)> sweep = [&](int position, int remaining) {
            if (!nilpotent) return;
            if (position == rank - 1) {
                composition[position] = remaining;
                SparseOperator product_minus = SparseOperator::identity(b.size());
                SparseOperator product_plus = SparseOperator::identity(b.size());
                for (int i = 0; i < rank; ++i) {
                    product_minus = product_minus * lower_powers[i][composition[i]];
                    product_plus = product_plus * raise_powers[i][composition[i]];
                }
                if (!product_minus.is_zero() || !product_plus.is_zero()) nilpotent = false;
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                composition[position] = v;
                sweep(position + 1, remaining - v);
            }
        };
        sweep(0, level + 1);
        report.require("(j_1^-)^{n_1}...(j_r^-)^{n_r} == 0 for sum n == k+1 (and j^+)",
                       nilpotent);
    }

    return report;
}

Rational large_k_deviation(int rank, int level, int n_max) {
    if (n_max < 0 || n_max >= level) throw std::invalid_argument("require 0 <= n_max < k");
    const FockBasis b(rank, level);
    const Rational inv_k(1, level);

    std::vector<bool> included(b.size());
    for (int i = 0; i < b.size(); ++i) included[i] = b.state(i).total() <= n_max;

    Rational best_square(0);
    Radical best_entry;
    auto consider = [&](const SparseOperator& block) {
        for (const auto& [pos, value] : block.entries()) {
            if (!included[pos.first] || !included[pos.second]) continue;
            const Rational square = value.abs_squared_single_term();
            if (square > best_square) {
                best_square = square;
                best_entry = value;
            }
        }
    };

    for (int i = 1; i <= rank; ++i) {
        for (int j = 1; j <= rank; ++j) {
            SparseOperator block =
                commutator(annihilation(i, b), creation(j, b)).scaled(Radical(inv_k));
            if (i == j) block -= SparseOperator::identity(b.size());
            consider(block);
        }
    }

    if (best_entry.is_zero()) return Rational(0);
    // The diagonal deviation 2*n_max/k dominates every cross entry, so the
    // winner is rational.
    const Rational value = best_entry.rational_value();
    return value < 0 ? Rational(-value) : value;
}

CheckReport large_k_check(int rank, int level, int n_max) {
    CheckReport report{.check = "large_k_contraction", .rank = rank, .level = level};
    const FockBasis b(rank, level);

    const Rational deviation = large_k_deviation(rank, level, n_max);
    const Rational bound(2 * n_max, level);
    report.require("max |[a_i^-/sqrt(k), a_j^+/sqrt(k)] - delta_ij I| <= 2*n_max/k on sum n <= " +
                       std::to_string(n_max),
                   deviation <= bound, to_string(deviation));

    // Off the single allowed shift pattern, scaled cross commutators vanish
    // identically: [a_i^-, a_j^+]/k = -sqrt(n_i (n_j + 1))/k |n - e_i + e_j>.
    bool pattern = true;
    for (int i = 1; i <= rank && pattern; ++i) {
        for (int j = 1; j <= rank && pattern; ++j) {
            if (i == j) continue;
            SparseOperator expected(b.size());
            for (int col = 0; col < b.size(); ++col) {
                const MultiIndex& state = b.state(col);
                if (state.n[i - 1] == 0) continue;
                MultiIndex moved = state;
                --moved.n[i - 1];
                ++moved.n[j - 1];
                if (auto row = b.try_index(moved)) {
                    const Int radicand = Int(state.n[i - 1]) * Int(state.n[j - 1] + 1);
                    expected.add(*row, col,
                                 Radical::sqrt_int(Rational(-1, level), radicand));
                }
            }
            const SparseOperator block =
                commutator(annihilation(i, b), creation(j, b))
                    .scaled(Radical(Rational(1, level)));
            if (!(block == expected)) pattern = false;
        }
    }
    report.require("cross-mode [a_i^-, a_j^+]/k matches the single-shift pattern exactly",
                   pattern);

    return report;
}

std::vector<CheckReport> algebra_reports(int rank, int level) {
    std::vector<CheckReport> reports;
    reports.push_back(basis_check(rank, level));
    reports.push_back(verify_wh_relations(rank, level));
    reports.push_back(su_generators_check(rank, level));
    reports.push_back(serre_check(rank, level));
    reports.push_back(commuting_ladders_check(rank, level));
    reports.push_back(large_k_check(rank, level, std::min(3, level - 1)));
    return reports;
}

}  // namespace whg::fock
