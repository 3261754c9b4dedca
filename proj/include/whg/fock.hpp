#pragma once

#include "whg/check_report.hpp"
#include "whg/radical.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace whg::fock {

// Occupation tuple (n_1 ... n_r); validity against a level k is owned by
// the basis that enumerates it.
struct MultiIndex {
    std::vector<int> n;

    int rank() const { return static_cast<int>(n.size()); }
    int total() const;
    auto operator<=>(const MultiIndex&) const = default;

    std::string str() const;  // "(n1,...,nr)"
};

// All multi-indices with sum <= k in graded lexicographic order (by total
// occupation, then lexicographically on the tuple). Size = (k+r)!/(k!r!).
class FockBasis {
public:
    FockBasis(int rank, int level);

    int rank() const { return rank_; }
    int level() const { return level_; }
    int size() const { return static_cast<int>(states_.size()); }

    const MultiIndex& state(int index) const { return states_.at(index); }
    int index_of(const MultiIndex& state) const;
    // nullopt when the tuple falls outside the basis (negative entry or
    // total above k); used for ladder actions that annihilate.
    std::optional<int> try_index(const MultiIndex& state) const;

    const std::vector<MultiIndex>& states() const { return states_; }

private:
    int rank_;
    int level_;
    std::vector<MultiIndex> states_;
    std::map<std::vector<int>, int> lookup_;
};

// Sparse exact matrix over Radical; entries keyed (row, col), no stored
// zeros, deterministic row-major iteration.
class SparseOperator {
public:
    explicit SparseOperator(int dimension);
    static SparseOperator identity(int dimension);

    int dimension() const { return dim_; }
    const std::map<std::pair<int, int>, Radical>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    Radical at(int row, int col) const;
    void add(int row, int col, const Radical& value);
    void set(int row, int col, Radical value);

    SparseOperator transpose() const;
    Radical trace() const;
    SparseOperator scaled(const Radical& factor) const;

    SparseOperator& operator+=(const SparseOperator& other);
    SparseOperator& operator-=(const SparseOperator& other);
    friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
    friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);

    bool operator==(const SparseOperator&) const = default;

    // One line per nonzero entry: "row col value", with row/col rendered
    // as multi-index tuples of the given basis.
    std::string dump(const FockBasis& basis) const;

private:
    void check_index(int row, int col) const;

    int dim_ = 0;
    std::map<std::pair<int, int>, Radical> entries_;
};

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
SparseOperator power(const SparseOperator& a, int exponent);

// Text of the largest-magnitude entry "value at (row,col)"; nullopt for
// the zero operator. Magnitudes compared in floating point, ties broken
// by row-major position, so reports stay deterministic.
std::optional<std::string> max_violation(const SparseOperator& deviation);

FockBasis basis(int rank, int level);

// F_i(n) = n_i * (k + 1 - sum_j n_j); nonnegative on every basis element.
Rational structure_function(int mode, const MultiIndex& state, int level);

// Ladder and number operators of the generalized Weyl-Heisenberg algebra;
// modes are 1-based.
SparseOperator annihilation(int mode, const FockBasis& basis);
SparseOperator creation(int mode, const FockBasis& basis);
SparseOperator number(int mode, const FockBasis& basis);

// Dimension formula, graded-lex ordering and rank/unrank round trip.
CheckReport basis_check(int rank, int level);

// Defining relations: [a_i^-, a_i^+] = k I - (sum_j N_j + N_i),
// [N_i, a_j^+-] = +-delta_ij a_j^+-, [a_i^+-, a_j^+-] = 0 (i != j), and
// the triple relations [a_i^+-, [a_i^+-, a_j^-+]] = 0 (i != j).
CheckReport verify_wh_relations(int rank, int level);

// su(r+1) generators realized from the ladder operators: the 2r Weyl
// generators E_{+-alpha}, the r Cartan generators H_i, and the r^2 - r
// mixed commutators E_{+alpha,-beta}.
struct SuGenerators {
    std::vector<SparseOperator> raising;   // E_{+alpha} = a_alpha^+
    std::vector<SparseOperator> lowering;  // E_{-alpha} = a_alpha^-
    std::vector<SparseOperator> cartan;    // H_i = (k I - (sum N + N_i))/2
    std::map<std::pair<int, int>, SparseOperator> mixed;  // (alpha,beta) -> [a_a^+, a_b^-]

    int count() const;
};
SuGenerators su_generators(int rank, int level);
CheckReport su_generators_check(int rank, int level);

// Cartan matrix of su(r+1): 2 on the diagonal, -1 off by one.
std::vector<std::vector<int>> cartan_matrix(int rank);

// Chevalley generators e_i = b_{i-1}^+ b_i^-, f_i = b_{i-1}^- b_i^+,
// h_i = N_{i-1} - N_i on the symmetric representation (total boson number
// k over r+1 modes, mode 0 eliminated), plus the full Serre relation set.
CheckReport serre_check(int rank, int level);

// j_i^+ = b_0^- b_i^+ and j_i^- = b_0^+ b_i^- on the identified basis.
struct CommutingLadders {
    std::vector<SparseOperator> raising;
    std::vector<SparseOperator> lowering;
};
CommutingLadders commuting_ladders(int rank, int level);
CheckReport commuting_ladders_check(int rank, int level);

// Max |entry| of [a_i^-/sqrt(k), a_j^+/sqrt(k)] - delta_ij I over rows and
// columns with total occupation <= n_max. The maximum is always attained
// on a rational entry; bounded by 2*n_max/k.
Rational large_k_deviation(int rank, int level, int n_max);
CheckReport large_k_check(int rank, int level, int n_max);

// The full algebra suite at one (rank, level): basis, defining relations,
// su(r+1) generators, Chevalley-Serre, commuting ladders, large-k bound.
std::vector<CheckReport> algebra_reports(int rank, int level);

}  // namespace whg::fock
