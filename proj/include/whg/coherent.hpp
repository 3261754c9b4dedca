#pragma once

#include "whg/check_report.hpp"
#include "whg/fock.hpp"
#include "whg/radical.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace whg::coherent {

// Symbolic ring for Barut-Girardello states: formal powers of the
// order-(k+1) nilpotent eta and eta-bar (powers above k vanish) tensored
// with polynomials in z_1..z_r, z-bar_1..z-bar_r over Radical.

struct ZMonomial {
    std::vector<int> z;
    std::vector<int> z_bar;
    auto operator<=>(const ZMonomial&) const = default;
};

struct SymKey {
    int eta_power = 0;
    int eta_bar_power = 0;
    ZMonomial zm;
    auto operator<=>(const SymKey&) const = default;
};

class SymbolicCoefficient {
public:
    SymbolicCoefficient(int rank, int level);
    static SymbolicCoefficient one(int rank, int level);
    static SymbolicCoefficient term(int rank, int level, int eta_power, int eta_bar_power,
                                    ZMonomial zm, Radical coefficient);

    int rank() const { return rank_; }
    int level() const { return level_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<SymKey, Radical>& terms() const { return terms_; }

    void add_term(const SymKey& key, const Radical& value);

    SymbolicCoefficient& operator+=(const SymbolicCoefficient& other);
    SymbolicCoefficient& operator-=(const SymbolicCoefficient& other);
    friend SymbolicCoefficient operator+(SymbolicCoefficient a, const SymbolicCoefficient& b) {
        return a += b;
    }
    friend SymbolicCoefficient operator-(SymbolicCoefficient a, const SymbolicCoefficient& b) {
        return a -= b;
    }
    friend SymbolicCoefficient operator*(const SymbolicCoefficient& a,
                                         const SymbolicCoefficient& b);
    SymbolicCoefficient scaled(const Radical& factor) const;

    // Swaps eta <-> eta-bar and z <-> z-bar; coefficients are real.
    SymbolicCoefficient conjugate() const;

    bool operator==(const SymbolicCoefficient&) const = default;

    std::string str() const;

private:
    int rank_;
    int level_;
    std::map<SymKey, Radical> terms_;
};

// Unnormalized state: entry C_n eta^{sum n} z^n at |n>. The normalization
// factor is Grassmann-valued, so it is carried separately and cancelled
// analytically inside the measure.
struct CoherentState {
    fock::FockBasis basis;
    std::vector<SymbolicCoefficient> entries;
};

// su(2) spin matrices in the |n> = |j, n-j> basis (dimension 2j+1); the
// constructor verifies [j_z, j_+-] = +-j_+-, [j_+, j_-] = 2 j_z and
// j^2 = j(j+1) I exactly.
struct SpinOperators {
    int two_j;
    fock::SparseOperator plus;
    fock::SparseOperator minus;
    fock::SparseOperator z;
    fock::SparseOperator squared;
};
SpinOperators spin_operators(int two_j);

// C_n = sqrt((k - sum n)!/(n_1!...n_r! k!)); C_0 = 1.
std::map<fock::MultiIndex, Radical> bg_coefficients(int rank, int level);

CoherentState build_coherent_state(int rank, int level);

// |N|^{-2} = sum_n C_n^2 eta^{sum n} eta-bar^{sum n} prod |z_i|^{2 n_i}.
SymbolicCoefficient normalization_inverse_square(int rank, int level);

// int z^n zbar^m e^{-|z|^2} d^2z / pi = n! delta_{nm}; applied formally
// during resolution checks.
Rational gaussian_moment(int n, int m);

// Berezin moment of sigma: int sigma eta^p etabar^q d(eta) d(etabar)
// = k!/(k-p)! when p == q, else 0. Verified at the theta level in the
// grassmann module.
Rational sigma_moment(int eta_power, int eta_bar_power, int level);

// j_i^- |CS> == (eta z_i) |CS> as exact symbolic ring equality, plus
// lambda-nilpotency of total degree k+1.
CheckReport eigen_check(int rank, int level);

// Assembles int |CS> dmu <CS| through the formal z moments and the
// Berezin/sigma moments and asserts it equals the identity exactly.
CheckReport resolution_check(int rank, int level);

// Closed-form coefficients against forward iteration of the recurrences
// from C_0 = 1, including path independence across modes.
CheckReport recurrence_check(int rank, int level);

// Flattened view of the state entries for emission.
struct StateEntry {
    fock::MultiIndex index;
    Radical coefficient;
    int eta_power = 0;
    std::vector<int> z_monomial;
};
std::vector<StateEntry> state_entries(const CoherentState& state);

}  // namespace whg::coherent
