#pragma once

#include "whg/check_report.hpp"
#include "whg/fock.hpp"
#include "whg/radical.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace whg::qukit {

// Multi-qubit realization of the rank-1 algebra on (C^2)^{tensor k}.
// Basis states are bitstrings: bit i-1 set means qubit i is excited (|+>).
// Operator/vector indices are the bitstring values 0 .. 2^k - 1.

inline constexpr int kDefaultCap = 12;

void check_qubit_count(int k, int cap = kDefaultCap);

// "-+-..." rendering, qubit 1 leftmost.
std::string bitstring_str(std::uint32_t bits, int k);

// Sparse vector over the 2^k product basis.
class MultiQubitVector {
public:
    explicit MultiQubitVector(int k, int cap = kDefaultCap);

    int qubit_count() const { return k_; }
    bool is_zero() const { return amplitudes_.empty(); }
    const std::map<std::uint32_t, Radical>& amplitudes() const { return amplitudes_; }

    Radical amplitude(std::uint32_t bits) const;
    void add(std::uint32_t bits, const Radical& value);

    MultiQubitVector& operator+=(const MultiQubitVector& other);
    MultiQubitVector& operator-=(const MultiQubitVector& other);
    friend MultiQubitVector operator+(MultiQubitVector a, const MultiQubitVector& b) {
        return a += b;
    }
    friend MultiQubitVector operator-(MultiQubitVector a, const MultiQubitVector& b) {
        return a -= b;
    }
    MultiQubitVector scaled(const Radical& factor) const;
    bool operator==(const MultiQubitVector&) const = default;

    // "bitstring amplitude" lines.
    std::string dump() const;

private:
    int k_;
    std::map<std::uint32_t, Radical> amplitudes_;
};

// q^- = |-><+|, q^+ = |+><-|, N_q = |+><+| on one qubit (dimension 2,
// index 0 = ground).
struct SingleQubitOps {
    fock::SparseOperator lowering;
    fock::SparseOperator raising;
    fock::SparseOperator number;
};
SingleQubitOps single_qubit_ops();

// Collective a^+- = sum_i q_i^+- and N = sum_i N_{q_i} on dimension 2^k.
struct CollectiveOps {
    fock::SparseOperator lowering;
    fock::SparseOperator raising;
    fock::SparseOperator number;
};
CollectiveOps collective_ops(int k, int cap = kDefaultCap);

// Symmetric Dicke state with n excitations: the normalized uniform
// superposition over the C(k,n) weight-n bitstrings.
MultiQubitVector dicke_state(int k, int n, int cap = kDefaultCap);

MultiQubitVector apply(const fock::SparseOperator& op, const MultiQubitVector& v);
// Amplitudes are real, so this is the symmetric bilinear pairing.
Radical inner(const MultiQubitVector& a, const MultiQubitVector& b);

// Full qukit relation suite: nilpotency of the collective ladders, the
// Dicke ladder actions and (a^+)^n prefactors, the commutator on the full
// 2^k space, the parafermion trilinears with their realized signs, and the
// entrywise match with the rank-1 Fock matrices on the Dicke span.
CheckReport verify_qukit(int k, int cap = kDefaultCap);

}  // namespace whg::qukit
