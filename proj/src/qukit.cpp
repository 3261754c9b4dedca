#include "whg/qukit.hpp"

#include <stdexcept>

namespace whg::qukit {

using fock::SparseOperator;

void check_qubit_count(int k, int cap) {
    if (k < 1) throw std::invalid_argument("qubit count must be >= 1");
    if (k > cap) throw std::invalid_argument("qubit count beyond cap");
}

std::string bitstring_str(std::uint32_t bits, int k) {
    std::string out;
    for (int i = 0; i < k; ++i) out += (bits >> i) & 1u ? '+' : '-';
    return out;
}

MultiQubitVector::MultiQubitVector(int k, int cap) : k_(k) { check_qubit_count(k, cap); }

Radical MultiQubitVector::amplitude(std::uint32_t bits) const {
    auto it = amplitudes_.find(bits);
    return it == amplitudes_.end() ? Radical() : it->second;
}

void MultiQubitVector::add(std::uint32_t bits, const Radical& value) {
    if (bits >= (1u << k_)) throw std::out_of_range("bitstring out of range");
    if (value.is_zero()) return;
    auto [it, inserted] = amplitudes_.emplace(bits, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) amplitudes_.erase(it);
    }
}

MultiQubitVector& MultiQubitVector::operator+=(const MultiQubitVector& other) {
    if (k_ != other.k_) throw std::invalid_argument("qubit count mismatch");
    for (const auto& [bits, value] : other.amplitudes_) add(bits, value);
    return *this;
}

MultiQubitVector& MultiQubitVector::operator-=(const MultiQubitVector& other) {
    if (k_ != other.k_) throw std::invalid_argument("qubit count mismatch");
    for (const auto& [bits, value] : other.amplitudes_) add(bits, -value);
    return *this;
}

MultiQubitVector MultiQubitVector::scaled(const Radical& factor) const {
    MultiQubitVector result(k_, k_);
    for (const auto& [bits, value] : amplitudes_) result.add(bits, value * factor);
    return result;
}

std::string MultiQubitVector::dump() const {
    std::string out;
    for (const auto& [bits, value] : amplitudes_) {
        out += bitstring_str(bits, k_) + " " + value.str() + "\n";
    }
    return out;
}

SingleQubitOps single_qubit_ops() {
    SparseOperator lowering(2);
    lowering.set(0, 1, Radical(1));
    SparseOperator raising(2);
    raising.set(1, 0, Radical(1));
    SparseOperator number(2);
    number.set(1, 1, Radical(1));
    return SingleQubitOps{lowering, raising, number};
}

CollectiveOps collective_ops(int k, int cap) {
    check_qubit_count(k, cap);
    const std::uint32_t dim = 1u << k;
    SparseOperator lowering(static_cast<int>(dim));
    SparseOperator raising(static_cast<int>(dim));
    SparseOperator number(static_cast<int>(dim));
    for (std::uint32_t bits = 0; bits < dim; ++bits) {
        for (int i = 0; i < k; ++i) {
            const std::uint32_t bit = 1u << i;
            if (bits & bit) {
                lowering.add(static_cast<int>(bits & ~bit), static_cast<int>(bits), Radical(1));
            } else {
                raising.add(static_cast<int>(bits | bit), static_cast<int>(bits), Radical(1));
            }
        }
        number.set(static_cast<int>(bits), static_cast<int>(bits),
                   Radical(__builtin_popcount(bits)));
    }
    return CollectiveOps{lowering, raising, number};
}

MultiQubitVector dicke_state(int k, int n, int cap) {
    check_qubit_count(k, cap);
    if (n < 0 || n > k) throw std::invalid_argument("excitation count out of range");
    MultiQubitVector v(k, cap);
    const Radical amplitude = Radical::sqrt_rational(Rational(1, binomial(k, n)));
    const std::uint32_t dim = 1u << k;
    for (std::uint32_t bits = 0; bits < dim; ++bits) {
        if (__builtin_popcount(bits) == n) v.add(bits, amplitude);
    }
    return v;
}

MultiQubitVector apply(const SparseOperator& op, const MultiQubitVector& v) {
    MultiQubitVector result(v.qubit_count(), v.qubit_count());
    for (const auto& [pos, value] : op.entries()) {
        const Radical amp = v.amplitude(static_cast<std::uint32_t>(pos.second));
        if (!amp.is_zero()) result.add(static_cast<std::uint32_t>(pos.first), value * amp);
    }
    return result;
}

Radical inner(const MultiQubitVector& a, const MultiQubitVector& b) {
    Radical sum;
    for (const auto& [bits, value] : a.amplitudes()) {
        sum += value * b.amplitude(bits);
    }
    return sum;
}

CheckReport verify_qukit(int k, int cap) {
    check_qubit_count(k, cap);
    CheckReport report{.check = "qukit", .rank = 1, .level = k};
    const auto [lower, raise, num] = collective_ops(k, cap);
    const int dim = 1 << k;

    report.require("(a+)^(k+1) == 0 on (C^2)^k", power(raise, k + 1).is_zero());
    report.require("(a-)^(k+1) == 0 on (C^2)^k", power(lower, k + 1).is_zero());

    std::vector<MultiQubitVector> dicke;
    for (int n = 0; n <= k; ++n) dicke.push_back(dicke_state(k, n, cap));

    report.require("a- |--...-> == 0", apply(lower, dicke[0]).is_zero());

    {
        bool ok = true;
        MultiQubitVector state = dicke[0];
        Radical prefactor(1);
        for (int n = 1; n <= k && ok; ++n) {
            state = apply(raise, state);
            prefactor = Radical::sqrt_rational(
                Rational(factorial(n) * factorial(k), factorial(k - n)));
            ok = state == dicke[n].scaled(prefactor);
        }
        report.require("(a+)^n |0> == sqrt(n!k!/(k-n)!) |D_n> for n = 1..k", ok);
    }

    {
        bool raising_ok = true;
        bool lowering_ok = true;
        bool number_ok = true;
        for (int n = 0; n <= k; ++n) {
            const auto f = [k](int m) { return Int(m) * Int(k + 1 - m); };
            const MultiQubitVector up = apply(raise, dicke[n]);
            const MultiQubitVector expected_up =
                n == k ? MultiQubitVector(k, cap)
                       : dicke[n + 1].scaled(Radical::sqrt_int(1, f(n + 1)));
            if (!(up == expected_up)) raising_ok = false;

            const MultiQubitVector down = apply(lower, dicke[n]);
            const MultiQubitVector expected_down =
                n == 0 ? MultiQubitVector(k, cap)
                       : dicke[n - 1].scaled(Radical::sqrt_int(1, f(n)));
            if (!(down == expected_down)) lowering_ok = false;

            if (!(apply(num, dicke[n]) == dicke[n].scaled(Radical(n)))) number_ok = false;
        }
        report.require("a+ |D_n> == sqrt(F(n+1)) |D_{n+1}>", raising_ok);
        report.require("a- |D_n> == sqrt(F(n)) |D_{n-1}>", lowering_ok);
        report.require("a+ |D_k> == 0", apply(raise, dicke[k]).is_zero());
        report.require("N |D_n> == n |D_n>", number_ok);
    }

    {
        SparseOperator rhs = SparseOperator::identity(dim).scaled(Radical(k));
        rhs -= num.scaled(Radical(2));
        report.require("[a-,a+] == k*I - 2N on the full 2^k space",
                       commutator(lower, raise) == rhs);
    }

    {
        const SparseOperator inner_comm = commutator(raise, lower);  // realized: 2N - k*I
        report.require("[a-,[a+,a-]] == 2 a- (realized sign +)",
                       commutator(lower, inner_comm) == lower.scaled(Radical(2)));
        report.require("[a+,[a+,a-]] == -2 a+ (realized sign -)",
                       commutator(raise, inner_comm) == raise.scaled(Radical(-2)));
        report.notes.push_back(
            "realized commutators: [a-,a+] = k*I - 2N, [a+,a-] = 2N - k*I; "
            "trilinears close with signs +2a-, -2a+");
    }

    {
        // Restriction to the Dicke span, entry for entry against the rank-1
        // Fock matrices.
        const fock::FockBasis b(1, k);
        SparseOperator restricted_lower(k + 1);
        SparseOperator restricted_raise(k + 1);
        SparseOperator restricted_num(k + 1);
        for (int n = 0; n <= k; ++n) {
            for (int m = 0; m <= k; ++m) {
                restricted_lower.add(m, n, inner(dicke[m], apply(lower, dicke[n])));
                restricted_raise.add(m, n, inner(dicke[m], apply(raise, dicke[n])));
                restricted_num.add(m, n, inner(dicke[m], apply(num, dicke[n])));
            }
        }
        report.require("Dicke-restricted a- == fock annihilation (r=1)",
                       restricted_lower == fock::annihilation(1, b));
        report.require("Dicke-restricted a+ == fock creation (r=1)",
                       restricted_raise == fock::creation(1, b));
        report.require("Dicke-restricted N == fock number (r=1)",
                       restricted_num == fock::number(1, b));
    }

    return report;
}

}  // namespace whg::qukit
