#include "whg/fock.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using whg::Int;
using whg::Radical;
using whg::Rational;
namespace fk = whg::fock;

namespace {

// Brute-force enumeration oracle: every tuple in [0..k]^r with sum <= k.
std::set<std::vector<int>> enumerate_oracle(int r, int k) {
    std::set<std::vector<int>> states;
    std::vector<int> current(r, 0);
    while (true) {
        int sum = 0;
        for (int v : current) sum += v;
        if (sum <= k) states.insert(current);
        int pos = r - 1;
        while (pos >= 0 && current[pos] == k) {
            current[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++current[pos];
    }
    return states;
}

Radical sqrt_int(const Int& m) { return Radical::sqrt_int(1, m); }

}  // namespace

TEST_CASE("basis enumeration against the brute-force oracle") {
    CHECK(fk::basis(2, 2).size() == 6);
    CHECK(fk::basis(1, 1).size() == 2);
    CHECK(fk::basis(3, 4).size() == static_cast<int>(enumerate_oracle(3, 4).size()));
    CHECK(fk::basis(3, 4).size() == 35);

    for (int r = 1; r <= 4; ++r) {
        for (int k = 1; k <= 6; ++k) {
            const fk::FockBasis b(r, k);
            const auto oracle = enumerate_oracle(r, k);
            REQUIRE(b.size() == static_cast<int>(oracle.size()));
            CHECK(Int(b.size()) == whg::binomial(k + r, r));
            std::set<std::vector<int>> listed;
            for (const auto& state : b.states()) listed.insert(state.n);
            CHECK(listed == oracle);
        }
    }
}

TEST_CASE("graded-lex ordering") {
    const fk::FockBasis b(2, 2);
    const std::vector<std::vector<int>> expected = {{0, 0}, {0, 1}, {1, 0},
                                                    {0, 2}, {1, 1}, {2, 0}};
    REQUIRE(b.size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(b.state(i).n == expected[i]);
        CHECK(b.index_of(b.state(i)) == i);
    }
}

TEST_CASE("basis rejects degenerate parameters") {
    CHECK_THROWS_AS(fk::basis(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(fk::basis(2, 0), std::invalid_argument);
}

TEST_CASE("structure function") {
    CHECK(fk::structure_function(1, fk::MultiIndex{{1}}, 2) == Rational(2));
    CHECK(fk::structure_function(2, fk::MultiIndex{{3, 0, 1}}, 5) == Rational(0));
    CHECK(fk::structure_function(1, fk::MultiIndex{{1, 1}}, 2) == Rational(1));
    CHECK_THROWS_AS(fk::structure_function(3, fk::MultiIndex{{1, 1}}, 2),
                    std::invalid_argument);
}

TEST_CASE("qubit ladder matrices by hand") {
    const fk::FockBasis b(1, 1);
    fk::SparseOperator expected_raise(2);
    expected_raise.set(1, 0, Radical(1));
    CHECK(fk::creation(1, b) == expected_raise);
    fk::SparseOperator expected_lower(2);
    expected_lower.set(0, 1, Radical(1));
    CHECK(fk::annihilation(1, b) == expected_lower);
}

TEST_CASE("ladder amplitudes") {
    const fk::FockBasis b(1, 2);
    // a^- |2> = sqrt(2 * (2 + 1 - 2)) |1>
    CHECK(fk::annihilation(1, b).at(1, 2) == sqrt_int(2));
    // a^- kills the vacuum: column 0 empty.
    const auto lower = fk::annihilation(1, b);
    for (const auto& [pos, value] : lower.entries()) {
        CHECK(pos.second != 0);
    }
}

TEST_CASE("creation is the transpose of annihilation") {
    for (int r = 1; r <= 3; ++r) {
        for (int k = 1; k <= 5; ++k) {
            const fk::FockBasis b(r, k);
            for (int i = 1; i <= r; ++i) {
                CHECK(fk::creation(i, b) == fk::annihilation(i, b).transpose());
            }
        }
    }
}

TEST_CASE("commutator basics") {
    const fk::FockBasis b(2, 3);
    const auto a1 = fk::annihilation(1, b);
    CHECK(fk::commutator(a1, a1).is_zero());
    CHECK(fk::commutator(fk::number(1, b), fk::creation(1, b)) == fk::creation(1, b));
    CHECK(fk::commutator(fk::creation(1, b), fk::creation(2, b)).is_zero());
}

TEST_CASE("defining relations hold") {
    CHECK(fk::verify_wh_relations(1, 1).passed());
    CHECK(fk::verify_wh_relations(2, 3).passed());
    CHECK(fk::verify_wh_relations(3, 2).passed());
}

TEST_CASE("basis check report") {
    for (int r = 1; r <= 4; ++r) {
        for (int k = 1; k <= 5; ++k) {
            CHECK(fk::basis_check(r, k).passed());
        }
    }
}

TEST_CASE("su generators") {
    const auto g = fk::su_generators(2, 3);
    CHECK(g.count() == 2 * (2 + 2));

    // [a_1^+, a_2^-] |0,1> = sqrt(1 * (0+1)) |1,0>
    const fk::FockBasis b(2, 3);
    const auto& mixed = g.mixed.at({1, 2});
    const int col = b.index_of(fk::MultiIndex{{0, 1}});
    const int row = b.index_of(fk::MultiIndex{{1, 0}});
    CHECK(mixed.at(row, col) == Radical(1));

    // H_1 at r=1 is diag((k-2n)/2).
    const fk::FockBasis b1(1, 4);
    const auto g1 = fk::su_generators(1, 4);
    for (int n = 0; n <= 4; ++n) {
        CHECK(g1.cartan[0].at(n, n) == Radical(Rational(4 - 2 * n, 2)));
    }

    for (const auto& [modes, op] : g.mixed) CHECK(op.trace().is_zero());

    CHECK(fk::su_generators_check(2, 3).passed());
    CHECK(fk::su_generators_check(3, 2).passed());
}

TEST_CASE("cartan matrix") {
    const auto a = fk::cartan_matrix(3);
    const std::vector<std::vector<int>> expected = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    CHECK(a == expected);
}

TEST_CASE("chevalley-serre relations") {
    CHECK(fk::serre_check(2, 1).passed());  // 3-dimensional fundamental
    CHECK(fk::serre_check(2, 2).passed());  // 6-dimensional
    CHECK(fk::serre_check(3, 2).passed());
    CHECK(fk::serre_check(1, 3).passed());
}

TEST_CASE("commuting ladders") {
    for (int r = 1; r <= 3; ++r) {
        for (int k = 1; k <= 4; ++k) {
            const fk::FockBasis b(r, k);
            const auto ladders = fk::commuting_ladders(r, k);
            for (int i = 1; i <= r; ++i) {
                CHECK(ladders.lowering[i - 1] == fk::annihilation(i, b));
            }
        }
    }
    const auto ladders = fk::commuting_ladders(2, 3);
    CHECK(fk::power(ladders.lowering[0], 4).is_zero());
    CHECK(fk::commutator(ladders.lowering[0], ladders.lowering[1]).is_zero());
    CHECK(fk::commuting_ladders_check(2, 3).passed());
    CHECK(fk::commuting_ladders_check(3, 2).passed());
}

TEST_CASE("large-k contraction") {
    CHECK(fk::large_k_deviation(1, 10, 0) == Rational(0));
    CHECK(fk::large_k_deviation(1, 100, 3) == Rational(6, 100));
    CHECK(fk::large_k_deviation(1, 50, 3) == Rational(6, 50));
    CHECK(fk::large_k_deviation(2, 50, 2) == Rational(4, 50));
    CHECK(fk::large_k_deviation(2, 50, 2) <= Rational(2 * 2, 50));
    CHECK_THROWS_AS(fk::large_k_deviation(1, 5, 5), std::invalid_argument);
    CHECK(fk::large_k_check(2, 50, 2).passed());
}

TEST_CASE("operator algebra guards") {
    fk::SparseOperator a(2);
    fk::SparseOperator b(3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(fk::commutator(a, b), std::invalid_argument);
    CHECK_THROWS_AS(a.at(2, 0), std::out_of_range);
}

TEST_CASE("violation witnesses") {
    fk::SparseOperator deviation(2);
    CHECK_FALSE(fk::max_violation(deviation).has_value());
    deviation.set(0, 1, Radical::sqrt_int(1, 2));
    deviation.set(1, 0, Radical(-2));
    CHECK(fk::max_violation(deviation) == "-2 at (1,0)");

    whg::CheckReport report{.check = "demo", .rank = 1, .level = 1};
    report.require("always true", true);
    report.require("always false", false, *fk::max_violation(deviation));
    CHECK_FALSE(report.passed());
    CHECK(report.max_deviation() == "-2 at (1,0)");
    CHECK_FALSE(report.details[0].witness.has_value());
    CHECK(report.details[1].witness == "-2 at (1,0)");
}

TEST_CASE("operator dump format") {
    const fk::FockBasis b(1, 2);
    // a^-|1> = sqrt(1*(2+1-1))|0> and a^-|2> = sqrt(2*(2+1-2))|1>.
    const std::string dump = fk::annihilation(1, b).dump(b);
    CHECK(dump == "(0) (1) sqrt(2)\n(1) (2) sqrt(2)\n");
}
