#include <doctest.h>

#include <numeric>
#include <set>

#include "cmdual/trits.hpp"

using namespace cm;

TEST_CASE("residue maps integers into [0, 3^n - 1)") {
    CHECK(TernaryIndex::residue(3, 8).str() == "00000010");
    CHECK(TernaryIndex::residue(-1, 2).value == 7);
    CHECK(TernaryIndex::residue(-1, 2).str() == "21");
    CHECK(TernaryIndex::residue(8, 2).value == 0);
    CHECK(TernaryIndex::residue(pow3(5) - 1, 5).value == 0);
    // Residue is idempotent and matches plain mod for non-negative inputs.
    for (Int j = 0; j < 80; ++j)
        CHECK(TernaryIndex::residue(j, 4).value == j % 80);
}

TEST_CASE("string round-trip is most-significant-first") {
    const auto j = TernaryIndex::from_string("0121");
    CHECK(j.n == 4);
    CHECK(j.value == 1 * 9 + 2 * 3 + 1);
    CHECK(j.str() == "0121");
    CHECK_THROWS_AS(TernaryIndex::from_string("0131"), Error);
}

TEST_CASE("neg is the additive inverse modulo 3^n - 1") {
    CHECK(neg(TernaryIndex::from_string("01")).str() == "21");
    CHECK(neg(TernaryIndex::from_string("00")).str() == "00");
    const auto m = neg(TernaryIndex::residue(3, 8));
    CHECK(m.str() == "22222212");
    CHECK((3 + m.value) % (pow3(8) - 1) == 0);
    for (Int j = 1; j < 80; ++j) {
        const auto r = TernaryIndex::residue(j, 4);
        CHECK((r.value + neg(r).value) % 80 == 0);
    }
}

TEST_CASE("weight, N2 and sigma") {
    CHECK(weight(TernaryIndex::residue(0, 3)) == 0);
    CHECK(weight(TernaryIndex::residue(5, 2)) == 3);  // digits 12
    CHECK(weight(TernaryIndex::residue(1094, 8)) == 8); // digits 1111112
    CHECK(n2(TernaryIndex::residue(5, 2)) == 1);
    CHECK(sigma(TernaryIndex::residue(5, 2)) == 2);
    CHECK(n2(TernaryIndex::residue(4, 2)) == 0);   // digits 11
    CHECK(sigma(TernaryIndex::residue(4, 2)) == 1);
    CHECK(n2(TernaryIndex::residue(8, 3)) == 2);   // digits 022
    CHECK(sigma(TernaryIndex::residue(8, 3)) == 4);
    CHECK(weight_mod(1094, 8) == 8);
    CHECK(n2_mod(8, 3) == 2);
    // sigma is the product of digit factorials (0! = 1! = 1, 2! = 2).
    for (Int j = 0; j < 242; ++j) {
        const auto r = TernaryIndex::residue(j, 5);
        Int prod = 1;
        for (auto d : r.digits)
            if (d == 2) prod *= 2;
        CHECK(sigma(r) == prod);
    }
}

TEST_CASE("weight of j plus weight of -j is 2n for nonzero j") {
    for (int n = 2; n <= 4; ++n)
        for (Int j = 1; j < pow3(n) - 1; ++j) {
            const auto r = TernaryIndex::residue(j, n);
            CHECK(weight(r) + weight(neg(r)) == 2 * n);
        }
}

TEST_CASE("add_with_carry solves the cyclic digit relation") {
    const auto r = TernaryIndex::residue(5, 2);
    const auto s = TernaryIndex::residue(5, 2);
    const auto [t, c] = add_with_carry(r, s);
    CHECK(t.value == 2);
    CHECK(c.bits == std::vector<std::uint8_t>{1, 1});
    CHECK(c.weight() == 2);

    const auto [t2, c2] =
        add_with_carry(TernaryIndex::residue(1, 2), TernaryIndex::residue(3, 2));
    CHECK(t2.value == 4);
    CHECK(c2.weight() == 0);

    const auto [t0, c0] =
        add_with_carry(TernaryIndex::residue(0, 3), TernaryIndex::residue(0, 3));
    CHECK(t0.value == 0);
    CHECK(c0.weight() == 0);
}

TEST_CASE("add_with_carry satisfies t_i + 3c_i = r_i + s_i + c_{i-1} exhaustively") {
    for (int n = 2; n <= 3; ++n) {
        const Int mod = pow3(n) - 1;
        for (Int rv = 0; rv < mod; ++rv)
            for (Int sv = 0; sv < mod; ++sv) {
                const auto r = TernaryIndex::residue(rv, n);
                const auto s = TernaryIndex::residue(sv, n);
                const auto [t, c] = add_with_carry(r, s);
                REQUIRE(t.value == (rv + sv) % mod);
                for (int i = 0; i < n; ++i) {
                    const int prev = c.bits[static_cast<std::size_t>((i + n - 1) % n)];
                    REQUIRE(t.digits[static_cast<std::size_t>(i)] +
                                3 * c.bits[static_cast<std::size_t>(i)] ==
                            r.digits[static_cast<std::size_t>(i)] +
                                s.digits[static_cast<std::size_t>(i)] + prev);
                }
                // Weight bookkeeping: wt(r)+wt(s) = wt(t) + 2*wt(c).
                REQUIRE(weight(r) + weight(s) == weight(t) + 2 * c.weight());
            }
    }
}

TEST_CASE("digit predicates match the weight identities") {
    // wt_sum_eq <=> wt(r)+wt(s) == wt(r+s); wt_sum_plus2 <=> ... == wt(r+s)+2.
    for (int n = 2; n <= 4; ++n) {
        const Int mod = pow3(n) - 1;
        for (Int rv = 0; rv < mod; ++rv)
            for (Int sv = 0; sv < mod; ++sv) {
                const auto r = TernaryIndex::residue(rv, n);
                const auto s = TernaryIndex::residue(sv, n);
                const auto t = TernaryIndex::residue(rv + sv, n);
                const int lhs = weight(r) + weight(s);
                REQUIRE(wt_sum_eq(r, s) == (lhs == weight(t)));
                REQUIRE(wt_sum_plus2(r, s) == (lhs == weight(t) + 2));
            }
    }
}

TEST_CASE("cyclotomic cosets") {
    const auto c3 = coset_of(3, 2);
    CHECK(c3.leader == 1);
    CHECK(std::set<Int>(c3.members.begin(), c3.members.end()) == std::set<Int>{1, 3});
    const auto c4 = coset_of(4, 2);
    CHECK(c4.leader == 4);
    CHECK(c4.members == std::vector<Int>{4});
    const auto c0 = coset_of(0, 2);
    CHECK(c0.leader == 0);
    CHECK(c0.members == std::vector<Int>{0});

    CHECK(coset_leaders(2) == std::vector<Int>{0, 1, 2, 4, 5});
    CHECK(coset_leaders(1) == std::vector<Int>{0, 1});
    CHECK(coset_leaders(3).size() == 10);
}

TEST_CASE("coset leaders partition the residues") {
    for (int n = 2; n <= 5; ++n) {
        std::set<Int> seen;
        for (Int lead : coset_leaders(n)) {
            const auto c = coset_of(lead, n);
            CHECK(c.leader == lead);
            for (Int m : c.members) {
                CHECK(!seen.count(m));
                seen.insert(m);
            }
            // Members all share the same ternary weight.
            for (Int m : c.members) CHECK(weight_mod(m, n) == weight_mod(lead, n));
        }
        CHECK(static_cast<Int>(seen.size()) == pow3(n) - 1);
    }
}
