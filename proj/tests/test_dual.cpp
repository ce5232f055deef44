#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cmdual/dual.hpp"
#include "cmdual/walsh.hpp"

using namespace cm;

TEST_CASE("derived parameters for the worked cases") {
    auto p = derive_params(8, 7);
    CHECK(p.d == 1094);
    CHECK(p.w == 7);
    CHECK(p.parity_count == 6);
    CHECK(p.branch() == Branch::Even);

    p = derive_params(9, 7);
    CHECK(p.w == 4);
    CHECK(p.parity_count == 3);
    CHECK(p.branch() == Branch::Odd);

    p = derive_params(9, 5);
    CHECK(p.d == 122);
    CHECK(p.w == 2);
    CHECK(p.parity_count == 1);

    CHECK_THROWS_AS(derive_params(6, 3), BadParameters);
    CHECK_THROWS_AS(derive_params(5, 4), BadParameters);
}

TEST_CASE("w is the inverse of k modulo n, for large n too") {
    for (int n = 2; n <= 50; ++n)
        for (int k = 1; k < n; k += 2) {
            if (std::gcd(n, k) != 1) continue;
            const auto wp = derive_wparity(n, k);
            CHECK((wp.w * k) % n == 1 % n);
            CHECK(wp.w >= 1);
            CHECK(wp.w < n);
        }
}

TEST_CASE("no-consecutive-2 counting sequence") {
    CHECK(fib_count(-2) == 0);
    CHECK(fib_count(-1) == 1);
    CHECK(fib_count(0) == 1);
    CHECK(fib_count(1) == 2);
    CHECK(fib_count(2) == 3);
    CHECK(fib_count(5) == 13);
    for (int f = 0; f <= 30; ++f)
        CHECK(fib_count(f) == fib_count(f - 1) + fib_count(f - 2));
    CHECK_THROWS_AS(fib_count(-3), BadParameters);

    // Direct meaning: strings over {0,2} of length f without "22".
    for (int f = 1; f <= 12; ++f) {
        Int direct = 0;
        for (Int mask = 0; mask < (Int{1} << f); ++mask)
            if ((mask & (mask >> 1)) == 0) ++direct;
        CHECK(direct == fib_count(f));
    }
}

TEST_CASE("index set sizes follow the closed form") {
    for (int n = 3; n <= 11; ++n)
        for (int k = 1; k < n; k += 2) {
            if (!cm_params_valid(n, k)) continue;
            const auto p = derive_params(n, k);
            const auto sets = gen_sets(p);
            const int m = p.branch() == Branch::Even ? p.w : n - p.w;
            CHECK(static_cast<Int>(sets.U.size()) == fib_count(m - 2));
            CHECK(static_cast<Int>(sets.V.size()) == fib_count(m - 3));
            CHECK(count_sets_enumerated(p) ==
                  static_cast<Int>(sets.U.size() + sets.V.size()));
            // Members are distinct, sorted, and within range.
            for (const auto& set : {sets.U, sets.V}) {
                CHECK(std::is_sorted(set.begin(), set.end(),
                                     [](const TernaryIndex& a, const TernaryIndex& b) {
                                         return a.value < b.value;
                                     }));
                for (const auto& j : set) {
                    CHECK(j.n == n);
                    CHECK(j.value > 0);
                    CHECK(j.value < pow3(n) - 1);
                }
            }
        }
}

TEST_CASE("brute-force S0/S1 match the worked cardinalities") {
    auto [s0a, s1a] = brute_S0_S1(derive_params(8, 7));
    CHECK(s0a.size() == 104);
    CHECK(s1a.size() == 64);
    auto [s0b, s1b] = brute_S0_S1(derive_params(9, 7));
    CHECK(s0b.size() == 45);
    CHECK(s1b.size() == 27);
    for (Int j : s0a) CHECK(!s1a.count(j));
    CHECK_THROWS_AS(brute_S0_S1(derive_params(13, 3)), SizeLimit);
}

TEST_CASE("S0 and S1 are the coset closures of U and V") {
    for (auto [n, k] : {std::pair{8, 7}, {9, 5}, {7, 3}}) {
        const auto p = derive_params(n, k);
        const auto sets = gen_sets(p);
        const auto [s0, s1] = brute_S0_S1(p);
        auto closure = [&](const std::vector<TernaryIndex>& set) {
            std::set<Int> out;
            for (const auto& j : set) {
                const auto c = coset_of(j.value, n);
                CHECK(c.members.size() == static_cast<std::size_t>(n));
                out.insert(c.members.begin(), c.members.end());
            }
            return out;
        };
        CHECK(closure(sets.U) == s0);
        CHECK(closure(sets.V) == s1);
        CHECK(s0.size() == static_cast<std::size_t>(n) * sets.U.size());
        CHECK(s1.size() == static_cast<std::size_t>(n) * sets.V.size());
    }
}

TEST_CASE("sigma products over S0 and S1") {
    const auto p = derive_params(8, 7);
    const auto [s0, s1] = brute_S0_S1(p);
    const Int mod = pow3(8) - 1;
    auto sig_prod = [&](Int j) {
        const Int njd = ((mod - (j * p.d) % mod) % mod);
        return sigma(TernaryIndex::residue(j, 8)) * sigma(TernaryIndex::residue(njd, 8));
    };
    for (Int j : s0) CHECK(sig_prod(j) == Int{1} << (n2_mod(j, 8) + 1));
    for (Int j : s1) CHECK(sig_prod(j) == Int{1} << n2_mod(j, 8));
}

TEST_CASE("trace representation of the dual") {
    const FieldCtx ctx(9);
    const auto rep = dual_representation(ctx, ctx.generator(), 7);
    CHECK(rep.terms.size() == 8);
    CHECK(rep.params.w == 4);
    // Terms are sorted by exponent and land in distinct full-size cosets.
    std::set<Int> leaders;
    Int prev = -1;
    for (const auto& t : rep.terms) {
        CHECK(t.exponent.value > prev);
        prev = t.exponent.value;
        const auto c = coset_of(t.exponent.value, 9);
        CHECK(c.members.size() == 9);
        CHECK(leaders.insert(c.leader).second);
        CHECK((t.sign == 1 || t.sign == -1));
        CHECK(!t.coeff.is_zero());
        // exponent == -j*d
        const Int mod = pow3(9) - 1;
        CHECK((t.exponent.value + t.j.value % mod * (rep.params.d % mod)) % mod == 0);
    }
    CHECK_THROWS_AS(dual_representation(ctx, ctx.zero(), 7), ZeroArgument);
}

TEST_CASE("signs follow the N2 parity rule") {
    const FieldCtx ctx(8);
    const auto rep = dual_representation(ctx, ctx.one(), 7);
    CHECK(rep.terms.size() == 21);
    const auto sets = gen_sets(rep.params);
    std::set<Int> uvals, vvals;
    for (const auto& j : sets.U) uvals.insert(j.value);
    for (const auto& j : sets.V) vvals.insert(j.value);
    for (const auto& t : rep.terms) {
        if (uvals.count(t.j.value))
            CHECK(t.sign == (n2(t.j) % 2 == 0 ? -1 : 1));
        else if (vvals.count(t.j.value))
            CHECK(t.sign == (n2(t.j) % 2 == 0 ? 1 : -1));
        else
            FAIL("term index not in U or V");
    }
}

TEST_CASE("k = 1 collapses to a single quadratic term") {
    const FieldCtx ctx(4);
    const auto rep = dual_representation(ctx, ctx.generator(), 1);
    CHECK(rep.terms.size() == 1);
    CHECK(algebraic_degree(rep) == 2);
}

TEST_CASE("dual table equals pointwise evaluation") {
    const FieldCtx ctx(5);
    for (const char* as : {"1", "g"}) {
        const auto a = ctx.parse(as);
        const auto rep = dual_representation(ctx, a, 3);
        const auto tab = dual_table(ctx, rep);
        REQUIRE(static_cast<Int>(tab.size()) == ctx.size());
        CHECK(tab[0] == 0);
        for (Int i = 0; i < ctx.size(); ++i)
            REQUIRE(tab[static_cast<std::size_t>(i)] ==
                    eval_dual(ctx, rep, ctx.element_at(i)));
    }
}

TEST_CASE("universal formula agrees with the trace representation") {
    const FieldCtx ctx(5);
    for (const char* as : {"1", "g", "g^2"}) {
        const auto a = ctx.parse(as);
        const auto rep = dual_representation(ctx, a, 3);
        const auto utab = universal_dual_table(ctx, a, 3);
        const auto dtab = dual_table(ctx, rep);
        REQUIRE(utab == dtab);
        for (Int i = 0; i < ctx.size(); i += 17)
            REQUIRE(universal_dual(ctx, a, 3, ctx.element_at(i)) ==
                    static_cast<int>(utab[static_cast<std::size_t>(i)]));
    }
}

TEST_CASE("three-term formulas at small sizes") {
    {
        // n = 5 = 3*1+2, k = 3 = 2*1+1: first variant with t = 1.
        const FieldCtx ctx(5);
        const auto a = ctx.generator();
        const auto rep = dual_representation(ctx, a, 3);
        CHECK(rep.terms.size() == 3);
        for (Int i = 0; i < ctx.size(); ++i)
            REQUIRE(three_term_dual(ctx, a, ThreeTermVariant::One, 1,
                                    ctx.element_at(i)) ==
                    eval_dual(ctx, rep, ctx.element_at(i)));
    }
    {
        // n = 7 = 3*2+1, k = 5 = 2*2+1: second variant with t = 2.
        const FieldCtx ctx(7);
        const auto a = ctx.parse("g^3");
        const auto rep = dual_representation(ctx, a, 5);
        CHECK(rep.terms.size() == 3);
        for (Int i = 0; i < ctx.size(); ++i)
            REQUIRE(three_term_dual(ctx, a, ThreeTermVariant::Two, 2,
                                    ctx.element_at(i)) ==
                    eval_dual(ctx, rep, ctx.element_at(i)));
    }
    const FieldCtx ctx(5);
    CHECK(three_term_dual(ctx, ctx.one(), ThreeTermVariant::One, 1, ctx.zero()) == 0);
    CHECK_THROWS_AS(three_term_dual(ctx, ctx.one(), ThreeTermVariant::Two, 1,
                                    ctx.one()),
                    BadParameters);
    CHECK_THROWS_AS(three_term_dual(ctx, ctx.one(), ThreeTermVariant::One, 0,
                                    ctx.one()),
                    BadParameters);
}

TEST_CASE("divisibility family classification") {
    // (9, 5): k | n+1 with quotient 2.
    auto fams = classify_special(9, 5);
    bool found = false;
    for (const auto& f : fams)
        if (f.family == "k|n+1") {
            found = true;
            CHECK(f.w == 2);
            CHECK(f.parity_count == 1);
            CHECK(f.term_count == 21);
        }
    CHECK(found);

    // (11, 5): k | n-1 with quotient 2.
    fams = classify_special(11, 5);
    found = false;
    for (const auto& f : fams)
        if (f.family == "k|n-1") {
            found = true;
            CHECK(f.w == 9);
            CHECK(f.parity_count == 4);
            CHECK(f.term_count == 55);
        }
    CHECK(found);

    // (9, 7): (n-k) | n+1, family parameters (m, t) = (5, 1).
    fams = classify_special(9, 7);
    found = false;
    for (const auto& f : fams)
        if (f.family == "(n-k)|n+1") {
            found = true;
            CHECK(f.w == 4);
            CHECK(f.parity_count == 3);
            CHECK(f.term_count == 8);
            CHECK(f.m == 5);
            CHECK(f.t == 1);
        }
    CHECK(found);

    CHECK(classify_special(8, 1).empty());
}

TEST_CASE("family predictions always match the direct computation") {
    for (int n = 3; n <= 50; ++n)
        for (int k = 1; k < n; k += 2) {
            if (std::gcd(n, k) != 1) continue;
            const auto wp = derive_wparity(n, k);
            for (const auto& f : classify_special(n, k)) {
                REQUIRE(f.w == wp.w);
                REQUIRE(f.parity_count == wp.parity_count);
            }
        }
}

TEST_CASE("algebraic degree follows the branch formula") {
    const FieldCtx c8(8);
    CHECK(algebraic_degree(dual_representation(c8, c8.generator(), 7)) == 8);
    const FieldCtx c9(9);
    CHECK(algebraic_degree(dual_representation(c9, c9.generator(), 7)) == 6);
    DualRep empty;
    CHECK_THROWS_AS(algebraic_degree(empty), EmptyRepresentation);
}
