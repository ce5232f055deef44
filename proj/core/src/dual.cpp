#include "cmdual/dual.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cm {

namespace {

Int mulmod_wide(Int a, Int b, Int m) {
    return static_cast<Int>(static_cast<__int128>(a) * b % m);
}

int digit_sum3(Int v) {
    int s = 0;
    while (v) {
        s += static_cast<int>(v % 3);
        v /= 3;
    }
    return s;
}

int count2s(Int v) {
    int s = 0;
    while (v) {
        if (v % 3 == 2) ++s;
        v /= 3;
    }
    return s;
}

// Digit constraints at positions i*k mod n: forced[pos] in {0,1,2} or -1,
// free positions listed in i-order (the order the no-consecutive-2 rule
// follows). Conflicting forced digits return nullopt.
struct ConstraintSpec {
    std::vector<int> forced;
    std::vector<int> free_pos;
};

std::optional<ConstraintSpec> build_constraints(const CmParams& p, bool v_part) {
    const int n = p.n, k = p.k, w = p.w;
    ConstraintSpec spec;
    spec.forced.assign(static_cast<std::size_t>(n), -1);
    bool ok = true;
    auto force = [&](int i, int val) {
        const int pos = static_cast<int>((static_cast<Int>(i) * k) % n);
        if (spec.forced[static_cast<std::size_t>(pos)] == -1)
            spec.forced[static_cast<std::size_t>(pos)] = val;
        else if (spec.forced[static_cast<std::size_t>(pos)] != val)
            ok = false;
    };
    auto free_range = [&](int lo, int hi) {
        for (int i = lo; i <= hi; ++i)
            spec.free_pos.push_back(static_cast<int>((static_cast<Int>(i) * k) % n));
    };

    if (p.branch() == Branch::Even) {
        for (int i = w; i <= n - 1; ++i) force(i, 1);
        if (!v_part) {
            force(0, 0);
            force(w - 1, 0);
            free_range(1, w - 2);
        } else {
            force(0, 2);
            force(1, 0);
            force(w - 1, 0);
            free_range(2, w - 2);
        }
    } else {
        for (int i = 0; i <= w - 1; ++i) force(i, 1);
        if (!v_part) {
            force(w, 0);
            force(n - 1, 0);
            free_range(w + 1, n - 2);
        } else {
            force(w, 0);
            force(n - 2, 0);
            force(n - 1, 2);
            free_range(w + 1, n - 3);
        }
    }
    if (!ok) return std::nullopt;
    // Free positions overlapping a forced digit also mean a conflict.
    for (int pos : spec.free_pos)
        if (spec.forced[static_cast<std::size_t>(pos)] != -1) return std::nullopt;
    return spec;
}

// Visits every digit assignment of the spec, enumerating free positions
// with values {0,2} and no two consecutive 2's along the free order.
void enumerate_spec(const ConstraintSpec& spec,
                    const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> digits(spec.forced.size(), 0);
    for (std::size_t i = 0; i < spec.forced.size(); ++i)
        if (spec.forced[i] != -1) digits[i] = spec.forced[i];

    std::function<void(std::size_t, bool)> rec = [&](std::size_t idx, bool prev2) {
        if (idx == spec.free_pos.size()) {
            visit(digits);
            return;
        }
        const auto pos = static_cast<std::size_t>(spec.free_pos[idx]);
        digits[pos] = 0;
        rec(idx + 1, false);
        if (!prev2) {
            digits[pos] = 2;
            rec(idx + 1, true);
            digits[pos] = 0;
        }
    };
    rec(0, false);
}

std::vector<TernaryIndex> materialize(const CmParams& p, bool v_part) {
    std::vector<TernaryIndex> out;
    auto spec = build_constraints(p, v_part);
    if (!spec) return out;
    enumerate_spec(*spec, [&](const std::vector<int>& digits) {
        Int v = 0;
        for (int i = p.n - 1; i >= 0; --i) v = v * 3 + digits[static_cast<std::size_t>(i)];
        out.push_back(TernaryIndex::residue(v, p.n));
    });
    std::sort(out.begin(), out.end(),
              [](const TernaryIndex& a, const TernaryIndex& b) { return a.value < b.value; });
    return out;
}

Int count_part(const CmParams& p, bool v_part) {
    auto spec = build_constraints(p, v_part);
    if (!spec) return 0;
    Int count = 0;
    enumerate_spec(*spec, [&](const std::vector<int>&) { ++count; });
    return count;
}

Int terms_closed_form(Branch branch, int w, int n) {
    const int m = branch == Branch::Even ? w : n - w;
    return fib_count(m - 2) + fib_count(m - 3);
}

} // namespace

WParity derive_wparity(int n, int k) {
    if (n < 2) throw BadParameters("n must be >= 2");
    if (k < 1 || k >= n) throw BadParameters("k must satisfy 1 <= k < n");
    if (k % 2 == 0) throw BadParameters("k must be odd");
    WParity wp;
    for (int w = 1; w < n; ++w)
        if ((w * k) % n == 1 % n) { wp.w = w; break; }
    if (wp.w == 0) throw BadParameters("k has no inverse modulo n");
    for (int i = 0; i < wp.w; ++i) {
        const int pos = (i * k) % n;
        if (pos >= n - k) ++wp.parity_count;
    }
    return wp;
}

CmParams derive_params(int n, int k) {
    check_cm_params(n, k);
    const WParity wp = derive_wparity(n, k);
    CmParams p;
    p.n = n;
    p.k = k;
    p.d = cm_exponent(k);
    p.w = wp.w;
    p.parity_count = wp.parity_count;
    return p;
}

Int fib_count(int f) {
    if (f < -2) throw BadParameters("fib_count defined for f >= -2");
    if (f == -2) return 0;
    Int a = 0, b = 1; // N(-2), N(-1)
    for (int i = -1; i <= f; ++i) {
        const Int next = a + b;
        a = b;
        b = next;
    }
    return a;
}

IndexSets gen_sets(const CmParams& p) {
    IndexSets sets;
    sets.branch = p.branch();
    sets.U = materialize(p, false);
    sets.V = materialize(p, true);
    return sets;
}

Int count_sets_enumerated(const CmParams& p) {
    return count_part(p, false) + count_part(p, true);
}

std::pair<std::set<Int>, std::set<Int>> brute_S0_S1(const CmParams& p, int max_n) {
    if (p.n > max_n)
        throw SizeLimit("brute-force scan capped at n <= " + std::to_string(max_n));
    const Int mod = pow3(p.n) - 1;
    const Int e3k = pow3(p.k) % mod;
    const Int e3k1 = (e3k + 1) % mod;
    const Int d = p.d % mod;
    auto negr = [&](Int v) { return (mod - v % mod) % mod; };

    std::set<Int> s0, s1;
    for (Int j = 1; j < mod; ++j) {
        const int wj = digit_sum3(j);
        const int w3kj = digit_sum3(mulmod_wide(e3k, j, mod));
        const Int hj = mulmod_wide(e3k1, j, mod);
        const int wh = digit_sum3(hj);
        const int wnjd = digit_sum3(negr(mulmod_wide(d, j, mod)));
        const int wnh = digit_sum3(negr(hj));
        if (wj + w3kj == wh && 2 * wnjd == wnh + 2) s0.insert(j);
        if (wj + w3kj == wh + 2 && 2 * wnjd == wnh) s1.insert(j);
    }
    return {std::move(s0), std::move(s1)};
}

DualRep dual_representation(const FieldCtx& ctx, const FieldElement& a, int k) {
    if (a.is_zero()) throw ZeroArgument("a must be nonzero");
    DualRep rep;
    rep.params = derive_params(ctx.n(), k);
    rep.a = a;
    const int etaa = ctx.eta(a);
    const Int mod = ctx.order();
    const IndexSets sets = gen_sets(rep.params);

    auto emit = [&](const TernaryIndex& j, bool v_part) {
        TraceTerm term;
        term.j = j;
        const int parity = n2(j) % 2;
        term.sign = v_part ? (parity == 0 ? +1 : -1) : (parity == 0 ? -1 : +1);
        const int scalar = term.sign * etaa > 0 ? 1 : 2;
        term.coeff = ctx.scalar_mul(scalar, ctx.pow(a, j.value));
        term.exponent = TernaryIndex::residue(
            (mod - mulmod_wide(j.value % mod, rep.params.d % mod, mod)) % mod, ctx.n());
        rep.terms.push_back(std::move(term));
    };
    for (const auto& j : sets.U) emit(j, false);
    for (const auto& j : sets.V) emit(j, true);
    std::sort(rep.terms.begin(), rep.terms.end(),
              [](const TraceTerm& x, const TraceTerm& y) {
                  return x.exponent.value < y.exponent.value;
              });
    return rep;
}

int eval_dual(const FieldCtx& ctx, const DualRep& rep, const FieldElement& x) {
    if (x.is_zero()) return 0;
    int sum = 0;
    for (const auto& term : rep.terms)
        sum += ctx.trace(ctx.mul(term.coeff, ctx.pow(x, term.exponent.value)));
    return sum % 3;
}

std::vector<std::uint8_t> dual_table(const FieldCtx& ctx, const DualRep& rep) {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(ctx.size()), 0);
    const Int ord = ctx.order();
    if (ctx.has_tables()) {
        // lambda = g^e: each term's argument walks by exponent steps in the
        // discrete-log domain.
        const std::size_t m = rep.terms.size();
        std::vector<Int> cur(m), step(m);
        for (std::size_t t = 0; t < m; ++t) {
            cur[t] = ctx.dlog(rep.terms[t].coeff);
            step[t] = rep.terms[t].exponent.value % ord;
        }
        for (Int e = 0; e < ord; ++e) {
            int sum = 0;
            for (std::size_t t = 0; t < m; ++t) {
                sum += ctx.trace_at(ctx.antilog_at(cur[t]));
                cur[t] += step[t];
                if (cur[t] >= ord) cur[t] -= ord;
            }
            out[static_cast<std::size_t>(ctx.antilog_at(e))] =
                static_cast<std::uint8_t>(sum % 3);
        }
    } else {
        for (Int i = 1; i <= ord; ++i)
            out[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>(eval_dual(ctx, rep, ctx.element_at(i)));
    }
    return out;
}

namespace {

struct UniversalIndex {
    Int j;
    int scalar; // sigma(j) * sigma(-jd) mod 3
};

std::vector<UniversalIndex> universal_index_set(const CmParams& p) {
    const Int mod = pow3(p.n) - 1;
    std::vector<UniversalIndex> out;
    for (Int j = 1; j < mod; ++j) {
        const Int njd = (mod - mulmod_wide(j, p.d % mod, mod)) % mod;
        if (digit_sum3(j) + digit_sum3(njd) != p.n + 1) continue;
        const int scalar =
            static_cast<int>(((Int{1} << count2s(j)) % 3) * ((Int{1} << count2s(njd)) % 3) % 3);
        out.push_back({j, scalar});
    }
    return out;
}

} // namespace

int universal_dual(const FieldCtx& ctx, const FieldElement& a, int k,
                   const FieldElement& lambda, int max_n) {
    check_cm_params(ctx.n(), k);
    if (a.is_zero()) throw ZeroArgument("a must be nonzero");
    if (ctx.n() > max_n)
        throw SizeLimit("universal dual scan capped at n <= " + std::to_string(max_n));
    if (lambda.is_zero()) return 0;

    const CmParams p = derive_params(ctx.n(), k);
    const FieldElement b = ctx.mul(a, ctx.inv(ctx.pow(lambda, p.d)));
    FieldElement sum = ctx.zero();
    for (const auto& [j, scalar] : universal_index_set(p))
        sum = ctx.add(sum, ctx.scalar_mul(scalar, ctx.pow(b, j)));
    for (int i = 1; i < ctx.n(); ++i)
        if (sum.c[static_cast<std::size_t>(i)] != 0)
            throw NotInPrimeSubfield("universal dual sum not in GF(3)");
    const int etaa = ctx.eta(a);
    return (sum.c[0] * (etaa > 0 ? 1 : 2)) % 3;
}

std::vector<std::uint8_t> universal_dual_table(const FieldCtx& ctx,
                                               const FieldElement& a, int k,
                                               int max_n) {
    check_cm_params(ctx.n(), k);
    if (a.is_zero()) throw ZeroArgument("a must be nonzero");
    if (ctx.n() > max_n)
        throw SizeLimit("universal dual scan capped at n <= " + std::to_string(max_n));

    const CmParams p = derive_params(ctx.n(), k);
    const auto idx_set = universal_index_set(p);
    const int etaa = ctx.eta(a);
    std::vector<std::uint8_t> out(static_cast<std::size_t>(ctx.size()), 0);
    const Int ord = ctx.order();

    if (ctx.has_tables()) {
        // lambda = g^e, b = a * g^{-ed}; b^j walks by -d*j per e step.
        const Int la = ctx.dlog(a);
        const std::size_t m = idx_set.size();
        std::vector<Int> cur(m), step(m);
        for (std::size_t t = 0; t < m; ++t) {
            cur[t] = mulmod_wide(la, idx_set[t].j, ord);
            step[t] = (ord - mulmod_wide(p.d % ord, idx_set[t].j, ord)) % ord;
        }
        std::vector<int> accum(static_cast<std::size_t>(ctx.n()));
        for (Int e = 0; e < ord; ++e) {
            std::fill(accum.begin(), accum.end(), 0);
            for (std::size_t t = 0; t < m; ++t) {
                Int v = ctx.antilog_at(cur[t]);
                for (int i = 0; v; ++i, v /= 3)
                    accum[static_cast<std::size_t>(i)] +=
                        idx_set[t].scalar * static_cast<int>(v % 3);
                cur[t] += step[t];
                if (cur[t] >= ord) cur[t] -= ord;
            }
            for (int i = 1; i < ctx.n(); ++i)
                if (accum[static_cast<std::size_t>(i)] % 3 != 0)
                    throw NotInPrimeSubfield("universal dual sum not in GF(3)");
            out[static_cast<std::size_t>(ctx.antilog_at(e))] =
                static_cast<std::uint8_t>((accum[0] % 3) * (etaa > 0 ? 1 : 2) % 3);
        }
    } else {
        for (Int i = 1; i <= ord; ++i)
            out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
                universal_dual(ctx, a, k, ctx.element_at(i), max_n));
    }
    return out;
}

int three_term_dual(const FieldCtx& ctx, const FieldElement& a,
                    ThreeTermVariant variant, int t, const FieldElement& lambda) {
    if (t < 1) throw BadParameters("t must be >= 1");
    if (a.is_zero()) throw ZeroArgument("a must be nonzero");
    const int n = variant == ThreeTermVariant::One ? 3 * t + 2 : 3 * t + 1;
    if (ctx.n() != n) throw BadParameters("field degree does not match variant");
    if (lambda.is_zero()) return 0;

    Int le1, le2, ae1, ae2, ae3;
    if (variant == ThreeTermVariant::One) {
        le1 = pow3(2 * t + 2) + 1;
        ae1 = pow3(2 * t + 2) - pow3(t + 1) + 3;
        le2 = 2 * pow3(2 * t + 1) + pow3(t + 1) + 1;
        ae2 = pow3(2 * t + 2) + pow3(t + 1) + 1;
        ae3 = -pow3(2 * t + 2) + pow3(t + 1) + 3;
    } else {
        le1 = pow3(2 * t + 1) + pow3(t + 1) + 2;
        ae1 = pow3(2 * t + 1) + pow3(t + 1) + 1;
        le2 = pow3(2 * t) + 1;
        ae2 = -pow3(2 * t) + pow3(t) + 1;
        ae3 = -pow3(2 * t + 1) + pow3(t + 1) + 1;
    }
    const FieldElement t1 = ctx.mul(ctx.pow(lambda, le1), ctx.pow(a, -ae1));
    const FieldElement t2 = ctx.mul(ctx.pow(lambda, le2), ctx.pow(a, -ae2));
    const FieldElement t3 = ctx.mul(ctx.pow(lambda, 2), ctx.pow(a, -ae3));
    const FieldElement arg =
        ctx.add(ctx.add(ctx.scalar_mul(2, t1), ctx.scalar_mul(2, t2)), t3);
    return ctx.trace(arg);
}

std::vector<SpecialFamily> classify_special(int n, int k) {
    // Purely combinatorial, so only the shape of (n, k) matters — no
    // field-size cap.
    if (n < 2) throw BadParameters("n must be >= 2");
    if (k < 1 || k >= n) throw BadParameters("k must satisfy 1 <= k < n");
    if (k % 2 == 0) throw BadParameters("k must be odd");
    if (std::gcd(n, k) != 1) throw BadParameters("gcd(n, k) must be 1");
    std::vector<SpecialFamily> families;
    auto push = [&](std::string name, int w, int parity, int m, int t) {
        SpecialFamily f;
        f.family = std::move(name);
        f.w = w;
        f.parity_count = parity;
        f.branch = parity % 2 == 0 ? Branch::Even : Branch::Odd;
        f.term_count = terms_closed_form(f.branch, w, n);
        f.m = m;
        f.t = t;
        families.push_back(std::move(f));
    };

    if (k > 1 && (n + 1) % k == 0)
        push("k|n+1", (n + 1) / k, 1, 0, 0);
    if (k > 1 && (n - 1) % k == 0)
        push("k|n-1", n - (n - 1) / k, k - 1, 0, 0);
    if (k > 1 && k < n - 1 && (n + 1) % (n - k) == 0) {
        const int m = (n + 1) / (n - k);
        const int t = n - k - 1;
        push("(n-k)|n+1", n - m, k - (k + 1) / (n - k),
             (m >= 3 && t >= 1) ? m : 0, (m >= 3 && t >= 1) ? t : 0);
    }
    if (k > 1 && k < n - 1 && (n - 1) % (n - k) == 0) {
        const int m = (n - 1) / (n - k);
        const int t = n - k;
        push("(n-k)|n-1", m, k / (n - k),
             (m >= 3 && t >= 1) ? m : 0, (m >= 3 && t >= 1) ? t : 0);
    }
    return families;
}

int algebraic_degree(const DualRep& rep) {
    if (rep.terms.empty()) throw EmptyRepresentation("dual has no trace terms");
    int deg = 0;
    for (const auto& term : rep.terms) deg = std::max(deg, weight(term.exponent));
    return deg;
}

} // namespace cm
