#include "cmdual/gf3.hpp"

#include <algorithm>
#include <numeric>

namespace cm {

namespace {

using Poly = std::vector<std::uint8_t>; // coefficient of x^i at position i

int degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i]) return i;
    return -1;
}

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& m) {
    const int dm = degree(m);
    int da = degree(a);
    while (da >= dm) {
        const int lead = a[da]; // m is monic
        for (int i = 0; i <= dm; ++i) {
            int v = a[da - dm + i] - lead * m[i];
            a[da - dm + i] = static_cast<std::uint8_t>(((v % 3) + 3) % 3);
        }
        da = degree(a);
    }
    a.resize(static_cast<std::size_t>(std::max(dm, 1)));
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint8_t>((r[i + j] + a[i] * b[j]) % 3);
    }
    return poly_mod(std::move(r), m);
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (degree(b) >= 0) {
        // a mod b, with b normalized to monic
        Poly bm = b;
        const int db = degree(bm);
        const int lead = bm[db];
        if (lead == 2)
            for (auto& c : bm) c = static_cast<std::uint8_t>((c * 2) % 3);
        Poly r = a;
        int dr = degree(r);
        while (dr >= db) {
            const int l = r[dr];
            for (int i = 0; i <= db; ++i) {
                int v = r[dr - db + i] - l * bm[i];
                r[dr - db + i] = static_cast<std::uint8_t>(((v % 3) + 3) % 3);
            }
            dr = degree(r);
        }
        a = std::move(b);
        b = std::move(r);
        trim(b);
    }
    return a;
}

bool is_irreducible(const Poly& m, int n) {
    // distinct-degree sieve: gcd(x^{3^d} - x, m) must be trivial for d <= n/2
    Poly x = {0, 1};
    Poly h = x;
    for (int d = 1; d <= n / 2; ++d) {
        // h <- h^3 mod m
        h = poly_mulmod(poly_mulmod(h, h, m), h, m);
        Poly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint8_t>(((diff[1] - 1) % 3 + 3) % 3);
        Poly g = poly_gcd(diff, m);
        if (degree(g) != 0) return false;
    }
    return true;
}

Int mulmod_wide(Int a, Int b, Int m) {
    return static_cast<Int>(static_cast<__int128>(a) * b % m);
}

std::vector<Int> prime_factors(Int v) {
    std::vector<Int> primes;
    for (Int p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        if (v % p == 0) {
            primes.push_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) primes.push_back(v);
    return primes;
}

} // namespace

bool FieldElement::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](std::uint8_t v) { return v == 0; });
}

std::string FieldElement::str() const {
    const auto n = c.size();
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) s[n - 1 - i] = static_cast<char>('0' + c[i]);
    return s;
}

std::vector<std::uint8_t> FieldCtx::find_irreducible(int n) {
    if (n < 2 || n > kMaxN) throw BadParameters("n must be in [2, 38]");
    // Scan monic degree-n polynomials in ascending order of their
    // most-significant-first coefficient string.
    const Int limit = pow3(n);
    for (Int low = 0; low < limit; ++low) {
        Poly m(static_cast<std::size_t>(n) + 1, 0);
        Int v = low;
        for (int i = 0; i < n; ++i) {
            m[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v % 3);
            v /= 3;
        }
        m[static_cast<std::size_t>(n)] = 1;
        if (m[0] == 0) continue; // divisible by x
        if (is_irreducible(m, n)) return m;
    }
    throw Error("no irreducible polynomial found"); // unreachable
}

FieldCtx::FieldCtx(int n, std::optional<std::vector<std::uint8_t>> modulus)
    : n_(n), order_(0) {
    if (n < 2 || n > kMaxN) throw BadParameters("n must be in [2, 38]");
    order_ = pow3(n) - 1;
    if (modulus) {
        modulus_ = std::move(*modulus);
        if (degree(modulus_) != n)
            throw DegreeMismatch("modulus degree must equal n");
        if (modulus_[static_cast<std::size_t>(n)] != 1)
            throw BadParameters("modulus must be monic");
        modulus_.resize(static_cast<std::size_t>(n) + 1);
        if (!is_irreducible(modulus_, n))
            throw ReducibleModulus("modulus factors over GF(3)");
    } else {
        modulus_ = find_irreducible(n);
    }
    order_primes_ = prime_factors(order_);

    // Generator: ascending scan, order verified against the prime factors.
    for (Int cand = 2; cand <= order_; ++cand) {
        FieldElement g = element_at(cand);
        bool ok = true;
        for (Int q : order_primes_) {
            if (pow(g, order_ / q) == one()) { ok = false; break; }
        }
        if (ok) { generator_ = std::move(g); break; }
    }
    if (generator_.c.empty()) throw Error("no generator found"); // unreachable

    if (n_ <= kTableN) build_tables();
}

void FieldCtx::build_tables() {
    const std::size_t sz = static_cast<std::size_t>(order_) + 1;
    antilog_.resize(static_cast<std::size_t>(order_));
    dlog_.assign(sz, -1);

    FieldElement p = one();
    for (Int e = 0; e < order_; ++e) {
        const Int idx = index_of(p);
        antilog_[static_cast<std::size_t>(e)] = idx;
        dlog_[static_cast<std::size_t>(idx)] = e;
        p = mul(p, generator_);
    }

    // Trace is GF(3)-linear: combine traces of basis powers. trace_tab_ must
    // still be empty here so trace() takes the generic path.
    std::vector<int> basis_trace(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
        FieldElement b = zero();
        b.c[static_cast<std::size_t>(i)] = 1;
        basis_trace[static_cast<std::size_t>(i)] = trace(b);
    }
    trace_tab_.resize(sz);
    for (Int idx = 0; idx < static_cast<Int>(sz); ++idx) {
        Int v = idx;
        int t = 0;
        for (int i = 0; i < n_; ++i) {
            t += static_cast<int>(v % 3) * basis_trace[static_cast<std::size_t>(i)];
            v /= 3;
        }
        trace_tab_[static_cast<std::size_t>(idx)] = static_cast<std::uint8_t>(t % 3);
    }
}

std::string FieldCtx::modulus_string() const {
    std::string s(modulus_.size(), '0');
    for (std::size_t i = 0; i < modulus_.size(); ++i)
        s[modulus_.size() - 1 - i] = static_cast<char>('0' + modulus_[i]);
    return s;
}

FieldElement FieldCtx::zero() const {
    return FieldElement{std::vector<std::uint8_t>(static_cast<std::size_t>(n_), 0)};
}

FieldElement FieldCtx::one() const {
    auto e = zero();
    e.c[0] = 1;
    return e;
}

FieldElement FieldCtx::parse(std::string_view s) const {
    if (s.empty()) throw BadParameters("empty element string");
    if (s[0] == 'g') {
        Int e = 1;
        if (s.size() > 1) {
            if (s[1] != '^' || s.size() < 3)
                throw BadParameters("generator notation is g or g^e");
            e = 0;
            bool negv = false;
            std::size_t i = 2;
            if (s[i] == '-') { negv = true; ++i; }
            for (; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9')
                    throw BadParameters("bad generator exponent");
                e = e * 10 + (s[i] - '0');
            }
            if (negv) e = -e;
        }
        return gen_pow(e);
    }
    return from_string(s);
}

FieldElement FieldCtx::from_string(std::string_view s) const {
    if (s.empty() || static_cast<int>(s.size()) > n_)
        throw LengthMismatch("coefficient string must have at most n digits");
    const int len = static_cast<int>(s.size());
    FieldElement e = zero();
    for (int i = 0; i < len; ++i) {
        const char ch = s[static_cast<std::size_t>(len - 1 - i)];
        if (ch < '0' || ch > '2') throw BadParameters("coefficients must be in {0,1,2}");
        e.c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(ch - '0');
    }
    return e;
}

Int FieldCtx::index_of(const FieldElement& x) const {
    Int idx = 0;
    for (int i = n_ - 1; i >= 0; --i) idx = idx * 3 + x.c[static_cast<std::size_t>(i)];
    return idx;
}

FieldElement FieldCtx::element_at(Int index) const {
    if (index < 0 || index > order_) throw BadParameters("element index out of range");
    FieldElement e = zero();
    for (int i = 0; i < n_; ++i) {
        e.c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index % 3);
        index /= 3;
    }
    return e;
}

FieldElement FieldCtx::add(const FieldElement& x, const FieldElement& y) const {
    FieldElement r = zero();
    for (int i = 0; i < n_; ++i)
        r.c[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>((x.c[static_cast<std::size_t>(i)] +
                                       y.c[static_cast<std::size_t>(i)]) % 3);
    return r;
}

FieldElement FieldCtx::sub(const FieldElement& x, const FieldElement& y) const {
    FieldElement r = zero();
    for (int i = 0; i < n_; ++i)
        r.c[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>((3 + x.c[static_cast<std::size_t>(i)] -
                                       y.c[static_cast<std::size_t>(i)]) % 3);
    return r;
}

FieldElement FieldCtx::scalar_mul(int s, const FieldElement& x) const {
    s = ((s % 3) + 3) % 3;
    FieldElement r = zero();
    for (int i = 0; i < n_; ++i)
        r.c[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>((x.c[static_cast<std::size_t>(i)] * s) % 3);
    return r;
}

FieldElement FieldCtx::mul(const FieldElement& x, const FieldElement& y) const {
    Poly r = poly_mulmod(x.c, y.c, modulus_);
    r.resize(static_cast<std::size_t>(n_));
    return FieldElement{std::move(r)};
}

FieldElement FieldCtx::inv(const FieldElement& x) const {
    if (x.is_zero()) throw ZeroInverse("inverse of zero");
    return pow(x, order_ - 1);
}

FieldElement FieldCtx::pow(const FieldElement& x, Int e) const {
    if (x.is_zero()) {
        if (e < 0) throw ZeroInverse("pow(0, e<0)");
        return e == 0 ? one() : zero();
    }
    e %= order_;
    if (e < 0) e += order_;
    if (has_tables()) {
        const Int l = dlog_[static_cast<std::size_t>(index_of(x))];
        return element_at(antilog_[static_cast<std::size_t>(mulmod_wide(l, e, order_))]);
    }
    FieldElement acc = one();
    FieldElement base = x;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

int FieldCtx::trace(const FieldElement& x) const {
    if (has_tables() && !trace_tab_.empty())
        return trace_tab_[static_cast<std::size_t>(index_of(x))];
    FieldElement sum = zero();
    FieldElement p = x;
    for (int i = 0; i < n_; ++i) {
        sum = add(sum, p);
        p = pow(p, 3);
    }
    for (int i = 1; i < n_; ++i)
        if (sum.c[static_cast<std::size_t>(i)] != 0)
            throw NotInPrimeSubfield("trace sum has nonconstant terms");
    return sum.c[0];
}

int FieldCtx::eta(const FieldElement& a) const {
    if (a.is_zero()) throw ZeroArgument("eta(0) is undefined");
    return pow(a, order_ / 2) == one() ? +1 : -1;
}

Int FieldCtx::dlog(const FieldElement& x) const {
    if (x.is_zero()) throw ZeroArgument("dlog(0) is undefined");
    if (has_tables()) return dlog_[static_cast<std::size_t>(index_of(x))];
    // Generic fallback: generator walk.
    FieldElement p = one();
    for (Int e = 0; e < order_; ++e) {
        if (p == x) return e;
        p = mul(p, generator_);
    }
    throw Error("dlog walk failed"); // unreachable
}

FieldElement FieldCtx::gen_pow(Int e) const {
    return pow(generator_, e);
}

Int FieldCtx::add_index(Int ia, Int ib) const {
    Int r = 0;
    Int place = 1;
    for (int i = 0; i < n_; ++i) {
        r += ((ia % 3 + ib % 3) % 3) * place;
        ia /= 3;
        ib /= 3;
        place *= 3;
    }
    return r;
}

Int cm_exponent(int k) {
    return (pow3(k) + 1) / 2;
}

void check_cm_params(int n, int k) {
    if (n < 2 || n > kMaxN) throw BadParameters("n must be in [2, 38]");
    if (k < 1 || k >= n) throw BadParameters("k must satisfy 1 <= k < n");
    if (k % 2 == 0) throw BadParameters("k must be odd");
    if (std::gcd(n, k) != 1) throw BadParameters("gcd(n, k) must be 1");
}

bool cm_params_valid(int n, int k) {
    return n >= 2 && n <= kMaxN && k >= 1 && k < n && k % 2 == 1 && std::gcd(n, k) == 1;
}

int cm_eval(const FieldCtx& ctx, const FieldElement& a, int k, const FieldElement& x) {
    check_cm_params(ctx.n(), k);
    if (a.is_zero()) throw ZeroArgument("a must be nonzero");
    if (x.is_zero()) return 0;
    return ctx.trace(ctx.mul(a, ctx.pow(x, cm_exponent(k))));
}

std::vector<std::uint8_t> cm_table(const FieldCtx& ctx, const FieldElement& a, int k) {
    check_cm_params(ctx.n(), k);
    if (a.is_zero()) throw ZeroArgument("a must be nonzero");
    const Int d = cm_exponent(k);
    std::vector<std::uint8_t> tab(static_cast<std::size_t>(ctx.size()), 0);
    if (ctx.has_tables()) {
        const Int la = ctx.dlog(a);
        const Int ord = ctx.order();
        const Int dd = d % ord;
        Int e = la % ord;
        for (Int x = 0; x < ord; ++x) {
            // e = la + x*d mod ord; table position is the element g^x
            tab[static_cast<std::size_t>(ctx.antilog_at(x))] =
                static_cast<std::uint8_t>(ctx.trace_at(ctx.antilog_at(e)));
            e += dd;
            if (e >= ord) e -= ord;
        }
    } else {
        FieldElement x = ctx.one();
        FieldElement xd = ctx.one();
        const FieldElement gd = ctx.pow(ctx.generator(), d);
        for (Int e = 0; e < ctx.order(); ++e) {
            tab[static_cast<std::size_t>(ctx.index_of(x))] =
                static_cast<std::uint8_t>(ctx.trace(ctx.mul(a, xd)));
            x = ctx.mul(x, ctx.generator());
            xd = ctx.mul(xd, gd);
        }
    }
    return tab;
}

} // namespace cm
