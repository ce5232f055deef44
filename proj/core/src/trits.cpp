#include "cmdual/trits.hpp"

#include <algorithm>

namespace cm {

Int pow3(int e) {
    Int p = 1;
    for (int i = 0; i < e; ++i) p *= 3;
    return p;
}

static void check_n(int n) {
    if (n < 1 || n > kMaxN)
        throw BadParameters("n must be in [1, " + std::to_string(kMaxN) + "]");
}

TernaryIndex TernaryIndex::residue(Int j, int n) {
    check_n(n);
    const Int mod = pow3(n) - 1;
    Int v = j % mod;
    if (v < 0) v += mod;
    TernaryIndex t;
    t.n = n;
    t.value = v;
    t.digits.resize(n);
    for (int i = 0; i < n; ++i) {
        t.digits[i] = static_cast<std::uint8_t>(v % 3);
        v /= 3;
    }
    return t;
}

TernaryIndex TernaryIndex::from_string(std::string_view s) {
    const int n = static_cast<int>(s.size());
    check_n(n);
    Int v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '2') throw BadParameters("digit string must use {0,1,2}");
        v = v * 3 + (ch - '0');
    }
    return residue(v, n);
}

std::string TernaryIndex::str() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) s[n - 1 - i] = static_cast<char>('0' + digits[i]);
    return s;
}

TernaryIndex neg(const TernaryIndex& j) {
    return TernaryIndex::residue(-j.value, j.n);
}

int weight(const TernaryIndex& j) {
    int w = 0;
    for (auto d : j.digits) w += d;
    return w;
}

int n2(const TernaryIndex& j) {
    return static_cast<int>(std::count(j.digits.begin(), j.digits.end(), 2));
}

Int sigma(const TernaryIndex& j) {
    return Int{1} << n2(j); // digit factorials: 0! = 1! = 1, 2! = 2
}

int weight_mod(Int j, int n) {
    return weight(TernaryIndex::residue(j, n));
}

int n2_mod(Int j, int n) {
    return n2(TernaryIndex::residue(j, n));
}

int CarryVector::weight() const {
    int w = 0;
    for (auto b : bits) w += b;
    return w;
}

std::pair<TernaryIndex, CarryVector> add_with_carry(const TernaryIndex& r,
                                                    const TernaryIndex& s) {
    if (r.n != s.n) throw LengthMismatch("operands must share n");
    const int n = r.n;
    const TernaryIndex t = TernaryIndex::residue(r.value + s.value, n);

    CarryVector best{n, std::vector<std::uint8_t>(n, 0)};
    bool found = false;
    for (int wrap = 0; wrap <= 1 && !found; ++wrap) {
        std::vector<std::uint8_t> c(n, 0);
        int carry = wrap;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            const int lhs = r.digits[i] + s.digits[i] + carry - t.digits[i];
            if (lhs != 0 && lhs != 3) { ok = false; break; }
            c[i] = static_cast<std::uint8_t>(lhs / 3);
            carry = c[i];
        }
        if (ok && carry == wrap) {
            best.bits = std::move(c);
            found = true;
        }
    }
    if (!found)
        throw Error("no consistent carry vector"); // cannot happen for t = r+s
    return {t, best};
}

bool wt_sum_eq(const TernaryIndex& r, const TernaryIndex& s) {
    if (r.n != s.n) throw LengthMismatch("operands must share n");
    bool strict = false;
    for (int i = 0; i < r.n; ++i) {
        const int d = r.digits[i] + s.digits[i];
        if (d > 2) return false;
        if (d < 2) strict = true;
    }
    return strict;
}

bool wt_sum_plus2(const TernaryIndex& r, const TernaryIndex& s) {
    if (r.n != s.n) throw LengthMismatch("operands must share n");
    const int n = r.n;
    auto dig = [&](int i) { return r.digits[i % n] + s.digits[i % n]; };
    for (int j = 0; j < n; ++j) {
        if (dig(j) < 3 || dig(j + 1) > 1) continue;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
            if (i == j || i == (j + 1) % n) continue;
            if (dig(i) > 2) { ok = false; break; }
        }
        if (ok) return true;
    }
    return false;
}

Coset coset_of(Int j, int n) {
    check_n(n);
    const Int mod = pow3(n) - 1;
    if (j < 0 || j >= mod) throw BadParameters("coset representative out of range");
    Coset c;
    c.n = n;
    Int m = j;
    do {
        c.members.push_back(m);
        m = (m * 3) % mod;
    } while (m != j);
    c.leader = *std::min_element(c.members.begin(), c.members.end());
    return c;
}

std::vector<Int> coset_leaders(int n) {
    check_n(n);
    const Int mod = pow3(n) - 1;
    std::vector<bool> seen(static_cast<std::size_t>(mod), false);
    std::vector<Int> leaders;
    for (Int j = 0; j < mod; ++j) {
        if (seen[static_cast<std::size_t>(j)]) continue;
        leaders.push_back(j);
        Int m = j;
        do {
            seen[static_cast<std::size_t>(m)] = true;
            m = (m * 3) % mod;
        } while (m != j);
    }
    return leaders;
}

} // namespace cm
