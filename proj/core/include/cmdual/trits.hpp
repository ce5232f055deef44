#ifndef CMDUAL_TRITS_HPP
#define CMDUAL_TRITS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmdual/errors.hpp"

namespace cm {

using Int = std::int64_t;

// Largest n for which 3^n - 1 fits comfortably in 61 bits.
inline constexpr int kMaxN = 38;

Int pow3(int e);

/// An exponent modulo 3^n - 1 together with its ternary digit expansion.
/// Digits are stored least-significant-first; textual I/O is always the
/// most-significant-first string of length n.
struct TernaryIndex {
    int n = 0;
    Int value = 0;
    std::vector<std::uint8_t> digits; // digits[i] is the coefficient of 3^i

    /// Maps any integer (negative or large) into [0, 3^n - 1).
    static TernaryIndex residue(Int j, int n);
    static TernaryIndex from_string(std::string_view s);

    std::string str() const;

    friend bool operator==(const TernaryIndex&, const TernaryIndex&) = default;
};

TernaryIndex neg(const TernaryIndex& j);
int weight(const TernaryIndex& j);
int n2(const TernaryIndex& j);
Int sigma(const TernaryIndex& j);

// Shorthands working on raw residues.
int weight_mod(Int j, int n);
int n2_mod(Int j, int n);

struct CarryVector {
    int n = 0;
    std::vector<std::uint8_t> bits;

    int weight() const;

    friend bool operator==(const CarryVector&, const CarryVector&) = default;
};

/// Solves the cyclic relation t_i + 3 c_i = r_i + s_i + c_{i-1} for
/// t = r + s mod 3^n - 1. The solution is unique except for r = s = 0,
/// where the all-zero carry vector is returned.
std::pair<TernaryIndex, CarryVector> add_with_carry(const TernaryIndex& r,
                                                    const TernaryIndex& s);

/// Digit predicate equivalent to wt(r) + wt(s) == wt(r+s):
/// all r_i + s_i <= 2 and some position has r_i + s_i < 2.
bool wt_sum_eq(const TernaryIndex& r, const TernaryIndex& s);

/// Digit predicate equivalent to wt(r) + wt(s) == wt(r+s) + 2:
/// a unique position j with r_j + s_j >= 3, r_{j+1} + s_{j+1} <= 1,
/// and all other positions <= 2.
bool wt_sum_plus2(const TernaryIndex& r, const TernaryIndex& s);

struct Coset {
    Int leader = 0;
    std::vector<Int> members; // leader * 3^m, in orbit order
    int n = 0;
};

/// Cyclotomic coset of j under multiplication by 3 modulo 3^n - 1.
Coset coset_of(Int j, int n);

/// All coset leaders modulo 3^n - 1, ascending.
std::vector<Int> coset_leaders(int n);

} // namespace cm

#endif
