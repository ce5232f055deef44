#ifndef CMDUAL_DUAL_HPP
#define CMDUAL_DUAL_HPP

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cmdual/gf3.hpp"
#include "cmdual/trits.hpp"

namespace cm {

enum class Branch { Even, Odd };

inline const char* branch_name(Branch b) {
    return b == Branch::Even ? "even" : "odd";
}

/// Derived Coulter-Matthews parameters: d = (3^k+1)/2, the inverse w of k
/// modulo n, and the parity invariant |A ∩ {n-k,...,n-1}| with
/// A = {0, k, ..., (w-1)k} mod n.
struct CmParams {
    int n = 0;
    int k = 0;
    Int d = 0;
    int w = 0;
    int parity_count = 0;

    Branch branch() const { return parity_count % 2 == 0 ? Branch::Even : Branch::Odd; }
};

CmParams derive_params(int n, int k);

/// Just (w, parity_count), by plain modular arithmetic — no field-size cap,
/// so usable well past kMaxN where 3^k no longer fits an Int.
struct WParity {
    int w = 0;
    int parity_count = 0;
};
WParity derive_wparity(int n, int k);

/// N(f): number of {0,2} strings of length f with no consecutive 2's.
/// N(0) = 1, N(1) = 2, extended backwards with N(-1) = 1, N(-2) = 0 so the
/// recurrence holds everywhere.
Int fib_count(int f);

struct IndexSets {
    Branch branch = Branch::Even;
    std::vector<TernaryIndex> U;
    std::vector<TernaryIndex> V;
};

/// U/V index sets for the active branch. Digits are constrained at
/// positions i*k mod n; the no-consecutive-2 rule runs along i, not along
/// natural digit positions. Conflicting constraints yield an empty set.
IndexSets gen_sets(const CmParams& p);

/// |U| + |V| by direct enumeration (no Fibonacci shortcut); usable to
/// n = 38 since only counts are kept.
Int count_sets_enumerated(const CmParams& p);

inline constexpr int kDefaultBruteMaxN = 12;

/// Direct scan of all 0 < j < 3^n - 1 against the defining weight
/// identities of S0 and S1.
std::pair<std::set<Int>, std::set<Int>> brute_S0_S1(const CmParams& p,
                                                    int max_n = kDefaultBruteMaxN);

struct TraceTerm {
    TernaryIndex j;        // source index in U or V
    int sign = 1;          // (-1)^{N2(j)+1} over U, (-1)^{N2(j)} over V
    FieldElement coeff;    // sign * eta(a) * a^j
    TernaryIndex exponent; // residue(-j*d)
};

struct DualRep {
    CmParams params;
    FieldElement a;
    std::vector<TraceTerm> terms; // ascending by exponent value
};

/// Trace representation of the dual function g.
DualRep dual_representation(const FieldCtx& ctx, const FieldElement& a, int k);

/// g(x) = sum of Tr(coeff * x^exp); g(0) = 0.
int eval_dual(const FieldCtx& ctx, const DualRep& rep, const FieldElement& x);

/// g at every field element, indexed by element index.
std::vector<std::uint8_t> dual_table(const FieldCtx& ctx, const DualRep& rep);

/// The universal formula: g(λ) = eta(a) * Σ σ(j)σ(-jd) (a/λ^d)^j over all j
/// with wt(j) + wt(-jd) = n + 1. Scans all j, so capped like brute_S0_S1.
int universal_dual(const FieldCtx& ctx, const FieldElement& a, int k,
                   const FieldElement& lambda, int max_n = kDefaultBruteMaxN);
std::vector<std::uint8_t> universal_dual_table(const FieldCtx& ctx,
                                               const FieldElement& a, int k,
                                               int max_n = kDefaultBruteMaxN);

enum class ThreeTermVariant {
    One, // n = 3t+2, k = 2t+1
    Two, // n = 3t+1, k = 2t+1
};

/// The explicit 3-term dual formulas for the two (n,k) = (3t+2, 2t+1) and
/// (3t+1, 2t+1) families.
int three_term_dual(const FieldCtx& ctx, const FieldElement& a,
                    ThreeTermVariant variant, int t, const FieldElement& lambda);

struct SpecialFamily {
    std::string family;  // "k|n+1", "k|n-1", "(n-k)|n+1", "(n-k)|n-1"
    int w = 0;
    int parity_count = 0;
    Branch branch = Branch::Even;
    Int term_count = 0;
    int m = 0; // (m, t) parametrization of the small-divisor families; 0 if n/a
    int t = 0;
};

/// Every divisibility family applicable to (n, k), with the predicted
/// w, parity invariant and term count in closed form.
std::vector<SpecialFamily> classify_special(int n, int k);

/// Max ternary weight over the exponents of rep.
int algebraic_degree(const DualRep& rep);

} // namespace cm

#endif
