#ifndef CMDUAL_GF3_HPP
#define CMDUAL_GF3_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmdual/trits.hpp"

namespace cm {

/// Element of GF(3^n) in the polynomial basis. c[i] is the coefficient of
/// x^i; textual form is the most-significant-first coefficient string.
struct FieldElement {
    std::vector<std::uint8_t> c;

    bool is_zero() const;
    std::string str() const;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// GF(3^n) with a verified irreducible modulus and a discovered generator.
/// Immutable after construction; all arithmetic is const and thread-safe.
/// For n <= kTableN discrete-log and trace tables are precomputed, which
/// makes pow/trace O(1) on the hot paths of the spectrum engine.
class FieldCtx {
public:
    static constexpr int kTableN = 13;

    /// Lexicographically smallest monic irreducible of degree n over GF(3).
    static std::vector<std::uint8_t> find_irreducible(int n);

    explicit FieldCtx(int n,
                      std::optional<std::vector<std::uint8_t>> modulus = std::nullopt);

    int n() const { return n_; }
    Int order() const { return order_; } // 3^n - 1
    Int size() const { return order_ + 1; }
    const std::vector<std::uint8_t>& modulus() const { return modulus_; }
    const FieldElement& generator() const { return generator_; }
    const std::vector<Int>& order_prime_factors() const { return order_primes_; }
    bool has_tables() const { return !antilog_.empty(); }

    std::string modulus_string() const;

    FieldElement zero() const;
    FieldElement one() const;

    /// Parses either a coefficient string ("201" = 2x^2 + 1) or "g^e".
    FieldElement parse(std::string_view s) const;
    FieldElement from_string(std::string_view s) const;

    /// Index = sum c[i]*3^i; the canonical table index of an element.
    Int index_of(const FieldElement& x) const;
    FieldElement element_at(Int index) const;

    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement scalar_mul(int s, const FieldElement& x) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement inv(const FieldElement& x) const;
    FieldElement pow(const FieldElement& x, Int e) const;

    int trace(const FieldElement& x) const;
    int eta(const FieldElement& a) const; // +1 on squares, -1 otherwise

    /// Discrete log against the context generator (tables required).
    Int dlog(const FieldElement& x) const;
    FieldElement gen_pow(Int e) const;

    // Fast index-based views, valid when has_tables().
    int trace_at(Int index) const { return trace_tab_[static_cast<std::size_t>(index)]; }
    Int antilog_at(Int e) const { return antilog_[static_cast<std::size_t>(e)]; }
    Int dlog_at(Int index) const { return dlog_[static_cast<std::size_t>(index)]; }
    Int add_index(Int ia, Int ib) const; // digitwise mod-3 addition

private:
    int n_;
    Int order_;
    std::vector<std::uint8_t> modulus_;
    FieldElement generator_;
    std::vector<Int> order_primes_;
    std::vector<Int> antilog_;          // e -> index of g^e
    std::vector<Int> dlog_;             // index -> e (index 0 unused)
    std::vector<std::uint8_t> trace_tab_;

    void build_tables();
};

/// The Coulter-Matthews exponent d = (3^k + 1) / 2.
Int cm_exponent(int k);

/// Validates the Coulter-Matthews parameter set: k odd, gcd(n,k) = 1,
/// 1 <= k < n, n >= 2. Throws BadParameters naming the failed condition.
void check_cm_params(int n, int k);
bool cm_params_valid(int n, int k);

/// f(x) = Tr(a x^d), the Coulter-Matthews bent function.
int cm_eval(const FieldCtx& ctx, const FieldElement& a, int k, const FieldElement& x);

/// Full value table of f indexed by element index; O(3^n).
std::vector<std::uint8_t> cm_table(const FieldCtx& ctx, const FieldElement& a, int k);

} // namespace cm

#endif
