#ifndef CMDUAL_WALSH_HPP
#define CMDUAL_WALSH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "cmdual/dual.hpp"
#include "cmdual/eisenstein.hpp"
#include "cmdual/gf3.hpp"

namespace cm {

inline constexpr int kFastSpectrumMaxN = 16;

/// (-1)^{n+1} * etaA * (1 + 2w)^n, the exact value of i^n * 3^{n/2} scaled
/// by the sign constants of the weak-regularity identity.
Eisenstein reference_constant(int n, int etaA);

/// Basis {delta_j} dual to the polynomial basis under the trace pairing:
/// Tr(x^i * delta_j) = [i == j].
std::vector<FieldElement> dual_basis(const FieldCtx& ctx);

/// Walsh transform W(lambda) = sum_x w^{f(x) - Tr(lambda x)} of a value
/// table indexed by element index, via a radix-3 butterfly; O(n 3^n).
/// Output is indexed by lambda's element index.
std::vector<Eisenstein> fast_spectrum(const FieldCtx& ctx,
                                      std::span<const std::uint8_t> table,
                                      int threads = 1);

/// Exact inverse: recovers the w^{f(x)} table from a spectrum.
std::vector<Eisenstein> inverse_spectrum(const FieldCtx& ctx,
                                         std::span<const Eisenstein> spectrum);

/// Brute-force character sum sum_x w^{Tr(a x^d + lambda x)}. Note the +lambda
/// sign: this equals the Walsh transform of Tr(a x^d) at -lambda.
Eisenstein char_sum(const FieldCtx& ctx, const FieldElement& a, int k,
                    const FieldElement& lambda);

/// All char_sum values at once, indexed by lambda; fast-transform backed.
std::vector<Eisenstein> char_sum_table(const FieldCtx& ctx, const FieldElement& a,
                                       int k, int threads = 1);

struct LambdaRecord {
    Int lambda = 0;      // element index
    Eisenstein w;        // character-sum value (the +lambda convention)
    bool norm_ok = false;
    int dual_value = -1; // -1 means no rotation of the reference matches
};

struct SpectrumReport {
    int n = 0;
    int k = 0;
    std::string a;
    Eisenstein reference;
    bool bent = false;
    bool weakly_regular = false;
    bool dual_matches = false;
    std::vector<LambdaRecord> per_lambda;

    std::vector<Int> failing_lambdas() const;
};

SpectrumReport verify_bent(const FieldCtx& ctx, const FieldElement& a, int k,
                           int threads = 1);

/// Norm test |W(lambda)|^2 == 3^n at every lambda, for an arbitrary value
/// table. Used to confirm that an extracted dual is itself bent.
bool is_bent_table(const FieldCtx& ctx, std::span<const std::uint8_t> table,
                   int threads = 1);

/// Checks char_sum(lambda) == reference * w^{g(lambda)} with g evaluated
/// from the trace representation, for every lambda.
SpectrumReport verify_weak_regularity(const FieldCtx& ctx, const FieldElement& a,
                                      int k, const DualRep& rep, int threads = 1);

/// The formula-free dual: per lambda, the unique t with
/// char_sum(lambda) == reference * w^t. Throws NoMatchingRotation if none fits.
std::vector<std::uint8_t> extract_dual(const FieldCtx& ctx, const FieldElement& a,
                                       int k, int threads = 1);

} // namespace cm

#endif
