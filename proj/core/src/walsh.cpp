#include "cmdual/walsh.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace cm {

namespace {

void run_parallel(Int total, int threads, const std::function<void(Int, Int)>& body) {
    if (threads <= 1 || total < 4096) {
        body(0, total);
        return;
    }
    std::vector<std::thread> pool;
    const Int chunk = (total + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const Int lo = t * chunk;
        const Int hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(body, lo, hi);
    }
    for (auto& th : pool) th.join();
}

Int neg_index(Int idx, int n) {
    Int r = 0, place = 1;
    for (int i = 0; i < n; ++i) {
        r += ((3 - idx % 3) % 3) * place;
        idx /= 3;
        place *= 3;
    }
    return r;
}

// Map from dual-basis coordinates (mixed-radix index) to the polynomial-basis
// element index of sum l_i * delta_i.
std::vector<Int> dual_coordinate_map(const FieldCtx& ctx) {
    const auto deltas = dual_basis(ctx);
    const int n = ctx.n();
    const Int N = ctx.size();
    Int scaled[kFastSpectrumMaxN][3];
    for (int i = 0; i < n; ++i) {
        scaled[i][0] = 0;
        scaled[i][1] = ctx.index_of(deltas[static_cast<std::size_t>(i)]);
        scaled[i][2] = ctx.add_index(scaled[i][1], scaled[i][1]);
    }
    std::vector<Int> map(static_cast<std::size_t>(N));
    for (Int l = 0; l < N; ++l) {
        Int v = l, idx = 0;
        for (int i = 0; i < n && v; ++i) {
            idx = ctx.add_index(idx, scaled[i][v % 3]);
            v /= 3;
        }
        map[static_cast<std::size_t>(l)] = idx;
    }
    return map;
}

// One radix-3 pass over dimension `dim`; kernel w^{sign * j * t}.
void butterfly_stage(std::vector<Eisenstein>& data, int dim, int sign, int threads) {
    const Int stride = pow3(dim);
    const Int triples = static_cast<Int>(data.size()) / 3;
    run_parallel(triples, threads, [&](Int lo, Int hi) {
        for (Int u = lo; u < hi; ++u) {
            const Int i0 = (u / stride) * stride * 3 + (u % stride);
            const Int i1 = i0 + stride;
            const Int i2 = i1 + stride;
            const Eisenstein a = data[static_cast<std::size_t>(i0)];
            const Eisenstein b = data[static_cast<std::size_t>(i1)];
            const Eisenstein c = data[static_cast<std::size_t>(i2)];
            if (sign < 0) {
                data[static_cast<std::size_t>(i0)] = a + b + c;
                data[static_cast<std::size_t>(i1)] = a + b.rot(2) + c.rot(1);
                data[static_cast<std::size_t>(i2)] = a + b.rot(1) + c.rot(2);
            } else {
                data[static_cast<std::size_t>(i0)] = a + b + c;
                data[static_cast<std::size_t>(i1)] = a + b.rot(1) + c.rot(2);
                data[static_cast<std::size_t>(i2)] = a + b.rot(2) + c.rot(1);
            }
        }
    });
}

} // namespace

Eisenstein reference_constant(int n, int etaA) {
    if (n < 1) throw BadParameters("n must be >= 1");
    Eisenstein p{1, 0};
    const Eisenstein isqrt3{1, 2}; // i * sqrt(3)
    for (int i = 0; i < n; ++i) p = p * isqrt3;
    int sign = (n + 1) % 2 == 0 ? +1 : -1; // (-1)^{n+1}
    sign *= etaA >= 0 ? +1 : -1;
    return sign > 0 ? p : Eisenstein{-p.a, -p.b};
}

std::vector<FieldElement> dual_basis(const FieldCtx& ctx) {
    const int n = ctx.n();
    // Solve M D = I over GF(3), where M[i][l] = Tr(x^i x^l).
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(2 * n), 0));
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < n; ++l) {
            FieldElement bi = ctx.zero(), bl = ctx.zero();
            bi.c[static_cast<std::size_t>(i)] = 1;
            bl.c[static_cast<std::size_t>(l)] = 1;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] =
                ctx.trace(ctx.mul(bi, bl));
        }
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
    }
    // Gauss-Jordan mod 3.
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw SingularTraceForm("trace form is degenerate");
        std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
        const int lead = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        const int inv = lead == 1 ? 1 : 2;
        for (auto& v : m[static_cast<std::size_t>(col)]) v = v * inv % 3;
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            const int f = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (!f) continue;
            for (int j = 0; j < 2 * n; ++j)
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] =
                    (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] + (3 - f) *
                     m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)]) % 3;
        }
    }
    std::vector<FieldElement> deltas(static_cast<std::size_t>(n), ctx.zero());
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            deltas[static_cast<std::size_t>(j)].c[static_cast<std::size_t>(i)] =
                static_cast<std::uint8_t>(
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)]);
    return deltas;
}

std::vector<Eisenstein> fast_spectrum(const FieldCtx& ctx,
                                      std::span<const std::uint8_t> table,
                                      int threads) {
    const int n = ctx.n();
    if (n > kFastSpectrumMaxN) throw SizeLimit("fast transform capped at n <= 16");
    if (static_cast<Int>(table.size()) != ctx.size())
        throw LengthMismatch("table must have 3^n entries");

    std::vector<Eisenstein> data(table.size());
    for (std::size_t i = 0; i < table.size(); ++i)
        data[i] = Eisenstein::omega_pow(table[i]);

    for (int dim = 0; dim < n; ++dim) butterfly_stage(data, dim, -1, threads);

    // Relabel from dual-basis coordinates to element indices.
    const auto map = dual_coordinate_map(ctx);
    std::vector<Eisenstein> out(data.size());
    for (std::size_t l = 0; l < data.size(); ++l)
        out[static_cast<std::size_t>(map[l])] = data[l];
    return out;
}

std::vector<Eisenstein> inverse_spectrum(const FieldCtx& ctx,
                                         std::span<const Eisenstein> spectrum) {
    const int n = ctx.n();
    if (static_cast<Int>(spectrum.size()) != ctx.size())
        throw LengthMismatch("spectrum must have 3^n entries");
    const auto map = dual_coordinate_map(ctx);
    std::vector<Eisenstein> data(spectrum.size());
    for (std::size_t l = 0; l < data.size(); ++l)
        data[l] = spectrum[static_cast<std::size_t>(map[l])];

    for (int dim = 0; dim < n; ++dim) butterfly_stage(data, dim, +1, 1);

    const Int scale = ctx.size();
    for (auto& v : data) {
        if (v.a % scale != 0 || v.b % scale != 0)
            throw Error("inverse transform is not divisible by 3^n");
        v.a /= scale;
        v.b /= scale;
    }
    return data;
}

Eisenstein char_sum(const FieldCtx& ctx, const FieldElement& a, int k,
                    const FieldElement& lambda) {
    check_cm_params(ctx.n(), k);
    if (a.is_zero()) throw ZeroArgument("a must be nonzero");
    const auto f = cm_table(ctx, a, k);
    Eisenstein sum{1, 0}; // x = 0 contributes w^0
    if (lambda.is_zero()) {
        sum = {0, 0};
        for (auto v : f) sum += Eisenstein::omega_pow(v);
        return sum;
    }
    if (ctx.has_tables()) {
        const Int ord = ctx.order();
        Int e = ctx.dlog(lambda);
        for (Int i = 0; i < ord; ++i) {
            const Int x = ctx.antilog_at(i);
            const int lin = ctx.trace_at(ctx.antilog_at(e));
            sum += Eisenstein::omega_pow(f[static_cast<std::size_t>(x)] + lin);
            ++e;
            if (e >= ord) e -= ord;
        }
    } else {
        for (Int i = 1; i <= ctx.order(); ++i) {
            const FieldElement x = ctx.element_at(i);
            sum += Eisenstein::omega_pow(f[static_cast<std::size_t>(i)] +
                                         ctx.trace(ctx.mul(lambda, x)));
        }
    }
    return sum;
}

std::vector<Eisenstein> char_sum_table(const FieldCtx& ctx, const FieldElement& a,
                                       int k, int threads) {
    const auto f = cm_table(ctx, a, k);
    const auto spec = fast_spectrum(ctx, f, threads);
    // char_sum(lambda) = W(-lambda)
    std::vector<Eisenstein> out(spec.size());
    for (Int i = 0; i < static_cast<Int>(spec.size()); ++i)
        out[static_cast<std::size_t>(i)] =
            spec[static_cast<std::size_t>(neg_index(i, ctx.n()))];
    return out;
}

std::vector<Int> SpectrumReport::failing_lambdas() const {
    std::vector<Int> bad;
    for (const auto& rec : per_lambda)
        if (!rec.norm_ok || rec.dual_value < 0) bad.push_back(rec.lambda);
    return bad;
}

SpectrumReport verify_bent(const FieldCtx& ctx, const FieldElement& a, int k,
                           int threads) {
    SpectrumReport rep;
    rep.n = ctx.n();
    rep.k = k;
    rep.a = a.str();
    rep.reference = reference_constant(ctx.n(), ctx.eta(a));
    const Int target = ctx.size();
    const auto table = char_sum_table(ctx, a, k, threads);

    rep.bent = true;
    rep.weakly_regular = true;
    rep.per_lambda.reserve(table.size());
    for (Int l = 0; l < static_cast<Int>(table.size()); ++l) {
        LambdaRecord rec;
        rec.lambda = l;
        rec.w = table[static_cast<std::size_t>(l)];
        rec.norm_ok = rec.w.norm() == target;
        for (int t = 0; t < 3; ++t)
            if (rec.w == rep.reference.rot(t)) { rec.dual_value = t; break; }
        rep.bent &= rec.norm_ok;
        rep.weakly_regular &= rec.dual_value >= 0;
        rep.per_lambda.push_back(rec);
    }
    rep.dual_matches = rep.weakly_regular;
    return rep;
}

bool is_bent_table(const FieldCtx& ctx, std::span<const std::uint8_t> table,
                   int threads) {
    const Int target = ctx.size();
    for (const auto& v : fast_spectrum(ctx, table, threads))
        if (v.norm() != target) return false;
    return true;
}

SpectrumReport verify_weak_regularity(const FieldCtx& ctx, const FieldElement& a,
                                      int k, const DualRep& rep, int threads) {
    SpectrumReport out = verify_bent(ctx, a, k, threads);
    const auto g = dual_table(ctx, rep);
    out.dual_matches = true;
    for (auto& rec : out.per_lambda) {
        const Eisenstein expected =
            out.reference.rot(g[static_cast<std::size_t>(rec.lambda)]);
        if (!(rec.w == expected)) {
            out.dual_matches = false;
            rec.dual_value = -1; // flag as a failing lambda in the report
        }
    }
    return out;
}

std::vector<std::uint8_t> extract_dual(const FieldCtx& ctx, const FieldElement& a,
                                       int k, int threads) {
    const Eisenstein ref = reference_constant(ctx.n(), ctx.eta(a));
    const auto table = char_sum_table(ctx, a, k, threads);
    std::vector<std::uint8_t> g(table.size());
    for (Int l = 0; l < static_cast<Int>(table.size()); ++l) {
        int found = -1;
        for (int t = 0; t < 3; ++t)
            if (table[static_cast<std::size_t>(l)] == ref.rot(t)) { found = t; break; }
        if (found < 0)
            throw NoMatchingRotation("lambda " + std::to_string(l) +
                                     ": spectrum value is not a rotation of the reference");
        g[static_cast<std::size_t>(l)] = static_cast<std::uint8_t>(found);
    }
    return g;
}

} // namespace cm
