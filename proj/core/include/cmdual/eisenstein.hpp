#ifndef CMDUAL_EISENSTEIN_HPP
#define CMDUAL_EISENSTEIN_HPP

#include <cstdint>
#include <string>

namespace cm {

/// a + b*omega with omega a primitive cube root of unity (omega^2 = -1 - omega).
/// Exact carrier for all ternary character sums; 1 + 2*omega = i*sqrt(3),
/// so i^n * 3^{n/2} = (1 + 2*omega)^n stays in this ring.
struct Eisenstein {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend constexpr Eisenstein operator+(Eisenstein x, Eisenstein y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend constexpr Eisenstein operator-(Eisenstein x, Eisenstein y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend constexpr Eisenstein operator*(Eisenstein x, Eisenstein y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
    }
    constexpr Eisenstein& operator+=(Eisenstein y) { a += y.a; b += y.b; return *this; }
    friend constexpr bool operator==(Eisenstein, Eisenstein) = default;

    constexpr std::int64_t norm() const { return a * a - a * b + b * b; }

    /// Multiplication by omega^t, t in {0,1,2}.
    constexpr Eisenstein rot(int t) const {
        switch (t % 3) {
            case 1: return {-b, a - b};
            case 2: return {b - a, -a};
            default: return *this;
        }
    }

    static constexpr Eisenstein omega_pow(int t) {
        return Eisenstein{1, 0}.rot(t);
    }

    std::string str() const {
        return "(" + std::to_string(a) + (b >= 0 ? "+" : "") + std::to_string(b) + "w)";
    }
};

} // namespace cm

#endif
