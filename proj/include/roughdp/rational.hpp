#ifndef ROUGHDP_RATIONAL_HPP
#define ROUGHDP_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

namespace roughdp {

/// Exact reduced fraction. Accuracy measures are always rational with
/// numerator and denominator bounded by the universe size, so a 64-bit
/// representation is more than enough.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }

    /// "0" and "1" unadorned, otherwise "p/q" in lowest terms.
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace roughdp

#endif
