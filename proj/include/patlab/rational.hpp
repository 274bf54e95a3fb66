#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "patlab/error.hpp"

namespace patlab {

/// Exact non-negative rational. Confidence values and thresholds sit exactly
/// on boundaries like 1/2, so comparisons must never go through floating point.
class Rational {
public:
    constexpr Rational() = default;

    Rational(std::uint64_t num, std::uint64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw Error("rational with zero denominator");
        normalize();
    }

    static Rational from_int(std::uint64_t v) { return Rational(v, 1); }

    /// Accepts "p/q", "p%", or a plain non-negative integer.
    static Rational parse(const std::string& text);

    std::uint64_t num() const { return num_; }
    std::uint64_t den() const { return den_; }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        using W = unsigned __int128;
        return W(a.num_) * b.den_ < W(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void normalize() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        std::uint64_t g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

}  // namespace patlab
