// Minimal exact rational on 64-bit integers, enough for valuations with
// denominator 3 and the cubic/quadratic ratios of the asymptotic check.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace latmax {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool is_integer() const { return den == 1; }
    std::int64_t as_integer() const {
        if (!is_integer()) throw std::domain_error("Rational: not an integer");
        return num;
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend Rational operator+(Rational a, Rational b) {
        return checked(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return checked(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rational operator*(Rational a, Rational b) {
        return checked(i128(a.num) * b.num, i128(a.den) * b.den);
    }
    friend Rational operator/(Rational a, Rational b) {
        if (b.num == 0) throw std::domain_error("Rational: division by zero");
        return checked(i128(a.num) * b.den, i128(a.den) * b.num);
    }
    friend bool operator<(Rational a, Rational b) {
        return i128(a.num) * b.den < i128(b.num) * a.den;
    }

  private:
    using i128 = __int128;
    static Rational checked(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        const i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        Rational r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { const i128 t = a % b; a = b; b = t; }
        return a;
    }
};

}  // namespace latmax
