#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace af {

/// Exact rational number on int64 with reduction after every operation.
/// All quantities handled here (basis coefficients, trigonometric moment
/// integrals, binomials up to ~16) are tiny, but intermediates are computed
/// in 128-bit and overflow aborts loudly instead of wrapping.
class Rat {
public:
    constexpr Rat() = default;
    Rat(std::int64_t n) : num_(n), den_(1) {}
    Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
    }

private:
    using i128 = __int128;

    static Rat make(i128 n, i128 d) {
        Rat r;
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rat: 64-bit overflow");
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        *this = make(num_, den_);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rat binomial(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    Rat r(1);
    for (int i = 0; i < k; ++i) r = r * Rat(n - i) / Rat(i + 1);
    return r;
}

inline Rat factorial(int n) {
    Rat r(1);
    for (int i = 2; i <= n; ++i) r *= Rat(i);
    return r;
}

/// Exact value of the form sum_e c_e * pi^e with e in [-2, 2].
/// The angular and polar moment integrals live in Q + Q*pi, and folding in
/// the 1/(4 pi) spherical-mean normalization shifts exponents down by one.
class QPi {
public:
    static constexpr int kMinExp = -2, kMaxExp = 2;

    QPi() = default;
    static QPi rational(const Rat& r) { QPi q; q.at(0) = r; return q; }
    static QPi pi_times(const Rat& r) { QPi q; q.at(1) = r; return q; }

    Rat& at(int exp) { return c_[exp - kMinExp]; }
    const Rat& at(int exp) const { return c_[exp - kMinExp]; }

    friend QPi operator+(const QPi& a, const QPi& b) {
        QPi r;
        for (int i = 0; i < 5; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend QPi operator-(const QPi& a, const QPi& b) {
        QPi r;
        for (int i = 0; i < 5; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend QPi operator*(const QPi& a, const QPi& b) {
        QPi r;
        for (int ea = kMinExp; ea <= kMaxExp; ++ea) {
            if (a.at(ea).is_zero()) continue;
            for (int eb = kMinExp; eb <= kMaxExp; ++eb) {
                if (b.at(eb).is_zero()) continue;
                int e = ea + eb;
                if (e < kMinExp || e > kMaxExp)
                    throw std::overflow_error("QPi: pi exponent out of range");
                r.at(e) += a.at(ea) * b.at(eb);
            }
        }
        return r;
    }
    QPi& operator+=(const QPi& o) { *this = *this + o; return *this; }

    QPi scaled(const Rat& r) const {
        QPi q;
        for (int i = 0; i < 5; ++i) q.c_[i] = c_[i] * r;
        return q;
    }
    /// Multiply by pi^shift exactly.
    QPi pi_shifted(int shift) const {
        QPi q;
        for (int e = kMinExp; e <= kMaxExp; ++e) {
            if (at(e).is_zero()) continue;
            int ne = e + shift;
            if (ne < kMinExp || ne > kMaxExp)
                throw std::overflow_error("QPi: pi exponent out of range");
            q.at(ne) = at(e);
        }
        return q;
    }

    bool is_zero() const {
        for (const auto& r : c_) if (!r.is_zero()) return false;
        return true;
    }
    friend bool operator==(const QPi& a, const QPi& b) {
        for (int i = 0; i < 5; ++i) if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    double to_double() const {
        constexpr long double pi = 3.14159265358979323846264338327950288L;
        long double v = 0.0L, p = 1.0L;
        for (int e = 0; e >= kMinExp; --e) {
            v += static_cast<long double>(c_[e - kMinExp].to_double()) * p;
            p /= pi;
        }
        p = pi;
        for (int e = 1; e <= kMaxExp; ++e) {
            v += static_cast<long double>(c_[e - kMinExp].to_double()) * p;
            p *= pi;
        }
        return static_cast<double>(v);
    }

private:
    std::array<Rat, 5> c_{};  // exponents -2..2
};

}  // namespace af
