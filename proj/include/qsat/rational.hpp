#pragma once
// Exact rational arithmetic for the geometry kernel.
// Values stay tiny (coordinates are dyadic fractions in a small window),
// but intermediate cross products are computed in 128-bit to be safe.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qsat {

class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat::from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                            i128(a.den_) * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat::from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                            i128(a.den_) * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat::from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat::from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rat operator-() const { return Rat(-num_, den_); }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    double to_double() const { return double(num_) / double(den_); }

    // Largest integer <= value.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;
    long long num_, den_;

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (den_ == 0) den_ = 1;
    }

    static Rat from128(i128 n, i128 d) {
        if (d < 0) { n = -n; d = -d; }
        i128 a = n < 0 ? -n : n, b = d;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rat: overflow");
        Rat r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        if (r.den_ == 0) throw std::domain_error("Rat: zero denominator");
        return r;
    }
};

}  // namespace qsat
