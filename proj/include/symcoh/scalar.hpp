#pragma once

#include <gmpxx.h>

#include <string>

namespace symcoh {

// Arbitrary-precision rational, always kept canonical (lowest terms, q > 0).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Exact element of Q(i): re + i*im.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int re) : re_(re) {}
    GaussianRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    GaussianRational conj() const { return {re_, -im_}; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend GaussianRational operator-(const GaussianRational& a) { return {Rational(-a.re_), Rational(-a.im_)}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline bool is_zero(const GaussianRational& z) { return is_zero(z.real()) && is_zero(z.imag()); }

std::string to_string(const GaussianRational& z);

// i^k for any integer k.
GaussianRational i_power(int k);

} // namespace symcoh
