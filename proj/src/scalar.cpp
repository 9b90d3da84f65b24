#include "symcoh/scalar.hpp"

#include <stdexcept>

namespace symcoh {

Rational make_rational(long num, long den)
{
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("invalid rational '" + text + "'");
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    if (sgn(norm) == 0) throw std::domain_error("division by zero in Q(i)");
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
}

std::string to_string(const GaussianRational& z)
{
    if (z.is_real()) return to_string(z.real());
    std::string out;
    if (!is_zero(z.real())) out = to_string(z.real()) + (sgn(z.imag()) > 0 ? "+" : "");
    return out + to_string(z.imag()) + "*i";
}

GaussianRational i_power(int k)
{
    switch (((k % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i();
    }
}

} // namespace symcoh
