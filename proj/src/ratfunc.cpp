#include "c2q/ratfunc.hpp"

#include "c2q/error.hpp"

#include <algorithm>

namespace c2q {

RatFunc::RatFunc(const GF2k& field) : num_(field), den_(Poly::constant(field, 1)) {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field(), 1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
    if (!den_.is_monic()) {
        const auto inv = num_.field().inv(den_.lead());
        num_ = num_.scale(inv);
        den_ = den_.scale(inv);
    }
}

RatFunc RatFunc::constant(const GF2k& field, GF2k::Elem c)
{
    return RatFunc(Poly::constant(field, c));
}

RatFunc RatFunc::variable(const GF2k& field)
{
    return RatFunc(Poly::variable(field));
}

int RatFunc::height() const noexcept
{
    return std::max({0, num_.degree(), den_.degree()});
}

RatFunc RatFunc::operator+(const RatFunc& o) const
{
    if (den_ == o.den_)
        return RatFunc(num_ + o.num_, den_);
    if (den_.is_one())
        return RatFunc(num_ * o.den_ + o.num_, o.den_);
    if (o.den_.is_one())
        return RatFunc(num_ + o.num_ * den_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const
{
    if (den_.is_one() && o.den_.is_one())
        return RatFunc(num_ * o.num_);
    // cross-cancel before multiplying to keep degrees small
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n1 = g1.is_one() || g1.is_zero() ? num_ : num_ / g1;
    Poly d2 = g1.is_one() || g1.is_zero() ? o.den_ : o.den_ / g1;
    Poly n2 = g2.is_one() || g2.is_zero() ? o.num_ : o.num_ / g2;
    Poly d1 = g2.is_one() || g2.is_zero() ? den_ : den_ / g2;
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const
{
    return *this * o.inverse();
}

RatFunc RatFunc::square() const
{
    RatFunc r(num_.field());
    r.num_ = num_.square();
    r.den_ = den_.square();
    return r;
}

RatFunc RatFunc::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    RatFunc r = constant(field(), 1);
    RatFunc b = *this;
    while (e) {
        if (e & 1)
            r *= b;
        b = b.square();
        e >>= 1;
    }
    return r;
}

RatFunc RatFunc::derivative() const
{
    // (N/D)' = (N'D + ND') / D^2 in characteristic 2
    return RatFunc(num_.derivative() * den_ + num_ * den_.derivative(), den_.square());
}

std::optional<RatFunc> RatFunc::sqrt() const
{
    // reduced N/D is a square iff N and D are squares (D monic)
    if (!num_.is_square() || !den_.is_square())
        return std::nullopt;
    RatFunc r(num_.field());
    r.num_ = num_.sqrt();
    r.den_ = den_.sqrt();
    return r;
}

RatFunc RatFunc::invert_variable() const
{
    if (is_zero())
        return *this;
    // N(1/t)/D(1/t) = t^(dD - dN) rev(N) / rev(D)
    const int shift = den_.degree() - num_.degree();
    Poly n = num_.reversed();
    Poly d = den_.reversed();
    if (shift >= 0)
        n = n.shift(shift);
    else
        d = d.shift(-shift);
    return RatFunc(std::move(n), std::move(d));
}

std::string RatFunc::to_string(const std::string& var) const
{
    if (den_.is_one())
        return num_.to_string(var);
    std::string n = num_.to_string(var);
    if (num_.term_count() > 1)
        n = "(" + n + ")";
    std::string d = den_.to_string(var);
    if (den_.term_count() > 1)
        d = "(" + d + ")";
    return n + "/" + d;
}

bool canonical_less(const RatFunc& a, const RatFunc& b) noexcept
{
    if (a.height() != b.height())
        return a.height() < b.height();
    if (a.den() != b.den())
        return a.den() < b.den();
    return a.num() < b.num();
}

} // namespace c2q
