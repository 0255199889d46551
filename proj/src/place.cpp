#include "c2q/place.hpp"

#include "c2q/error.hpp"

namespace c2q {

Place Place::finite(Poly p)
{
    if (!p.is_monic() || !is_irreducible(p))
        throw Error(ErrorCode::InvalidArgument, "place polynomial must be monic irreducible: " + p.to_string());
    return Place(Kind::Finite, std::move(p));
}

Place Place::infinity(const GF2k& field)
{
    return Place(Kind::Infinity, Poly::variable(field));
}

std::strong_ordering operator<=>(const Place& a, const Place& b) noexcept
{
    if (a.kind_ != b.kind_)
        return a.is_infinity() ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.poly_ <=> b.poly_;
}

std::string Place::to_string(const std::string& var) const
{
    if (is_infinity())
        return "inf";
    return "(" + poly_.to_string(var) + ")";
}

namespace {

int poly_valuation(Poly p, const Poly& pi)
{
    int v = 0;
    for (;;) {
        auto [q, r] = p.divmod(pi);
        if (!r.is_zero())
            return v;
        p = std::move(q);
        ++v;
    }
}

} // namespace

int valuation(const RatFunc& x, const Place& v)
{
    if (x.is_zero())
        throw Error(ErrorCode::InvalidArgument, "valuation of zero");
    if (v.is_infinity())
        return x.den().degree() - x.num().degree();
    return poly_valuation(x.num(), v.poly()) - poly_valuation(x.den(), v.poly());
}

ResidueField::ResidueField(Poly modulus) : modulus_(std::move(modulus))
{
    if (modulus_.degree() < 1)
        throw Error(ErrorCode::InvalidArgument, "residue field modulus must have positive degree");
}

ResidueField::Elem ResidueField::inv(const Elem& a) const
{
    if (a.is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero in residue field");
    return invmod(a, modulus_);
}

ResidueField::Elem ResidueField::sqrt(const Elem& a) const
{
    // a^(2^(n-1)) with n the absolute degree
    Elem r = a;
    for (unsigned i = 1; i < absolute_degree(); ++i)
        r = sqr(r);
    return r;
}

unsigned ResidueField::trace(const Elem& a) const
{
    Elem t = a;
    Elem x = a;
    for (unsigned i = 1; i < absolute_degree(); ++i) {
        x = sqr(x);
        t = t + x;
    }
    // the trace lies in GF(2), embedded as a constant polynomial
    return t.is_zero() ? 0u : (t.coeff(0) & 1u);
}

std::string ResidueField::to_string(const Elem& a) const
{
    return a.to_string("theta");
}

} // namespace c2q
