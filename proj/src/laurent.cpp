#include "c2q/laurent.hpp"

#include "c2q/error.hpp"

#include <algorithm>

namespace c2q {

Poly LaurentSeries::coefficient(int e) const
{
    if (e < valuation)
        return residue_field.zero();
    const int idx = e - valuation;
    if (idx >= precision())
        throw Error(ErrorCode::InvalidArgument, "coefficient beyond expansion precision");
    return coeffs[static_cast<std::size_t>(idx)];
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const
{
    if (!(place == o.place))
        throw Error(ErrorCode::InvalidArgument, "Laurent series at different places");
    const int prec = std::min(precision(), o.precision());
    LaurentSeries r{place, residue_field, valuation + o.valuation, {}, zero || o.zero};
    r.coeffs.assign(static_cast<std::size_t>(prec), residue_field.zero());
    for (int i = 0; i < prec; ++i) {
        for (int j = 0; i + j < prec; ++j)
            r.coeffs[i + j] = residue_field.add(r.coeffs[i + j], residue_field.mul(coeffs[i], o.coeffs[j]));
    }
    return r;
}

ResidueField residue_field_at(const Place& v)
{
    return ResidueField(v.poly());
}

std::vector<Poly> taylor_shift(const Poly& p, const ResidueField& field)
{
    // Horner in the ring K[u]: acc <- acc * (theta + u) + c
    const Poly theta = field.theta();
    std::vector<Poly> acc;
    for (int i = p.degree(); i >= 0; --i) {
        std::vector<Poly> next(acc.size() + 1, field.zero());
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j] = field.add(next[j], field.mul(acc[j], theta));
            next[j + 1] = field.add(next[j + 1], acc[j]);
        }
        next[0] = field.add(next[0], field.embed(p.coeff(i)));
        acc = std::move(next);
    }
    return acc;
}

namespace {

int leading_zeros(const std::vector<Poly>& s)
{
    int v = 0;
    while (v < static_cast<int>(s.size()) && s[v].is_zero())
        ++v;
    return v;
}

Poly series_at(const std::vector<Poly>& s, int i, const ResidueField& field)
{
    return i < static_cast<int>(s.size()) ? s[i] : field.zero();
}

} // namespace

LaurentSeries laurent_expand(const RatFunc& x, const Place& v, int prec)
{
    if (prec < 1)
        throw Error(ErrorCode::InvalidArgument, "expansion precision must be >= 1");
    ResidueField field = residue_field_at(v);
    LaurentSeries out{v, field, 0, {}, false};
    if (x.is_zero()) {
        out.zero = true;
        out.coeffs.assign(static_cast<std::size_t>(prec), field.zero());
        return out;
    }
    const RatFunc local = v.is_infinity() ? x.invert_variable() : x;
    const std::vector<Poly> num = taylor_shift(local.num(), field);
    const std::vector<Poly> den = taylor_shift(local.den(), field);
    const int vn = leading_zeros(num);
    const int vd = leading_zeros(den);
    out.valuation = vn - vd;

    // (num / u^vn) / (den / u^vd) as a power series to prec terms
    const Poly d0_inv = field.inv(den[vd]);
    out.coeffs.assign(static_cast<std::size_t>(prec), field.zero());
    for (int i = 0; i < prec; ++i) {
        Poly acc = series_at(num, vn + i, field);
        for (int j = 1; j <= i; ++j) {
            const Poly dj = series_at(den, vd + j, field);
            if (!dj.is_zero())
                acc = field.add(acc, field.mul(dj, out.coeffs[i - j]));
        }
        out.coeffs[i] = field.mul(acc, d0_inv);
    }
    return out;
}

} // namespace c2q
