#include "c2q/artin_schreier.hpp"

#include "c2q/error.hpp"
#include "c2q/laurent.hpp"

#include <map>

namespace c2q {

namespace {

// Digits of a in base pi: a = sum digits[j] pi^j, deg digits[j] < deg pi.
std::vector<Poly> adic_digits(Poly a, const Poly& pi, int count)
{
    std::vector<Poly> digits;
    for (int j = 0; j < count; ++j) {
        auto [q, r] = a.divmod(pi);
        digits.push_back(std::move(r));
        a = std::move(q);
    }
    return digits;
}

RatFunc over_power(const Poly& num, const Poly& pi, int m)
{
    Poly den = Poly::constant(num.field(), 1);
    for (int i = 0; i < m; ++i)
        den = den * pi;
    return RatFunc(num, std::move(den));
}

} // namespace

ArtinSchreierReduction artin_schreier_reduce(const RatFunc& a)
{
    const GF2k& f = a.field();
    RatFunc preimage(f);
    RatFunc canonical(f);

    auto [poly_part, rem] = a.num().divmod(a.den());

    // polar parts, one place at a time
    if (!a.den().is_constant()) {
        for (const Factor& fa : factor(a.den())) {
            const Poly& pi = fa.poly;
            const int e = fa.multiplicity;
            Poly m = Poly::constant(f, 1);
            for (int i = 0; i < e; ++i)
                m = m * pi;
            const Poly cofactor = a.den() / m;
            const Poly local = mulmod(rem, invmod(cofactor, m), m);
            const std::vector<Poly> digits = adic_digits(local, pi, e);

            // coef[order] is the coefficient of pi^(-order)
            std::vector<Poly> coef(static_cast<std::size_t>(e) + 1, Poly(f));
            for (int j = 0; j < e; ++j)
                coef[e - j] = digits[j];

            const ResidueField kappa(pi);
            for (int order = e; order >= 2; --order) {
                if (order % 2 != 0 || coef[order].is_zero())
                    continue;
                const Poly s = kappa.sqrt(coef[order]);
                const Poly carry = (s.square() + coef[order]) / pi;
                coef[order] = Poly(f);
                coef[order - 1] += carry;
                coef[order / 2] += s;
                preimage += over_power(s, pi, order / 2);
            }
            for (int order = 1; order <= e; ++order)
                if (!coef[order].is_zero())
                    canonical += over_power(coef[order], pi, order);
        }
    }

    // polynomial part: kill even degrees from the top down
    std::vector<GF2k::Elem> pc = poly_part.coeffs();
    Poly poly_pre(f);
    for (int j = static_cast<int>(pc.size()) - 1; j >= 2; --j) {
        if (j % 2 != 0 || pc[j] == 0)
            continue;
        const GF2k::Elem s = f.sqrt(pc[j]);
        pc[j] = 0;
        pc[j / 2] ^= s;
        poly_pre += Poly::monomial(f, s, j / 2);
    }
    GF2k::Elem c = pc.empty() ? 0 : pc[0];
    GF2k::Elem target = f.trace(c) ? f.trace_one() : 0;
    if (!pc.empty())
        pc[0] = target;
    const auto x0 = f.solve_artin_schreier(c ^ target);
    if (!x0)
        throw Error(ErrorCode::InvalidArgument, "internal: constant reduction failed");
    poly_pre += Poly::constant(f, *x0);

    canonical += RatFunc(Poly(f, std::move(pc)));
    preimage += RatFunc(poly_pre);
    return {canonical, preimage};
}

std::optional<RatFunc> solve_artin_schreier(const RatFunc& c)
{
    ArtinSchreierReduction r = artin_schreier_reduce(c);
    if (!r.canonical.is_zero())
        return std::nullopt;
    return r.preimage;
}

bool artin_schreier_split_at(const RatFunc& a, const Place& v)
{
    if (a.is_zero())
        return true;
    const int val = valuation(a, v);
    if (val > 0)
        return true; // Hensel: the maximal ideal lies in the image
    const LaurentSeries s = laurent_expand(a, v, 1 - val);
    const ResidueField& kappa = s.residue_field;
    // exponent -> coefficient, for exponents val..0
    std::map<int, Poly> c;
    for (int e = val; e <= 0; ++e)
        c.emplace(e, s.coefficient(e));
    for (int e = val; e < 0; ++e) {
        Poly& ce = c.at(e);
        if ((-e) % 2 != 0 || ce.is_zero())
            continue;
        const Poly root = kappa.sqrt(ce);
        ce = kappa.zero();
        Poly& half = c.at(e / 2);
        half = kappa.add(half, root);
    }
    for (int e = val; e < 0; ++e)
        if (!c.at(e).is_zero())
            return false;
    return kappa.trace(c.at(0)) == 0;
}

} // namespace c2q
