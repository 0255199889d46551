#include "c2q/local_symbols.hpp"

#include "c2q/error.hpp"
#include "c2q/laurent.hpp"

#include <algorithm>
#include <iterator>

namespace c2q {

PlaceSet candidate_places(const RatFunc& alpha, const RatFunc& beta)
{
    if (beta.is_zero())
        throw Error(ErrorCode::ZeroSlot, "beta must be nonzero");
    PlaceSet out;
    out.insert(Place::infinity(beta.field()));
    for (const Poly* p : {&beta.num(), &beta.den(), &alpha.den()})
        for (Poly& q : irreducible_factors(*p))
            out.insert(Place::finite(std::move(q)));
    return out;
}

unsigned schmid_symbol(const RatFunc& alpha, const RatFunc& beta, const Place& v)
{
    if (beta.is_zero())
        throw Error(ErrorCode::ZeroSlot, "beta must be nonzero");
    if (alpha.is_zero())
        return 0;
    // At infinity, work in u = 1/t; the residue of a differential does not
    // depend on the chosen coordinate.
    const RatFunc a = v.is_infinity() ? alpha.invert_variable() : alpha;
    const RatFunc b = v.is_infinity() ? beta.invert_variable() : beta;
    const Place local = v.is_infinity() ? Place::finite(Poly::variable(beta.field())) : v;
    const RatFunc integrand = a * b.derivative() / b;
    if (integrand.is_zero())
        return 0;
    const int val = valuation(integrand, local);
    if (val >= 0)
        return 0;
    const LaurentSeries s = laurent_expand(integrand, local, -val);
    return s.residue_field.trace(s.coefficient(-1));
}

SymbolTable symbol_table(const RatFunc& alpha, const RatFunc& beta)
{
    SymbolTable table{alpha, beta, {}, {}, true};
    unsigned sum = 0;
    for (const Place& v : candidate_places(alpha, beta)) {
        const unsigned s = schmid_symbol(alpha, beta, v);
        table.entries.emplace_back(v, s);
        if (s)
            table.ramification.insert(v);
        sum ^= s;
    }
    table.reciprocity = sum == 0;
    return table;
}

PlaceSet ramification_set(const RatFunc& alpha, const RatFunc& beta)
{
    return symbol_table(alpha, beta).ramification;
}

PlaceSet symmetric_difference(const PlaceSet& a, const PlaceSet& b)
{
    PlaceSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

} // namespace c2q
