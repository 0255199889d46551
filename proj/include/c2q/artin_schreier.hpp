#pragma once

#include "c2q/place.hpp"
#include "c2q/ratfunc.hpp"

#include <optional>

namespace c2q {

/// a = canonical + preimage^2 + preimage.
struct ArtinSchreierReduction {
    RatFunc canonical;
    RatFunc preimage;
};

/// Canonical representative of a modulo the image of x -> x^2 + x in
/// GF(2^k)(t): every polar part has only odd orders, the polynomial part is
/// supported on odd degrees, and the constant term is 0 or the field's
/// smallest trace-one element. The representative is 0 iff a = x^2 + x for
/// some rational function x, which is returned as the preimage.
ArtinSchreierReduction artin_schreier_reduce(const RatFunc& a);

inline RatFunc as_canonical(const RatFunc& a)
{
    return artin_schreier_reduce(a).canonical;
}

/// A root of x^2 + x = c in GF(2^k)(t), if any.
std::optional<RatFunc> solve_artin_schreier(const RatFunc& c);

/// Whether a = x^2 + x is solvable in the completion at v.
bool artin_schreier_split_at(const RatFunc& a, const Place& v);

} // namespace c2q
