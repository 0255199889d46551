#pragma once

#include "c2q/place.hpp"
#include "c2q/ratfunc.hpp"

#include <set>
#include <vector>

namespace c2q {

using PlaceSet = std::set<Place>;

/// Places where the local symbol of [alpha, beta) can be nonzero: infinity
/// plus every irreducible factor of num(beta), den(beta) and den(alpha).
/// Elsewhere alpha is regular and beta a unit, so the residue vanishes.
PlaceSet candidate_places(const RatFunc& alpha, const RatFunc& beta);

/// Local Artin-Schreier symbol [alpha, beta)_v in GF(2), computed as the
/// absolute trace of the residue of alpha * dbeta / beta at v. Zero iff the
/// algebra splits over the completion at v.
unsigned schmid_symbol(const RatFunc& alpha, const RatFunc& beta, const Place& v);

struct SymbolTable {
    RatFunc alpha;
    RatFunc beta;
    std::vector<std::pair<Place, unsigned>> entries; // sorted by place
    PlaceSet ramification;
    bool reciprocity = true; // sum of all entries is zero
};

SymbolTable symbol_table(const RatFunc& alpha, const RatFunc& beta);

PlaceSet ramification_set(const RatFunc& alpha, const RatFunc& beta);

/// Brauer-group addition of 2-torsion classes over GF(2^k)(t).
PlaceSet symmetric_difference(const PlaceSet& a, const PlaceSet& b);

} // namespace c2q
