#pragma once

#include "c2q/place.hpp"

#include <vector>

namespace c2q {

/// Truncated Laurent expansion at a place v in the local parameter u, where
/// u = t - theta for a finite place (theta the class of t in the residue
/// field) and u = 1/t at infinity. Coefficients lie in the residue field.
struct LaurentSeries {
    Place place;
    ResidueField residue_field;
    int valuation = 0;
    /// coeffs[i] is the coefficient of u^(valuation + i).
    std::vector<Poly> coeffs;
    bool zero = false;

    int precision() const noexcept { return static_cast<int>(coeffs.size()); }

    /// Coefficient of u^e; zero below the valuation. Throws InvalidArgument
    /// for exponents beyond the known window.
    Poly coefficient(int e) const;

    /// Product; precision is the minimum of the operand precisions.
    LaurentSeries operator*(const LaurentSeries& o) const;
};

/// Residue field at a place (GF(2^k) itself at infinity).
ResidueField residue_field_at(const Place& v);

/// Coefficients in u of p(theta + u).
std::vector<Poly> taylor_shift(const Poly& p, const ResidueField& field);

/// Expansion of x at v with prec >= 1 known terms starting at the exact valuation.
LaurentSeries laurent_expand(const RatFunc& x, const Place& v, int prec);

} // namespace c2q
