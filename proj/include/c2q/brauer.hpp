#pragma once

#include "c2q/field.hpp"
#include "c2q/local_symbols.hpp"

#include <optional>
#include <vector>

namespace c2q {

struct QuatSymbol {
    Elem alpha;
    Elem beta;
};

/// A 2-torsion Brauer class kept as a formal sum of quaternion symbols
/// [alpha, beta). Over GF(2^k)(t) the class also carries its ramification
/// set, which classifies it; over GF(2^k) every class is trivial. Symbolic
/// fields have no exact equality.
class BrauerClass {
public:
    static BrauerClass trivial(const FieldCtx& field);
    static BrauerClass symbol(const FieldCtx& field, const Elem& alpha, const Elem& beta);

    const FieldCtx& field() const noexcept { return field_; }
    const std::vector<QuatSymbol>& symbols() const noexcept { return symbols_; }

    bool exact() const noexcept { return ram_.has_value(); }
    /// Throws UnsupportedField over symbolic fields.
    const PlaceSet& ramification() const;
    bool is_trivial() const { return ramification().empty(); }

    BrauerClass operator+(const BrauerClass& o) const;
    BrauerClass& operator+=(const BrauerClass& o) { return *this = *this + o; }

    /// Exact equality; throws UnsupportedField over symbolic fields.
    friend bool operator==(const BrauerClass& a, const BrauerClass& b);

private:
    BrauerClass(FieldCtx field, std::vector<QuatSymbol> symbols, std::optional<PlaceSet> ram)
        : field_(std::move(field)), symbols_(std::move(symbols)), ram_(std::move(ram))
    {
    }

    FieldCtx field_;
    std::vector<QuatSymbol> symbols_;
    std::optional<PlaceSet> ram_;
};

} // namespace c2q
