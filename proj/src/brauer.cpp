#include "c2q/brauer.hpp"

#include "c2q/error.hpp"

namespace c2q {

BrauerClass BrauerClass::trivial(const FieldCtx& field)
{
    std::optional<PlaceSet> ram;
    if (field.exact())
        ram.emplace();
    return BrauerClass(field, {}, std::move(ram));
}

BrauerClass BrauerClass::symbol(const FieldCtx& field, const Elem& alpha, const Elem& beta)
{
    if (beta.is_zero())
        throw Error(ErrorCode::ZeroSlot, "quaternion symbol needs beta != 0");
    std::optional<PlaceSet> ram;
    switch (field.kind()) {
    case FieldCtx::Kind::Finite:
        ram.emplace();
        break;
    case FieldCtx::Kind::Rational:
        ram = ramification_set(alpha.rat(), beta.rat());
        break;
    case FieldCtx::Kind::Symbolic:
        break;
    }
    return BrauerClass(field, {QuatSymbol{alpha, beta}}, std::move(ram));
}

const PlaceSet& BrauerClass::ramification() const
{
    if (!ram_)
        throw Error(ErrorCode::UnsupportedField, "no exact Brauer class over " + field_.spec());
    return *ram_;
}

BrauerClass BrauerClass::operator+(const BrauerClass& o) const
{
    if (!(field_ == o.field_))
        throw Error(ErrorCode::FieldMismatch, "Brauer classes over different fields");
    std::vector<QuatSymbol> syms = symbols_;
    syms.insert(syms.end(), o.symbols_.begin(), o.symbols_.end());
    std::optional<PlaceSet> ram;
    if (ram_ && o.ram_)
        ram = symmetric_difference(*ram_, *o.ram_);
    return BrauerClass(field_, std::move(syms), std::move(ram));
}

bool operator==(const BrauerClass& a, const BrauerClass& b)
{
    return a.ramification() == b.ramification();
}

} // namespace c2q
