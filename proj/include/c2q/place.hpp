#pragma once

#include "c2q/ratfunc.hpp"

#include <compare>
#include <string>
#include <vector>

namespace c2q {

/// A place of GF(2^k)(t): a monic irreducible polynomial, or infinity.
class Place {
public:
    enum class Kind { Finite, Infinity };

    /// Throws InvalidArgument unless p is monic irreducible.
    static Place finite(Poly p);
    static Place infinity(const GF2k& field);

    Kind kind() const noexcept { return kind_; }
    bool is_infinity() const noexcept { return kind_ == Kind::Infinity; }
    /// The defining irreducible; for infinity this is the uniformizer variable
    /// u = 1/t viewed as the place u = 0 of the substituted field.
    const Poly& poly() const noexcept { return poly_; }
    int residue_degree() const noexcept { return is_infinity() ? 1 : poly_.degree(); }
    const GF2k& field() const noexcept { return poly_.field(); }

    /// Finite places ordered by polynomial; infinity last.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b) noexcept;
    friend bool operator==(const Place& a, const Place& b) noexcept
    {
        return a.kind_ == b.kind_ && a.poly_ == b.poly_;
    }

    /// "(t^2+t+1)" or "inf".
    std::string to_string(const std::string& var = "t") const;

private:
    Place(Kind kind, Poly poly) : kind_(kind), poly_(std::move(poly)) {}

    Kind kind_;
    Poly poly_;
};

/// Valuation of x at v (x nonzero).
int valuation(const RatFunc& x, const Place& v);

/// The finite residue field GF(2^k)[t]/(pi). Elements are polynomials of
/// degree < deg pi; the class of t is the distinguished generator theta.
class ResidueField {
public:
    using Elem = Poly;

    explicit ResidueField(Poly modulus);

    const GF2k& base() const noexcept { return modulus_.field(); }
    const Poly& modulus() const noexcept { return modulus_; }
    int degree() const noexcept { return modulus_.degree(); }
    /// Degree over GF(2).
    unsigned absolute_degree() const noexcept
    {
        return base().degree() * static_cast<unsigned>(degree());
    }

    Elem zero() const { return Poly(base()); }
    Elem one() const { return Poly::constant(base(), 1); }
    Elem theta() const { return reduce(Poly::variable(base())); }
    Elem embed(GF2k::Elem c) const { return Poly::constant(base(), c); }

    Elem reduce(const Poly& p) const { return p % modulus_; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return (a * b) % modulus_; }
    Elem sqr(const Elem& a) const { return a.square() % modulus_; }
    Elem inv(const Elem& a) const;
    Elem sqrt(const Elem& a) const;
    /// Absolute trace to GF(2): 0 or 1.
    unsigned trace(const Elem& a) const;
    /// Evaluate a polynomial over GF(2^k) at theta.
    Elem eval_at_theta(const Poly& p) const { return reduce(p); }

    std::string to_string(const Elem& a) const;

private:
    Poly modulus_;
};

} // namespace c2q
