#pragma once

#include "c2q/poly.hpp"

#include <optional>
#include <string>

namespace c2q {

/// Element of GF(2^k)(t) in canonical reduced form: monic denominator,
/// gcd(num, den) = 1. The zero element has denominator 1.
class RatFunc {
public:
    explicit RatFunc(const GF2k& field);
    explicit RatFunc(Poly num);
    /// Reduces eagerly; throws ZeroDenominator if den = 0.
    RatFunc(Poly num, Poly den);

    static RatFunc constant(const GF2k& field, GF2k::Elem c);
    static RatFunc variable(const GF2k& field);

    const GF2k& field() const noexcept { return num_.field(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_one(); }

    /// max(deg num, deg den); 0 for constants.
    int height() const noexcept;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const { return *this + o; }
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inverse() const;
    RatFunc square() const;
    RatFunc pow(long e) const;
    RatFunc derivative() const;

    /// Square root if this element lies in GF(2^k)(t^2) = F^2.
    std::optional<RatFunc> sqrt() const;

    /// The substitution t -> 1/t.
    RatFunc invert_variable() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::string& var = "t") const;

private:
    Poly num_;
    Poly den_;
};

/// Total order used for deterministic enumeration: (height, den, num).
bool canonical_less(const RatFunc& a, const RatFunc& b) noexcept;

} // namespace c2q
