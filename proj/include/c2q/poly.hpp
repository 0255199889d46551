#pragma once

#include "c2q/gf2k.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace c2q {

/// Dense univariate polynomial over GF(2^k). The coefficient vector is kept
/// normalized: no trailing zeros, the zero polynomial is empty.
class Poly {
public:
    using Elem = GF2k::Elem;

    explicit Poly(const GF2k& field) : field_(&field) {}
    Poly(const GF2k& field, std::vector<Elem> coeffs);

    static Poly constant(const GF2k& field, Elem c);
    static Poly monomial(const GF2k& field, Elem c, int degree);
    static Poly variable(const GF2k& field) { return monomial(field, 1, 1); }

    const GF2k& field() const noexcept { return *field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    Elem coeff(int i) const noexcept
    {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
    }
    Elem lead() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const { return *this + o; }
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scale(Elem c) const;
    Poly shift(int n) const; // multiply by t^n, n >= 0
    Poly monic() const;
    Poly derivative() const;
    Poly square() const;
    Elem eval(Elem x) const;

    /// Quotient and remainder; throws DivisionByZero for a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    /// True when every odd-degree coefficient vanishes (f is a square).
    bool is_square() const noexcept;
    /// Square root of a square polynomial.
    Poly sqrt() const;

    /// Coefficient-reversed polynomial t^n f(1/t) for n = deg f.
    Poly reversed() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept
    {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }
    /// Order by degree, then coefficients from high to low.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept;

    /// Renders with the given variable name, e.g. "t^2+(g+1)*t+1".
    std::string to_string(const std::string& var = "t") const;

    /// Number of printed summands (used to decide parenthesization).
    std::size_t term_count() const noexcept;

private:
    void normalize() noexcept;

    const GF2k* field_;
    std::vector<Elem> coeffs_;
};

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

struct XgcdResult {
    Poly g, s, t; // g = s a + t b
};
XgcdResult xgcd(const Poly& a, const Poly& b);

/// a * b mod m.
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);

/// Inverse of a modulo m; throws DivisionByZero if not coprime.
Poly invmod(const Poly& a, const Poly& m);

bool is_irreducible(const Poly& f);

struct Factor {
    Poly poly;
    int multiplicity;
};

/// Factorization into monic irreducibles, sorted by (degree, coefficients).
/// The leading coefficient of f is not part of the result. Throws
/// ZeroPolynomial on f = 0.
std::vector<Factor> factor(const Poly& f);

/// Distinct monic irreducible factors of f, sorted.
std::vector<Poly> irreducible_factors(const Poly& f);

/// All monic irreducible polynomials of exactly this degree, in sorted order.
std::vector<Poly> monic_irreducibles(const GF2k& field, int degree);

} // namespace c2q
