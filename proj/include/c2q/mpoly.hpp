#pragma once

#include "c2q/ratfunc.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace c2q {

using Monomial = std::vector<unsigned>;

/// Sparse multivariate polynomial over GF(2^k) in a fixed number of
/// variables, terms kept in descending lexicographic order.
class MPoly {
public:
    using Elem = GF2k::Elem;
    using Terms = std::map<Monomial, Elem, std::greater<>>;

    MPoly(const GF2k& field, std::size_t nvars) : field_(&field), nvars_(nvars) {}

    static MPoly constant(const GF2k& field, std::size_t nvars, Elem c);
    static MPoly variable(const GF2k& field, std::size_t nvars, std::size_t index);

    const GF2k& field() const noexcept { return *field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;
    Elem constant_term() const noexcept;
    /// Lex-leading term; requires nonzero.
    const std::pair<const Monomial, Elem>& lead() const { return *terms_.begin(); }

    unsigned degree_in(std::size_t var) const noexcept;
    unsigned total_degree() const noexcept;

    MPoly operator+(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly scale(Elem c) const;
    MPoly mul_monomial(const Monomial& m, Elem c) const;
    MPoly square() const;
    MPoly derivative(std::size_t var) const;

    /// Exact division; throws InvalidArgument if d does not divide this.
    MPoly exact_div(const MPoly& d) const;

    /// Leading coefficient made 1.
    MPoly normalized() const;

    /// Coefficients as a polynomial in one variable: map exponent -> coefficient.
    std::map<unsigned, MPoly> coefficients_in(std::size_t var) const;

    /// Substitute univariate rational functions for every variable.
    RatFunc evaluate(const std::vector<RatFunc>& values) const;

    friend bool operator==(const MPoly& a, const MPoly& b) noexcept
    {
        return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::size_t term_count() const noexcept;
    std::string to_string(const std::vector<std::string>& vars) const;

private:
    void add_term(const Monomial& m, Elem c);

    const GF2k* field_;
    std::size_t nvars_;
    Terms terms_;
};

/// Normalized gcd via recursive primitive remainder sequences.
MPoly gcd(const MPoly& a, const MPoly& b);

/// Reduced multivariate rational function; denominator normalized so that
/// its lex-leading coefficient is 1.
class MRatFunc {
public:
    MRatFunc(const GF2k& field, std::size_t nvars);
    explicit MRatFunc(MPoly num);
    MRatFunc(MPoly num, MPoly den);

    const GF2k& field() const noexcept { return num_.field(); }
    std::size_t nvars() const noexcept { return num_.nvars(); }
    const MPoly& num() const noexcept { return num_; }
    const MPoly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }

    MRatFunc operator+(const MRatFunc& o) const;
    MRatFunc operator*(const MRatFunc& o) const;
    MRatFunc operator/(const MRatFunc& o) const;
    MRatFunc inverse() const;
    MRatFunc square() const;

    /// Square root if the element lies in F^2 (all exponents even after reduction).
    std::optional<MRatFunc> sqrt() const;

    /// Substitution of univariate values; nullopt when the denominator vanishes.
    std::optional<RatFunc> specialize(const std::vector<RatFunc>& values) const;

    friend bool operator==(const MRatFunc& a, const MRatFunc& b) noexcept
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(const std::vector<std::string>& vars) const;

private:
    MPoly num_;
    MPoly den_;
};

} // namespace c2q
