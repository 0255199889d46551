#pragma once

#include "c2q/mpoly.hpp"
#include "c2q/ratfunc.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace c2q {

/// A concrete characteristic-2 base field.
///   Finite:   GF(2^k)
///   Rational: GF(2^k)(t), one indeterminate
///   Symbolic: GF(2^k)(t_1, ..., t_m), m >= 2
class FieldCtx {
public:
    enum class Kind { Finite, Rational, Symbolic };

    static FieldCtx finite(unsigned k);
    static FieldCtx rational(unsigned k, std::string var = "t");
    static FieldCtx symbolic(unsigned k, std::vector<std::string> vars);

    /// Parses `gf2`, `gf(2^k)`, `gf2(t)`, `gf(2^k)(t)`, `gf2(s,t)`, ...
    static FieldCtx parse(const std::string& spec);

    Kind kind() const noexcept { return kind_; }
    unsigned k() const noexcept { return k_; }
    const GF2k& base() const { return GF2k::get(k_); }
    const std::vector<std::string>& vars() const noexcept { return vars_; }

    /// Exact Witt/Brauer decisions are available over GF(2^k) and GF(2^k)(t).
    bool exact() const noexcept { return kind_ != Kind::Symbolic; }
    bool is_rational() const noexcept { return kind_ == Kind::Rational; }
    const std::string& var() const;

    std::string spec() const;

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept
    {
        return a.kind_ == b.kind_ && a.k_ == b.k_ && a.vars_ == b.vars_;
    }

private:
    FieldCtx(Kind kind, unsigned k, std::vector<std::string> vars)
        : kind_(kind), k_(k), vars_(std::move(vars))
    {
    }

    Kind kind_;
    unsigned k_;
    std::vector<std::string> vars_;
};

/// An element of a FieldCtx. Finite and rational fields share the univariate
/// representation (constants of GF(2^k)(t)); symbolic fields are multivariate.
class Elem {
public:
    Elem(RatFunc r) : v_(std::move(r)) {} // NOLINT(implicit)
    Elem(MRatFunc m) : v_(std::move(m)) {} // NOLINT(implicit)

    static Elem zero(const FieldCtx& f);
    static Elem one(const FieldCtx& f);
    static Elem constant(const FieldCtx& f, GF2k::Elem c);
    /// The i-th indeterminate of a rational or symbolic field.
    static Elem variable(const FieldCtx& f, std::size_t i = 0);

    bool is_symbolic() const noexcept { return std::holds_alternative<MRatFunc>(v_); }
    /// Univariate view; throws UnsupportedField for symbolic elements.
    const RatFunc& rat() const;
    const MRatFunc& mrat() const;

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    Elem operator+(const Elem& o) const;
    Elem operator-(const Elem& o) const { return *this + o; }
    Elem operator*(const Elem& o) const;
    Elem operator/(const Elem& o) const;
    Elem& operator+=(const Elem& o) { return *this = *this + o; }
    Elem& operator*=(const Elem& o) { return *this = *this * o; }
    Elem inverse() const;
    Elem square() const;
    Elem pow(long e) const;
    std::optional<Elem> sqrt() const;

    friend bool operator==(const Elem& a, const Elem& b) noexcept { return a.v_ == b.v_; }

    std::string to_string(const FieldCtx& f) const;

private:
    std::variant<RatFunc, MRatFunc> v_;
};

/// Deterministic random element: rejection-sampled reduced fraction with
/// numerator and monic denominator of degree <= degree_bound (uniform over
/// the reduced representations). Finite fields sample uniformly; symbolic
/// fields combine the variables with bounded total degree.
Elem sample_element(std::mt19937_64& rng, const FieldCtx& field, int degree_bound);
Elem sample_element(std::uint64_t seed, const FieldCtx& field, int degree_bound);
/// As above but never zero.
Elem sample_nonzero(std::mt19937_64& rng, const FieldCtx& field, int degree_bound);

/// Unbiased integer in [0, n) from a 64-bit generator (portable across
/// standard libraries, unlike std::uniform_int_distribution).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n);

} // namespace c2q
