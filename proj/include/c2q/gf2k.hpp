#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace c2q {

/// Carry-less product of two GF(2)[x] polynomials packed in 32-bit words.
std::uint64_t clmul(std::uint32_t a, std::uint32_t b) noexcept;

/// Irreducibility over GF(2) of a bit-packed polynomial (bit i = coefficient of x^i).
bool gf2_irreducible(std::uint64_t poly) noexcept;

/// Lexicographically smallest irreducible polynomial of degree k over GF(2)
/// (coefficients read from high to low), i.e. the smallest such bit pattern.
std::uint32_t canonical_modulus(unsigned k);

/// The finite field GF(2^k), 1 <= k <= 16, with the canonical modulus.
///
/// Elements are bit-packed residues modulo the defining polynomial; the class
/// of x is exposed as the generator g. One instance exists per degree, so
/// comparing field references by address is a valid equality test.
class GF2k {
public:
    using Elem = std::uint32_t;

    static constexpr unsigned max_degree = 16;

    static const GF2k& get(unsigned k);

    unsigned degree() const noexcept { return k_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint32_t size() const noexcept { return 1u << k_; }

    Elem generator() const noexcept { return k_ == 1 ? 0u : 2u; }

    Elem add(Elem a, Elem b) const noexcept { return a ^ b; }
    Elem mul(Elem a, Elem b) const noexcept;
    Elem sqr(Elem a) const noexcept { return mul(a, a); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// Unique square root, a^(2^(k-1)).
    Elem sqrt(Elem a) const noexcept;

    /// Absolute trace to GF(2).
    unsigned trace(Elem a) const noexcept;

    /// Smallest element (as an integer) of absolute trace 1.
    Elem trace_one() const noexcept { return trace_one_; }

    /// A root of x^2 + x = c, if one exists (iff trace(c) = 0).
    std::optional<Elem> solve_artin_schreier(Elem c) const;

    /// Renders an element as a polynomial in g, e.g. "g^2+1".
    std::string to_string(Elem a) const;

private:
    explicit GF2k(unsigned k);

    unsigned k_;
    std::uint32_t modulus_;
    Elem trace_one_ = 0;
};

} // namespace c2q
