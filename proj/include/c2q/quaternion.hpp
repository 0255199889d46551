#pragma once

#include "c2q/brauer.hpp"
#include "c2q/quadform.hpp"

#include <array>
#include <optional>
#include <string>

namespace c2q {

/// The algebra [alpha, beta) generated by x, y with x^2 + x = alpha,
/// y^2 = beta and y x y^{-1} = x + 1.
class Quaternion {
public:
    Quaternion(FieldCtx field, Elem alpha, Elem beta);

    const FieldCtx& field() const noexcept { return field_; }
    const Elem& alpha() const noexcept { return alpha_; }
    const Elem& beta() const noexcept { return beta_; }

    std::string to_string() const;

    friend bool operator==(const Quaternion& a, const Quaternion& b) noexcept
    {
        return a.field_ == b.field_ && a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    }

private:
    FieldCtx field_;
    Elem alpha_;
    Elem beta_;
};

/// a + b x + c y + d xy.
class QuatElement {
public:
    QuatElement(Quaternion algebra, Elem a, Elem b, Elem c, Elem d);

    static QuatElement scalar(const Quaternion& q, const Elem& s);
    static QuatElement x(const Quaternion& q);
    static QuatElement y(const Quaternion& q);
    static QuatElement xy(const Quaternion& q);

    const Quaternion& algebra() const noexcept { return algebra_; }
    const Elem& operator[](std::size_t i) const { return c_[i]; }
    const std::array<Elem, 4>& coords() const noexcept { return c_; }

    bool is_zero() const noexcept;
    /// The scalar value if this element lies in F.
    std::optional<Elem> as_scalar() const;

    QuatElement operator+(const QuatElement& o) const;
    QuatElement operator*(const QuatElement& o) const;
    QuatElement scaled(const Elem& s) const;
    QuatElement conj() const;
    Elem nrd() const;
    /// Throws DivisionByZero for zero divisors.
    QuatElement inverse() const;

    std::string to_string() const;

    friend bool operator==(const QuatElement& a, const QuatElement& b) noexcept
    {
        return a.algebra_ == b.algebra_ && a.c_ == b.c_;
    }

private:
    Quaternion algebra_;
    std::array<Elem, 4> c_;
};

/// <<beta, alpha]]. In the expanded form [1, alpha] + [beta, alpha/beta],
/// nrd(a + bx + cy + dxy) is the value at (a, b, c, beta d).
PfisterQ norm_form(const Quaternion& q);
Vec norm_form_coordinates(const QuatElement& u);
/// Inverse of norm_form_coordinates.
QuatElement element_from_norm_coordinates(const Quaternion& q, const Vec& v);

BrauerClass brauer_class(const Quaternion& q);

/// [alpha, beta) -> [alpha^2 + beta, beta).
Quaternion iso_shift(const Quaternion& q);
/// [alpha, beta) -> [alpha, beta alpha); ZeroAlpha when alpha = 0.
Quaternion iso_scale(const Quaternion& q);
/// [alpha, beta) + [alpha, gamma) = [alpha, beta gamma) in the Brauer group.
Quaternion brauer_mul_same_alpha(const Quaternion& q1, const Quaternion& q2);
/// Replaces beta by its class modulo nonzero squares: over GF(2^k)(t) the
/// monic squarefree polynomial with the same square class, over GF(2^k)
/// the element 1. Over symbolic fields only exact squares reduce.
Quaternion reduce_right_slot(const Quaternion& q);

/// Generator-level check that the source algebra contains w, z with
/// w^2 = target beta, z^2 + z = target alpha and w z w^{-1} = z + 1.
struct WitnessReport {
    Quaternion source;
    Quaternion target;
    QuatElement w;
    QuatElement z;
    bool w_square;
    bool z_artin_schreier;
    bool conjugation;

    bool holds() const noexcept { return w_square && z_artin_schreier && conjugation; }
};

struct SlotSquareResult {
    Quaternion result;
    WitnessReport witness;
};

/// [alpha, beta) -> [alpha + lambda^2 alpha / beta, beta + lambda^2), with
/// w = y + lambda and z = x + (lambda / beta) xy.
SlotSquareResult right_slot_square(const Quaternion& q, const Elem& lambda);

/// Exact decisions over GF(2^k) and GF(2^k)(t); UnsupportedField otherwise.
bool is_division(const Quaternion& q);
bool is_isomorphic(const Quaternion& q1, const Quaternion& q2);

} // namespace c2q
