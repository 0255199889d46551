#include "c2q/quaternion.hpp"

#include "c2q/error.hpp"

namespace c2q {

Quaternion::Quaternion(FieldCtx field, Elem alpha, Elem beta)
    : field_(std::move(field)), alpha_(std::move(alpha)), beta_(std::move(beta))
{
    if (beta_.is_zero())
        throw Error(ErrorCode::ZeroSlot, "quaternion algebra needs beta != 0");
}

std::string Quaternion::to_string() const
{
    return "[" + alpha_.to_string(field_) + "," + beta_.to_string(field_) + ")";
}

// ---------------------------------------------------------------- elements

QuatElement::QuatElement(Quaternion algebra, Elem a, Elem b, Elem c, Elem d)
    : algebra_(std::move(algebra)), c_{std::move(a), std::move(b), std::move(c), std::move(d)}
{
}

QuatElement QuatElement::scalar(const Quaternion& q, const Elem& s)
{
    const Elem z = Elem::zero(q.field());
    return QuatElement(q, s, z, z, z);
}

QuatElement QuatElement::x(const Quaternion& q)
{
    const Elem z = Elem::zero(q.field());
    return QuatElement(q, z, Elem::one(q.field()), z, z);
}

QuatElement QuatElement::y(const Quaternion& q)
{
    const Elem z = Elem::zero(q.field());
    return QuatElement(q, z, z, Elem::one(q.field()), z);
}

QuatElement QuatElement::xy(const Quaternion& q)
{
    const Elem z = Elem::zero(q.field());
    return QuatElement(q, z, z, z, Elem::one(q.field()));
}

bool QuatElement::is_zero() const noexcept
{
    for (const Elem& e : c_)
        if (!e.is_zero())
            return false;
    return true;
}

std::optional<Elem> QuatElement::as_scalar() const
{
    if (c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero())
        return c_[0];
    return std::nullopt;
}

QuatElement QuatElement::operator+(const QuatElement& o) const
{
    if (!(algebra_ == o.algebra_))
        throw Error(ErrorCode::AlgebraMismatch, "elements of different algebras");
    QuatElement r = *this;
    for (std::size_t i = 0; i < 4; ++i)
        r.c_[i] += o.c_[i];
    return r;
}

QuatElement QuatElement::operator*(const QuatElement& o) const
{
    if (!(algebra_ == o.algebra_))
        throw Error(ErrorCode::AlgebraMismatch, "elements of different algebras");
    const Elem& al = algebra_.alpha();
    const Elem& be = algebra_.beta();
    const Elem& a1 = c_[0];
    const Elem& b1 = c_[1];
    const Elem& c1 = c_[2];
    const Elem& d1 = c_[3];
    const Elem& a2 = o.c_[0];
    const Elem& b2 = o.c_[1];
    const Elem& c2 = o.c_[2];
    const Elem& d2 = o.c_[3];
    // basis products:
    //   x x = alpha + x     x y = xy              x xy = alpha y + xy
    //   y x = y + xy        y y = beta            y xy = beta + beta x
    //   xy x = alpha y      xy y = beta x         xy xy = alpha beta
    Elem r0 = a1 * a2 + al * b1 * b2 + be * c1 * c2 + be * c1 * d2 + al * be * d1 * d2;
    Elem r1 = a1 * b2 + b1 * a2 + b1 * b2 + be * c1 * d2 + be * d1 * c2;
    Elem r2 = a1 * c2 + c1 * a2 + al * b1 * d2 + c1 * b2 + al * d1 * b2;
    Elem r3 = a1 * d2 + d1 * a2 + b1 * c2 + b1 * d2 + c1 * b2;
    return QuatElement(algebra_, std::move(r0), std::move(r1), std::move(r2), std::move(r3));
}

QuatElement QuatElement::scaled(const Elem& s) const
{
    QuatElement r = *this;
    for (Elem& e : r.c_)
        e *= s;
    return r;
}

QuatElement QuatElement::conj() const
{
    return QuatElement(algebra_, c_[0] + c_[1], c_[1], c_[2], c_[3]);
}

Elem QuatElement::nrd() const
{
    const Elem& al = algebra_.alpha();
    const Elem& be = algebra_.beta();
    const Elem& a = c_[0];
    const Elem& b = c_[1];
    const Elem& c = c_[2];
    const Elem& d = c_[3];
    return a.square() + a * b + al * b.square() + be * (c.square() + c * d + al * d.square());
}

QuatElement QuatElement::inverse() const
{
    const Elem n = nrd();
    if (n.is_zero())
        throw Error(ErrorCode::DivisionByZero, "element has reduced norm 0");
    return conj().scaled(n.inverse());
}

std::string QuatElement::to_string() const
{
    static const char* const names[] = {"", "x", "y", "xy"};
    const FieldCtx& f = algebra_.field();
    std::string s;
    for (std::size_t i = 0; i < 4; ++i) {
        if (c_[i].is_zero())
            continue;
        if (!s.empty())
            s += " + ";
        if (i == 0)
            s += c_[i].to_string(f);
        else if (c_[i].is_one())
            s += names[i];
        else
            s += "(" + c_[i].to_string(f) + ")*" + names[i];
    }
    return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- norm form

PfisterQ norm_form(const Quaternion& q)
{
    return PfisterQ(q.field(), {q.beta()}, q.alpha());
}

Vec norm_form_coordinates(const QuatElement& u)
{
    return Vec{u[0], u[1], u[2], u.algebra().beta() * u[3]};
}

QuatElement element_from_norm_coordinates(const Quaternion& q, const Vec& v)
{
    if (v.size() != 4)
        throw Error(ErrorCode::InvalidArgument, "norm form vectors have 4 coordinates");
    return QuatElement(q, v[0], v[1], v[2], v[3] / q.beta());
}

BrauerClass brauer_class(const Quaternion& q)
{
    return BrauerClass::symbol(q.field(), q.alpha(), q.beta());
}

// ---------------------------------------------------------------- rewrites

Quaternion iso_shift(const Quaternion& q)
{
    return Quaternion(q.field(), q.alpha().square() + q.beta(), q.beta());
}

Quaternion iso_scale(const Quaternion& q)
{
    if (q.alpha().is_zero())
        throw Error(ErrorCode::ZeroAlpha, "rescaling the right slot needs alpha != 0");
    return Quaternion(q.field(), q.alpha(), q.beta() * q.alpha());
}

Quaternion brauer_mul_same_alpha(const Quaternion& q1, const Quaternion& q2)
{
    if (!(q1.field() == q2.field()))
        throw Error(ErrorCode::FieldMismatch, "algebras over different fields");
    if (!(q1.alpha() == q2.alpha()))
        throw Error(ErrorCode::SlotMismatch, "left slots differ: " + q1.to_string() + " and " + q2.to_string());
    return Quaternion(q1.field(), q1.alpha(), q1.beta() * q2.beta());
}

Quaternion reduce_right_slot(const Quaternion& q)
{
    const FieldCtx& f = q.field();
    switch (f.kind()) {
    case FieldCtx::Kind::Finite:
        return Quaternion(f, q.alpha(), Elem::one(f));
    case FieldCtx::Kind::Rational: {
        const RatFunc& b = q.beta().rat();
        const Poly p = b.num() * b.den();
        Poly r = Poly::constant(p.field(), 1);
        for (const Factor& fa : factor(p))
            if (fa.multiplicity % 2)
                r = r * fa.poly;
        return Quaternion(f, q.alpha(), Elem(RatFunc(r)));
    }
    case FieldCtx::Kind::Symbolic:
        break;
    }
    if (q.beta().sqrt())
        return Quaternion(f, q.alpha(), Elem::one(f));
    return q;
}

SlotSquareResult right_slot_square(const Quaternion& q, const Elem& lambda)
{
    const Elem& al = q.alpha();
    const Elem& be = q.beta();
    const Elem l2 = lambda.square();
    if (l2 == be)
        throw Error(ErrorCode::LambdaSquareEqualsBeta, "lambda^2 = beta makes the new right slot vanish");
    Quaternion target(q.field(), al + l2 * al / be, be + l2);

    const QuatElement one = QuatElement::scalar(q, Elem::one(q.field()));
    const QuatElement w = QuatElement::y(q) + QuatElement::scalar(q, lambda);
    const QuatElement z = QuatElement::x(q) + QuatElement::xy(q).scaled(lambda / be);

    const QuatElement w2 = w * w;
    const QuatElement zz = z * z + z;
    const bool w_ok = w2 == QuatElement::scalar(q, target.beta());
    const bool z_ok = zz == QuatElement::scalar(q, target.alpha());
    // w z w^{-1} = z + 1, checked as w z = (z + 1) w so w need not be a unit
    const bool c_ok = w * z == (z + one) * w;
    return SlotSquareResult{target, WitnessReport{q, target, w, z, w_ok, z_ok, c_ok}};
}

// ---------------------------------------------------------------- decisions

bool is_division(const Quaternion& q)
{
    if (!q.field().exact())
        throw Error(ErrorCode::UnsupportedField, "no exact splitting decision over " + q.field().spec());
    return !brauer_class(q).is_trivial();
}

bool is_isomorphic(const Quaternion& q1, const Quaternion& q2)
{
    if (!(q1.field() == q2.field()))
        throw Error(ErrorCode::FieldMismatch, "algebras over different fields");
    if (!q1.field().exact())
        throw Error(ErrorCode::UnsupportedField, "no exact isomorphism decision over " + q1.field().spec());
    return brauer_class(q1) == brauer_class(q2);
}

} // namespace c2q
