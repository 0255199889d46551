#include "c2q/error.hpp"
#include "c2q/parse.hpp"

#include <doctest.h>

using namespace c2q;

namespace {

const FieldCtx F = FieldCtx::rational(1);

Elem E(const std::string& s, const FieldCtx& f = F)
{
    return parse_element(s, f);
}

Quaternion H(const std::string& s, const FieldCtx& f = F)
{
    return parse_quaternion(s, f);
}

QuatElement random_element(std::mt19937_64& rng, const Quaternion& q)
{
    const FieldCtx& f = q.field();
    return QuatElement(q, sample_element(rng, f, 2), sample_element(rng, f, 2), sample_element(rng, f, 2),
                       sample_element(rng, f, 2));
}

} // namespace

TEST_CASE("defining relations")
{
    const Quaternion q = H("[t^2+1,t)");
    const QuatElement x = QuatElement::x(q), y = QuatElement::y(q), one = QuatElement::scalar(q, E("1"));
    CHECK(x * x == x + QuatElement::scalar(q, q.alpha()));
    CHECK(y * y == QuatElement::scalar(q, q.beta()));
    CHECK(y * x == QuatElement::xy(q) + y);
    CHECK(x * y == QuatElement::xy(q));
    // y x y^-1 = x + 1
    CHECK(y * x * y.inverse() == x + one);
    CHECK_THROWS_AS(Quaternion(F, E("1"), E("0")), Error);
}

TEST_CASE("multiplication is associative and the norm is multiplicative")
{
    std::mt19937_64 rng(1);
    for (int i = 0; i < 100; ++i) {
        const Quaternion q(F, sample_element(rng, F, 2), sample_nonzero(rng, F, 2));
        const QuatElement u = random_element(rng, q), v = random_element(rng, q), w = random_element(rng, q);
        CHECK((u * v) * w == u * (v * w));
        CHECK((u * v).nrd() == u.nrd() * v.nrd());
        CHECK(u * u.conj() == QuatElement::scalar(q, u.nrd()));
        if (!u.nrd().is_zero()) {
            CHECK(u * u.inverse() == QuatElement::scalar(q, E("1")));
        }
    }
    const FieldCtx s = FieldCtx::symbolic(1, {"a", "b"});
    const Quaternion qs(s, E("a", s), E("b", s));
    const QuatElement u(qs, E("a", s), E("1", s), E("b", s), E("a+b", s));
    const QuatElement v(qs, E("1", s), E("b", s), E("a+1", s), E("a*b", s));
    CHECK((u * v).nrd() == u.nrd() * v.nrd());
    CHECK((u * v) * u == u * (v * u));
}

TEST_CASE("norm form")
{
    const Quaternion q = H("[1,t)");
    CHECK(norm_form(q).to_string() == "<<t,1]]");
    CHECK(QuatElement::y(q).nrd() == q.beta());
    CHECK(QuatElement::x(q).nrd() == q.alpha());
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        const Quaternion r(F, sample_element(rng, F, 2), sample_nonzero(rng, F, 2));
        const QuatElement u = random_element(rng, r);
        const Vec c = norm_form_coordinates(u);
        CHECK(norm_form(r).expand().evaluate(c) == u.nrd());
        CHECK(element_from_norm_coordinates(r, c) == u);
    }
}

TEST_CASE("slot shift")
{
    CHECK(iso_shift(H("[1,t)")) == H("[t+1,t)"));
    const Place pt = Place::finite(E("t").rat().num());
    const PlaceSet expected{pt, Place::infinity(GF2k::get(1))};
    CHECK(brauer_class(H("[1,t)")).ramification() == expected);
    CHECK(brauer_class(H("[t+1,t)")).ramification() == expected);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const Quaternion q(F, sample_element(rng, F, 3), sample_nonzero(rng, F, 3));
        const Quaternion twice = iso_shift(iso_shift(q));
        CHECK(twice.alpha() == (q.alpha().square() + q.beta()).square() + q.beta());
        CHECK(is_isomorphic(q, twice));
    }
}

TEST_CASE("slot scaling and same-slot products")
{
    CHECK(iso_scale(H("[1,t)")) == H("[1,t)"));
    CHECK(iso_scale(H("[t,t)")) == H("[t,t^2)"));
    CHECK_THROWS_AS(iso_scale(H("[0,t)")), Error);
    CHECK(brauer_mul_same_alpha(H("[t,t)"), H("[t,t+1)")) == H("[t,t^2+t)"));
    CHECK_THROWS_AS(brauer_mul_same_alpha(H("[t,t)"), H("[1,t)")), Error);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const Quaternion q(F, sample_nonzero(rng, F, 3), sample_nonzero(rng, F, 3));
        CHECK(is_isomorphic(q, iso_scale(q)));
        CHECK_FALSE(is_division(brauer_mul_same_alpha(q, q)));
        const Quaternion p(F, q.alpha(), sample_nonzero(rng, F, 3));
        CHECK(brauer_class(q) + brauer_class(p) == brauer_class(brauer_mul_same_alpha(q, p)));
        CHECK(is_isomorphic(reduce_right_slot(brauer_mul_same_alpha(q, p)), brauer_mul_same_alpha(q, p)));
    }
}

TEST_CASE("right-slot square rewrite")
{
    const SlotSquareResult r = right_slot_square(H("[t,t)"), E("1"));
    CHECK(r.result == H("[t+1,t+1)"));
    CHECK(r.witness.holds());
    CHECK_FALSE(is_division(H("[t,t)")));
    CHECK_FALSE(is_division(r.result));
    CHECK_THROWS_AS(right_slot_square(H("[t,t^2)"), E("t")), Error);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const Quaternion q(F, sample_element(rng, F, 3), sample_nonzero(rng, F, 3));
        const Elem l = sample_element(rng, F, 2);
        if (l.square() == q.beta())
            continue;
        const SlotSquareResult s = right_slot_square(q, l);
        CHECK(s.witness.holds());
        CHECK(is_isomorphic(q, s.result));
    }
}

TEST_CASE("division decisions")
{
    CHECK(is_division(H("[1,t)")));
    CHECK_FALSE(is_division(H("[t,t)")));
    CHECK(norm_form(H("[t,t)")).expand().evaluate({E("1"), E("0"), E("0"), E("1")}).is_zero());
    const FieldCtx g4 = FieldCtx::finite(2);
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 1; b < 4; ++b)
            CHECK_FALSE(is_division(Quaternion(g4, Elem::constant(g4, a), Elem::constant(g4, b))));
    const FieldCtx s = FieldCtx::symbolic(1, {"a", "b"});
    CHECK_THROWS_AS(is_division(Quaternion(s, E("a", s), E("b", s))), Error);
}
