#include "c2q/error.hpp"
#include "c2q/parse.hpp"

#include <doctest.h>

using namespace c2q;

namespace {

const FieldCtx F = FieldCtx::rational(1);
const FieldCtx F4 = FieldCtx::rational(2);

std::pair<int, int> error_position(const std::string& text, bool form)
{
    try {
        if (form)
            (void)parse_form(text, F);
        else
            (void)parse_element(text, F);
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    return {0, 0};
}

} // namespace

TEST_CASE("elements")
{
    CHECK(parse_element("t^2+t", F) == parse_element("t*(t+1)", F));
    CHECK(parse_element("(t^2+1)/t", F) == parse_element("t + 1/t", F));
    CHECK(parse_element("1/(1/t)", F) == parse_element("t", F));
    CHECK(parse_element("g*t + g^2", F4) == parse_element("g*t + g + 1", F4));
    CHECK(parse_element("0", F).is_zero());
    CHECK(parse_element("t^0", F).is_one());
}

TEST_CASE("element errors")
{
    CHECK_THROWS_AS(parse_element("1/0", F), Error);
    CHECK_THROWS_AS(parse_element("g", F), ParseError);
    CHECK_THROWS_AS(parse_element("2", F), ParseError);
    CHECK_THROWS_AS(parse_element("t+", F), ParseError);
    try {
        (void)parse_element("t/(t+t)", F);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroDenominator);
    }
    CHECK(error_position("t + )", false) == std::pair{1, 5});
    CHECK(error_position("t +\n t ?", false) == std::pair{2, 4});
}

TEST_CASE("forms")
{
    const QuadForm h = parse_form("H", F);
    CHECK(h.dim() == 2);
    CHECK(witt_class(h).dim_anis == 0);
    CHECK(parse_form("0", F).dim() == 0);
    CHECK(parse_form("[1,t] + t*[1,1]", F).dim() == 4);
    CHECK(parse_form("<<t,1]]", F).dim() == 4);
    CHECK(parse_form("<<t>>*[1,t]", F).dim() == 4);
    CHECK(parse_form("<<t,t+1>>*(H + [1,1])", F).dim() == 16);
    CHECK(parse_form("(t+1)*[1,t]", F).dim() == 2);
    CHECK(is_isometric(parse_form("[t,1]", F), parse_form("[1,t]", F)));
}

TEST_CASE("pfister and quaternion literals")
{
    const PfisterQ p = parse_pfister("<<t,t+1,1]]", F);
    CHECK(p.fold() == 3);
    CHECK(p.qslot().is_one());
    const Quaternion q = parse_quaternion("[t^2+1, t)", F);
    CHECK(q.alpha() == parse_element("t^2+1", F));
    CHECK(q.beta() == parse_element("t", F));
    CHECK_THROWS_AS(parse_quaternion("[1,0)", F), Error);
    CHECK_THROWS_AS(parse_quaternion("[1,t]", F), ParseError);
    const auto xs = parse_element_list("1, t, t^2+1", F);
    REQUIRE(xs.size() == 3);
    CHECK(xs[2] == parse_element("t^2+1", F));
}

TEST_CASE("form errors carry positions")
{
    CHECK(error_position("[1,t", true) == std::pair{1, 5});
    CHECK(error_position("[1,t] + ", true).first == 1);
    CHECK_THROWS_AS(parse_form("<<t,1>", F), ParseError);
}

TEST_CASE("printed values parse back")
{
    std::mt19937_64 rng(73);
    for (const FieldCtx& f : {F, F4}) {
        for (int i = 0; i < 100; ++i) {
            const Elem a = sample_element(rng, f, 4);
            CHECK(parse_element(a.to_string(f), f) == a);
            const Quaternion q(f, a, sample_nonzero(rng, f, 3));
            CHECK(parse_quaternion(q.to_string(), f) == q);
            const PfisterQ p(f, {sample_nonzero(rng, f, 2), sample_nonzero(rng, f, 2)}, a);
            CHECK(parse_pfister(p.to_string(), f).expand().to_string() == p.expand().to_string());
            const QuadForm form = p.expand();
            CHECK(parse_form(form.to_string(), f).to_string() == form.to_string());
        }
    }
    const FieldCtx s = FieldCtx::symbolic(1, {"a", "b"});
    const Elem e = parse_element("(a^2+b)/(a*b+1)", s);
    CHECK(parse_element(e.to_string(s), s) == e);
}
