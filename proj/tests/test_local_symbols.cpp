#include "c2q/artin_schreier.hpp"
#include "c2q/brauer.hpp"
#include "c2q/error.hpp"
#include "c2q/field.hpp"
#include "c2q/parse.hpp"

#include <doctest.h>

using namespace c2q;

namespace {

const FieldCtx F = FieldCtx::rational(1);

RatFunc R(const std::string& s, const FieldCtx& f = F)
{
    return parse_element(s, f).rat();
}

Place pl(const std::string& s)
{
    return Place::finite(R(s).num());
}

std::vector<std::string> names(const PlaceSet& ps)
{
    std::vector<std::string> out;
    for (const Place& p : ps)
        out.push_back(p.to_string());
    return out;
}

// At a place with residue field GF(2), x^2 + x = 1 defines the unramified
// quadratic extension, whose norms are exactly the elements of even valuation.
unsigned unit_alpha_symbol(const RatFunc& b, const Place& v)
{
    return static_cast<unsigned>(valuation(b, v) & 1);
}

} // namespace

TEST_CASE("candidate places")
{
    CHECK(names(candidate_places(R("1"), R("t"))) == std::vector<std::string>{"(t)", "inf"});
    CHECK(names(candidate_places(R("1/t"), R("t"))) == std::vector<std::string>{"(t)", "inf"});
    CHECK(names(candidate_places(R("1"), R("(t^2+t+1)/(t+1)"))) ==
          std::vector<std::string>{"(t+1)", "(t^2+t+1)", "inf"});
}

TEST_CASE("symbol examples")
{
    CHECK(schmid_symbol(R("1"), R("t"), pl("t")) == 1);
    CHECK(schmid_symbol(R("t"), R("t"), pl("t")) == 0);
    CHECK(schmid_symbol(R("0"), R("t^3+t+1"), pl("t^3+t+1")) == 0);
    const SymbolTable tab = symbol_table(R("1"), R("t"));
    CHECK(names(tab.ramification) == std::vector<std::string>{"(t)", "inf"});
    CHECK(tab.reciprocity);
    CHECK(ramification_set(R("t"), R("t")).empty());
}

TEST_CASE("symbols with a constant non-split left slot count valuation parity")
{
    // x^2 + x = 1 gives the unramified quadratic extension at every place of
    // degree-1 residue field, so [1, b) is nontrivial exactly where v(b) is odd
    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        const RatFunc b = sample_nonzero(rng, F, 4).rat();
        for (const char* v : {"t", "t+1"})
            CHECK(schmid_symbol(R("1"), b, pl(v)) == unit_alpha_symbol(b, pl(v)));
    }
}

TEST_CASE("reciprocity over GF(2)(t) and GF(4)(t)")
{
    for (unsigned k : {1u, 2u}) {
        const FieldCtx f = FieldCtx::rational(k);
        std::mt19937_64 rng(100 + k);
        for (int i = 0; i < 150; ++i) {
            const RatFunc a = sample_element(rng, f, 3).rat();
            const RatFunc b = sample_nonzero(rng, f, 3).rat();
            unsigned sum = 0;
            for (const Place& v : candidate_places(a, b))
                sum ^= schmid_symbol(a, b, v);
            CHECK(sum == 0);
            CHECK(ramification_set(a, b).size() % 2 == 0);
        }
    }
}

TEST_CASE("symbols are invariant under Artin-Schreier shifts of the left slot")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 150; ++i) {
        const RatFunc a = sample_element(rng, F, 3).rat();
        const RatFunc b = sample_nonzero(rng, F, 3).rat();
        const RatFunc g = sample_element(rng, F, 2).rat();
        const RatFunc shifted = a + g * g + g;
        CHECK(ramification_set(a, b) == ramification_set(shifted, b));
        CHECK(ramification_set(g * g + g, b).empty());
    }
}

TEST_CASE("symbols are bilinear in the right slot")
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 150; ++i) {
        const RatFunc a = sample_element(rng, F, 3).rat();
        const RatFunc b1 = sample_nonzero(rng, F, 3).rat(), b2 = sample_nonzero(rng, F, 3).rat();
        CHECK(symmetric_difference(ramification_set(a, b1), ramification_set(a, b2)) ==
              ramification_set(a, b1 * b2));
        CHECK(ramification_set(a, b1 * b1).empty());
    }
}

TEST_CASE("norms from the Artin-Schreier extension have trivial symbols")
{
    // b = x^2 + x y + a y^2 is a global norm, so [a, b) splits everywhere
    std::mt19937_64 rng(31);
    for (int i = 0; i < 150; ++i) {
        const RatFunc a = sample_element(rng, F, 3).rat();
        const RatFunc x = sample_element(rng, F, 2).rat(), y = sample_element(rng, F, 2).rat();
        const RatFunc b = x * x + x * y + a * y * y;
        if (b.is_zero())
            continue;
        CHECK(ramification_set(a, b).empty());
    }
}

TEST_CASE("Artin-Schreier canonical representatives")
{
    CHECK(as_canonical(R("t^2")) == R("t"));
    CHECK(as_canonical(R("1")) == R("1"));
    CHECK_FALSE(solve_artin_schreier(R("1")).has_value());
    const auto r = solve_artin_schreier(R("t^2+t"));
    REQUIRE(r.has_value());
    CHECK(*r * *r + *r == R("t^2+t"));

    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
        const RatFunc a = sample_element(rng, F, 4).rat();
        const RatFunc c = as_canonical(a);
        const auto x = solve_artin_schreier(a + c);
        REQUIRE(x.has_value());
        CHECK(*x * *x + *x == a + c);
        const RatFunc g = sample_element(rng, F, 3).rat();
        CHECK(as_canonical(a + g * g + g) == c);
    }
}

TEST_CASE("Brauer classes")
{
    const BrauerClass q = BrauerClass::symbol(F, parse_element("1", F), parse_element("t", F));
    CHECK_FALSE(q.is_trivial());
    CHECK((q + q).is_trivial());
    CHECK(BrauerClass::trivial(F).is_trivial());
    const FieldCtx fin = FieldCtx::finite(2);
    CHECK(BrauerClass::symbol(fin, parse_element("g", fin), parse_element("g+1", fin)).is_trivial());
    const FieldCtx sym = FieldCtx::symbolic(1, {"s", "t"});
    const BrauerClass s = BrauerClass::symbol(sym, parse_element("s", sym), parse_element("t", sym));
    CHECK_FALSE(s.exact());
    CHECK_THROWS_AS((void)s.ramification(), Error);
}
