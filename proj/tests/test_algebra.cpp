#include "c2q/error.hpp"
#include "c2q/field.hpp"
#include "c2q/laurent.hpp"
#include "c2q/place.hpp"

#include <doctest.h>

#include <random>

using namespace c2q;

namespace {

// Schoolbook product in GF(2)[x] reduced by the modulus, bit by bit.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t mod, unsigned k)
{
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k; ++i) {
        if (b >> i & 1)
            r ^= a;
        a <<= 1;
        if (a >> k & 1)
            a ^= mod;
    }
    return r;
}

Poly P(std::initializer_list<GF2k::Elem> low_to_high, unsigned k = 1)
{
    return Poly(GF2k::get(k), std::vector<GF2k::Elem>(low_to_high));
}

// Irreducibility over GF(2) by trial division with every lower-degree poly.
bool irreducible_by_trial(const Poly& p)
{
    const GF2k& f = p.field();
    for (int d = 1; d <= p.degree() / 2; ++d)
        for (std::uint32_t bits = 1u << d; bits < (2u << d); ++bits) {
            std::vector<GF2k::Elem> c;
            for (int i = 0; i <= d; ++i)
                c.push_back(bits >> i & 1);
            if ((p % Poly(f, c)).is_zero())
                return false;
        }
    return true;
}

} // namespace

TEST_CASE("GF(2^k) arithmetic agrees with schoolbook reduction")
{
    for (unsigned k = 1; k <= 8; ++k) {
        const GF2k& f = GF2k::get(k);
        CHECK(gf2_irreducible(f.modulus()));
        for (std::uint32_t a = 0; a < f.size(); ++a)
            for (std::uint32_t b = 0; b < f.size(); ++b)
                REQUIRE(f.mul(a, b) == slow_mul(a, b, f.modulus(), k));
    }
}

TEST_CASE("GF(2^k) field axioms and Frobenius")
{
    for (unsigned k : {1u, 2u, 3u, 4u, 5u}) {
        const GF2k& f = GF2k::get(k);
        for (std::uint32_t a = 0; a < f.size(); ++a) {
            CHECK(f.pow(a, f.size()) == a);
            CHECK(f.sqr(f.sqrt(a)) == a);
            if (a) {
                CHECK(f.mul(a, f.inv(a)) == 1);
            }
            // trace is the sum of the Galois conjugates
            std::uint32_t t = 0, c = a;
            for (unsigned i = 0; i < k; ++i) {
                t ^= c;
                c = f.sqr(c);
            }
            CHECK(t == f.trace(a));
            const auto r = f.solve_artin_schreier(a);
            CHECK(r.has_value() == (f.trace(a) == 0));
            if (r) {
                CHECK(static_cast<std::uint32_t>(f.sqr(*r) ^ *r) == a);
            }
        }
        CHECK(f.trace(f.trace_one()) == 1);
    }
}

TEST_CASE("GF(2^k) spec examples")
{
    CHECK(GF2k::get(1).sqrt(1) == 1);
    CHECK(GF2k::get(1).trace(1) == 1);
    const GF2k& f4 = GF2k::get(2);
    CHECK(f4.modulus() == 0b111);
    CHECK(f4.mul(2, 2) == 3); // g * g = g + 1
    CHECK(f4.to_string(3) == "g+1");
    CHECK_THROWS_AS(f4.inv(0), Error);
}

TEST_CASE("canonical modulus is the smallest irreducible of its degree")
{
    for (unsigned k = 1; k <= 10; ++k) {
        const std::uint32_t m = canonical_modulus(k);
        CHECK((m >> k) == 1u);
        for (std::uint32_t p = 1u << k; p < m; ++p)
            CHECK_FALSE(gf2_irreducible(p));
    }
}

TEST_CASE("factorization examples")
{
    const auto fs = factor(P({0, 1, 1}));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly == P({0, 1}));
    CHECK(fs[1].poly == P({1, 1}));
    const auto irr = factor(P({1, 1, 1}));
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].multiplicity == 1);
    const auto sq = factor(P({0, 0, 1, 0, 1})); // t^4 + t^2
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].multiplicity == 2);
    CHECK(sq[1].multiplicity == 2);
}

TEST_CASE("factorization property: product and irreducibility")
{
    std::mt19937_64 rng(11);
    for (unsigned k : {1u, 2u, 3u}) {
        const GF2k& f = GF2k::get(k);
        for (int n = 0; n < 60; ++n) {
            const int deg = 1 + static_cast<int>(uniform_below(rng, 12));
            std::vector<GF2k::Elem> c(deg + 1);
            for (auto& x : c)
                x = static_cast<GF2k::Elem>(uniform_below(rng, f.size()));
            c.back() = 1;
            const Poly p(f, c);
            Poly prod = Poly::constant(f, 1);
            for (const Factor& fa : factor(p)) {
                CHECK(fa.poly.is_monic());
                for (int i = 0; i < fa.multiplicity; ++i)
                    prod *= fa.poly;
                if (k == 1) {
                    CHECK(irreducible_by_trial(fa.poly));
                }
            }
            CHECK(prod == p);
        }
    }
}

TEST_CASE("rational functions are reduced with monic denominators")
{
    const GF2k& f = GF2k::get(2);
    const Poly t = Poly::variable(f);
    const RatFunc r(t * t + t, Poly::constant(f, 2) * t); // (t^2+t)/(g t)
    CHECK(r.den().is_monic());
    CHECK(r.den().is_one());
    CHECK(r * r.inverse() == RatFunc::constant(f, 1));
    CHECK_THROWS_AS(RatFunc(t, Poly(f)), Error);

    std::mt19937_64 rng(5);
    const FieldCtx F = FieldCtx::rational(2);
    for (int i = 0; i < 100; ++i) {
        const Elem a = sample_element(rng, F, 3), b = sample_element(rng, F, 3), c = sample_nonzero(rng, F, 3);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b).square() == a.square() * b.square());
        CHECK(a / c * c == a);
        const RatFunc& x = c.rat();
        CHECK(gcd(x.num(), x.den()).is_one());
    }
}

TEST_CASE("seeded sampling is deterministic")
{
    const FieldCtx F = FieldCtx::rational(1);
    const FieldCtx G = FieldCtx::finite(1);
    for (std::uint64_t s = 0; s < 5; ++s) {
        CHECK(sample_element(s, F, 3) == sample_element(s, F, 3));
        const Elem e = sample_element(s, G, 0);
        CHECK((e.is_zero() || e.is_one()));
    }
    int differ = 0;
    for (std::uint64_t s = 0; s < 50; ++s)
        differ += !(sample_element(s, F, 3) == sample_element(s + 1, F, 3));
    CHECK(differ >= 45);
}

TEST_CASE("Laurent expansions")
{
    const GF2k& f = GF2k::get(1);
    const Poly t = Poly::variable(f);
    const Place at_t = Place::finite(t);
    const LaurentSeries a = laurent_expand(RatFunc(Poly::constant(f, 1), t), at_t, 3);
    CHECK(a.valuation == -1);
    REQUIRE(a.precision() == 3);
    CHECK(a.coeffs[0].is_one());
    CHECK(a.coeffs[1].is_zero());
    CHECK(a.coeffs[2].is_zero());

    const LaurentSeries b = laurent_expand(RatFunc(t), Place::infinity(f), 2);
    CHECK(b.valuation == -1);
    CHECK(b.coeffs[0].is_one());

    const LaurentSeries c = laurent_expand(RatFunc(Poly::constant(f, 1), t + Poly::constant(f, 1)), at_t, 3);
    CHECK(c.valuation == 0);
    for (const Poly& x : c.coeffs)
        CHECK(x.is_one());
}

TEST_CASE("valuations are additive")
{
    std::mt19937_64 rng(3);
    const FieldCtx F = FieldCtx::rational(1);
    const GF2k& f = GF2k::get(1);
    const std::vector<Place> places{Place::finite(P({0, 1})), Place::finite(P({1, 1, 1})), Place::infinity(f)};
    for (int i = 0; i < 100; ++i) {
        const RatFunc a = sample_nonzero(rng, F, 3).rat(), b = sample_nonzero(rng, F, 3).rat();
        for (const Place& v : places)
            CHECK(valuation(a * b, v) == valuation(a, v) + valuation(b, v));
    }
}
