#include "c2q/constructions.hpp"
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

Quaternion H(const std::string& s)
{
    return parse_quaternion(s, F);
}

bool hyperbolic(const QuadForm& q)
{
    return witt_class(q).dim_anis == 0;
}

} // namespace

TEST_CASE("pair construction example")
{
    const PairConstruction p = leftoright_pair(F, E("1"), E("t"), E("t"));
    CHECK(p.psi == H("[t+1,t)"));
    CHECK(p.phi == H("[(t^2+1)/t,t+1)"));
    CHECK(p.phi_matches);
    CHECK(p.phi_rewrite.witness.holds());
    CHECK(p.linkage.cert.verified);
    CHECK(p.sigma.verdict == Verdict::Exact);
}

TEST_CASE("pair construction: Sigma against an independent orthogonal sum")
{
    std::mt19937_64 rng(53);
    for (int i = 0; i < 25; ++i) {
        const Elem a = sample_element(rng, F, 2), b = sample_nonzero(rng, F, 2), c = sample_nonzero(rng, F, 2);
        if (b == a.square())
            continue;
        const PairConstruction p = leftoright_pair(F, a, b, c);
        CHECK(p.phi_matches);
        CHECK(is_isomorphic(p.phi, Quaternion(F, a.square() + b, b)));
        // oracle: norm forms of psi, phi and their sum, orthogonally added
        const Quaternion sum = brauer_mul_same_alpha(p.psi, Quaternion(F, p.psi.alpha(), b));
        const QuadForm oracle = norm_form(p.psi).expand() + norm_form(p.phi).expand() + norm_form(sum).expand();
        CHECK(witt_equivalent(p.sigma.sigma_form, oracle));
        CHECK(witt_equivalent(oracle, PfisterQ(F, {c, b}, a).expand()));
    }
}

TEST_CASE("triple construction example")
{
    const TripleConstruction t = witteq_triple(F, E("1"), E("t"), E("t"));
    CHECK(t.psi == H("[(t^2+1)/t,t)"));
    CHECK(t.pi == H("[t+1,t)"));
    CHECK(t.xi == H("[(t^2+1)/t,t+1)"));
    CHECK(t.xi_matches);
    CHECK(t.links_verified);
    CHECK(t.links.size() == 4);
    CHECK(t.sigma.verdict == Verdict::Exact);
}

TEST_CASE("triple construction: classes add up")
{
    std::mt19937_64 rng(59);
    for (int i = 0; i < 25; ++i) {
        const Elem a = sample_element(rng, F, 2), b = sample_nonzero(rng, F, 2), c = sample_nonzero(rng, F, 2);
        if (b == a.square())
            continue;
        const TripleConstruction t = witteq_triple(F, a, b, c);
        CHECK(brauer_class(t.psi) + brauer_class(t.phi) == brauer_class(t.xi));
        CHECK(t.pi == Quaternion(F, a.square() + b, c));
        CHECK(t.links_verified);
        for (const NamedCertificate& n : t.links)
            CHECK(verify_certificate(n.cert));
    }
}

TEST_CASE("triple construction rejects beta = alpha^2")
{
    CHECK_THROWS_AS(witteq_triple(F, E("t"), E("t^2"), E("1")), Error);
    CHECK_THROWS_AS(witteq_triple(F, E("1"), E("0"), E("t")), Error);
}

TEST_CASE("pipeline fast paths")
{
    // alpha = 0: <<c, b, 0]] is hyperbolic
    const PipelineReport z = pfister3_pipeline(F, E("t"), E("t+1"), E("0"), 3);
    CHECK(z.fast_path);
    REQUIRE(z.witness.has_value());
    CHECK(z.target.expand().evaluate(*z.witness).is_zero());
    CHECK(z.target_hyperbolic == std::optional<bool>(true));

    // beta = alpha^2
    const PipelineReport s = pfister3_pipeline(F, E("t"), E("1"), E("1"), 3);
    CHECK(s.fast_path);
    REQUIRE(s.witness.has_value());
    CHECK(s.target.expand().evaluate(*s.witness).is_zero());
    CHECK(s.resolved);
}

TEST_CASE("pipeline general case agrees with the exact decision")
{
    const PipelineReport r = pfister3_pipeline(F, E("t"), E("t+1"), E("1"), 3);
    CHECK_FALSE(r.fast_path);
    CHECK(r.resolved);
    REQUIRE(r.triple.has_value());
    REQUIRE(r.linkage.has_value());
    CHECK(verify_certificate(*r.linkage));
    REQUIRE(r.target_hyperbolic.has_value());
    CHECK(*r.target_hyperbolic == hyperbolic(PfisterQ(F, {E("t"), E("t+1")}, E("1")).expand()));

    std::mt19937_64 rng(61);
    for (int i = 0; i < 10; ++i) {
        const Elem c = sample_nonzero(rng, F, 2), b = sample_nonzero(rng, F, 2), a = sample_element(rng, F, 2);
        const PipelineReport p = pfister3_pipeline(F, c, b, a, 3);
        if (p.target_hyperbolic) {
            CHECK(*p.target_hyperbolic == hyperbolic(PfisterQ(F, {c, b}, a).expand()));
        }
    }
}

TEST_CASE("three-slot construction")
{
    const FieldCtx s = FieldCtx::symbolic(1, {"a", "b", "c", "e"});
    const PfisterQ psi(s, {}, E("e", s));
    const ThreeSlotReport r = three_slot_construction(3, s, E("a", s), E("b", s), E("c", s), psi, 1, 40);
    CHECK(r.forms.size() == 3);
    CHECK(r.congruences.size() == 4);
    CHECK(r.evidence_only);
    for (const ShadowCheck& c : r.shadow)
        CHECK(c.passed == c.total);
    CHECK(r.specialized.passed == r.specialized.total);

    CHECK_THROWS_AS(three_slot_construction(2, s, E("a", s), E("b", s), E("c", s), psi, 1, 10), Error);
    CHECK_THROWS_AS(three_slot_construction(4, s, E("a", s), E("b", s), E("c", s), psi, 1, 10), Error);
    CHECK_THROWS_AS(three_slot_construction(3, s, E("0", s), E("b", s), E("c", s), psi, 1, 10), Error);
    CHECK_THROWS_AS(three_slot_construction(3, F, E("t"), E("t+1"), E("1"), psi, 1, 10), Error);

    try {
        three_slot_construction(2, s, E("a", s), E("b", s), E("c", s), psi, 1, 10);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FoldTooSmall);
    }
}

TEST_CASE("three-slot construction over an exact field")
{
    const PfisterQ psi(F, {}, E("1"));
    const ThreeSlotReport r = three_slot_construction(3, F, E("t"), E("t+1"), E("t^2+t+1"), psi, 2, 20);
    CHECK_FALSE(r.evidence_only);
    CHECK(r.sigma_verdict == Verdict::Exact);
    CHECK(witt_equivalent(r.sigma_form, r.target));
}

TEST_CASE("planted shared slots are always linked")
{
    std::mt19937_64 rng(67);
    for (int i = 0; i < 20; ++i) {
        const Elem common = sample_nonzero(rng, F, 2);
        std::vector<Quaternion> qs;
        for (int j = 0; j < 3; ++j)
            qs.emplace_back(F, sample_element(rng, F, 2), common);
        const auto c = find_linkage(qs, LinkMode::Inseparable, 3);
        REQUIRE(c.has_value());
        CHECK(verify_certificate(*c));
    }
}

TEST_CASE("division algebra sampling")
{
    std::mt19937_64 rng(71);
    for (int i = 0; i < 20; ++i)
        CHECK(is_division(sample_division_algebra(rng, F, 3)));
}
