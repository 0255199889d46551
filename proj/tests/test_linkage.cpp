#include "c2q/constructions.hpp"
#include "c2q/error.hpp"
#include "c2q/parse.hpp"

#include <doctest.h>

using namespace c2q;

namespace {

const FieldCtx F = FieldCtx::rational(1);

Elem E(const std::string& s)
{
    return parse_element(s, F);
}

Quaternion H(const std::string& s)
{
    return parse_quaternion(s, F);
}

// Independent certificate check: every rewritten algebra carries the common
// slot in the right position and has the ramification of its input.
bool certificate_ok(const LinkageCertificate& c)
{
    if (c.inputs.size() != c.rewritten.size())
        return false;
    for (std::size_t i = 0; i < c.inputs.size(); ++i) {
        const Quaternion& r = c.rewritten[i];
        const Elem& slot = c.mode == LinkMode::Separable ? r.alpha() : r.beta();
        if (!(slot == c.common))
            return false;
        if (ramification_set(c.inputs[i].alpha().rat(), c.inputs[i].beta().rat()) !=
            ramification_set(r.alpha().rat(), r.beta().rat()))
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("pair linkage examples")
{
    const auto same = pair_linkage(H("[1,t)"), H("[1,t)"), LinkMode::Separable, 2);
    REQUIRE(same.has_value());
    CHECK(same->verified);
    CHECK(certificate_ok(*same));

    const auto sep = pair_linkage(H("[1,t)"), H("[1,t+1)"), LinkMode::Separable, 2);
    REQUIRE(sep.has_value());
    CHECK(sep->common == E("1"));
    CHECK(certificate_ok(*sep));
}

TEST_CASE("random division pairs are inseparably linked")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 40; ++i) {
        const Quaternion q1 = sample_division_algebra(rng, F, 3), q2 = sample_division_algebra(rng, F, 3);
        const auto c = pair_linkage(q1, q2, LinkMode::Inseparable, 4);
        REQUIRE(c.has_value());
        CHECK(c->verified);
        CHECK(certificate_ok(*c));
    }
}

TEST_CASE("triple linkage")
{
    const auto c = triple_linkage(H("[1,t)"), H("[1,t+1)"), H("[1,t^2+t+1)"), 3);
    REQUIRE(c.has_value());
    CHECK(c->mode == LinkMode::Separable);
    CHECK(certificate_ok(*c));

    const TripleConstruction t = witteq_triple(F, E("1"), E("t"), E("t"));
    const auto p = triple_linkage(t.psi, t.phi, t.pi, 3);
    REQUIRE(p.has_value());
    CHECK(certificate_ok(*p));

    const auto split = triple_linkage(H("[t,t)"), H("[0,t)"), H("[1,t^2)"), 2);
    REQUIRE(split.has_value());
    CHECK(certificate_ok(*split));
}

TEST_CASE("tampered certificates are rejected")
{
    auto c = pair_linkage(H("[1,t)"), H("[1,t+1)"), LinkMode::Separable, 2);
    REQUIRE(c.has_value());
    c->rewritten[1] = H("[1,t^3+t+1)");
    CHECK_FALSE(verify_certificate(*c));
    c->rewritten[1] = H("[t,t+1)");
    CHECK_FALSE(verify_certificate(*c));
}

TEST_CASE("tight sets")
{
    const auto two = is_tight({H("[1,t)"), H("[1,t+1)")}, 3);
    REQUIRE(two.has_value());
    CHECK(two->verified);
    bool found = false;
    for (const GroupElement& g : two->elements)
        if (g.mask == 3) {
            REQUIRE(g.rep.has_value());
            CHECK(*g.rep == H("[1,t^2+t)"));
            found = true;
        }
    CHECK(found);

    // {Q, Q}: the sum is trivial
    const auto dup = is_tight({H("[1,t)"), H("[1,t)")}, 3);
    REQUIRE(dup.has_value());
    CHECK(dup->verified);
    std::size_t total = 0;
    for (const GroupElement& g : dup->elements)
        total += g.multiplicity;
    CHECK(total == 4);

    const TripleConstruction t = witteq_triple(F, E("1"), E("t"), E("t"));
    CHECK(t.tight.verified);
    CHECK(t.tight.elements.size() >= 1);
}

TEST_CASE("Sigma of a single form is its class")
{
    const Quaternion q = H("[1,t)");
    const auto t = is_tight({q}, 2);
    REQUIRE(t.has_value());
    const SigmaReport s = sigma_invariant(*t, norm_form(q).expand(), "Sigma ~ norm form");
    CHECK(s.verdict == Verdict::Exact);
    CHECK(s.sigma_form.dim() == 8);
    REQUIRE(s.witt.has_value());
    CHECK(s.witt->dim_anis == 4);
}

TEST_CASE("Sigma with dependent classes counts every subset")
{
    // alpha = beta = t: pi = [t^2+t, gamma) and xi = [t, t) both split, so the
    // classes of the triple are dependent; Sigma must still match the target
    const Elem a = E("t"), b = E("t");
    for (const char* g : {"t", "t+1", "t^2+t+1", "1/t"}) {
        const TripleConstruction t = witteq_triple(F, a, b, E(g));
        CHECK(t.sigma.verdict == Verdict::Exact);
        CHECK(witt_equivalent(t.sigma.sigma_form, PfisterQ(F, {E(g), b}, a).expand()));
    }
}

TEST_CASE("Sigma does not depend on the choice of representatives")
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 30; ++i) {
        std::vector<Quaternion> qs;
        for (int j = 0; j < 3; ++j)
            qs.emplace_back(F, sample_element(rng, F, 2), sample_nonzero(rng, F, 2));
        const auto t = is_tight(qs, 3);
        if (!t)
            continue;
        // rewrite every representative by an isomorphic algebra
        std::vector<std::optional<Quaternion>> reps(8);
        std::vector<std::string> prov(8, "rewritten");
        for (const GroupElement& g : t->elements)
            if (g.rep)
                reps[g.mask] = iso_shift(*g.rep);
        for (unsigned m = 1; m < 8; ++m)
            if (!reps[m]) {
                // masks sharing a class with an earlier one
                for (const GroupElement& g : t->elements) {
                    BrauerClass c = BrauerClass::trivial(F);
                    for (unsigned j = 0; j < 3; ++j)
                        if (m >> j & 1)
                            c += brauer_class(qs[j]);
                    if (g.rep && c == brauer_class(*g.rep))
                        reps[m] = iso_shift(*g.rep);
                }
                if (!reps[m])
                    reps[m] = Quaternion(F, E("0"), E("1"));
            }
        const TightSet other = tight_set_from(qs, reps, prov);
        CHECK(other.verified);
        CHECK(witt_equivalent(sigma_invariant(*t).sigma_form, sigma_invariant(other).sigma_form));
    }
}

TEST_CASE("quaternion algebras with prescribed ramification")
{
    std::mt19937_64 rng(47);
    for (int i = 0; i < 20; ++i) {
        const Quaternion q = sample_division_algebra(rng, F, 3);
        const PlaceSet ram = brauer_class(q).ramification();
        const auto r = quaternion_with_ramification(F, ram, 4);
        REQUIRE(r.has_value());
        CHECK(brauer_class(*r).ramification() == ram);
    }
}

TEST_CASE("probe")
{
    const ProbeReport empty = triple_linkage_probe(F, 1, 0, 2, 4);
    CHECK(empty.entries.empty());
    const ProbeReport p = triple_linkage_probe(F, 7, 20, 2, 4);
    CHECK(p.verification_failures == 0);
    CHECK(p.linked + p.unresolved == 20);
    for (const ProbeEntry& e : p.entries)
        if (e.cert) {
            CHECK(certificate_ok(*e.cert));
        }
}
