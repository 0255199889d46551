#include "c2q/checks.hpp"
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

QuadForm Q(const std::string& s, const FieldCtx& f = F)
{
    return parse_form(s, f);
}

QuadForm random_form(std::mt19937_64& rng, const FieldCtx& f, std::size_t blocks, int deg)
{
    std::vector<Block> bs;
    for (std::size_t i = 0; i < blocks; ++i)
        bs.push_back(Block{sample_nonzero(rng, f, deg), sample_element(rng, f, deg)});
    return QuadForm(f, bs);
}

Vec random_vec(std::mt19937_64& rng, const FieldCtx& f, std::size_t n)
{
    Vec v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(sample_element(rng, f, 2));
    return v;
}

bool nonzero(const Vec& v)
{
    for (const Elem& e : v)
        if (!e.is_zero())
            return true;
    return false;
}

} // namespace

TEST_CASE("polar forms")
{
    const Gram h = polar_form(QuadForm::hyperbolic(F));
    CHECK(h[0][0].is_zero());
    CHECK(h[0][1].is_one());
    CHECK(h[1][0].is_one());
    CHECK(h[1][1].is_zero());
    const FieldCtx g2 = FieldCtx::finite(1);
    const Gram b = polar_form(Q("[1,1]", g2));
    CHECK(b[0][0].is_zero());
    CHECK(b[0][1].is_one());
    const Gram s = polar_form(Q("[1,t] + [t,1]"));
    CHECK(s[0][2].is_zero());
    CHECK(s[2][3].is_one());
    CHECK(s[1][3].is_zero());

    // the polar form is the bilinear form of the values
    std::mt19937_64 rng(1);
    const QuadForm q = random_form(rng, F, 3, 2);
    for (int i = 0; i < 20; ++i) {
        const Vec v = random_vec(rng, F, 6), w = random_vec(rng, F, 6);
        Vec vw;
        for (std::size_t j = 0; j < 6; ++j)
            vw.push_back(v[j] + w[j]);
        CHECK(q.polar(v, w) == q.evaluate(vw) + q.evaluate(v) + q.evaluate(w));
    }
}

TEST_CASE("orthogonal sums and scaling")
{
    const QuadForm hh = QuadForm::hyperbolic(F) + QuadForm::hyperbolic(F);
    CHECK(hh.dim() == 4);
    CHECK(hh.blocks()[1] == Block{E("0"), E("0")});
    CHECK(Q("[1,t] + [t,1]").dim() == 4);
    CHECK(Q("[0,t]") == QuadForm::hyperbolic(F));

    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        const QuadForm q1 = random_form(rng, F, 1, 2), q2 = random_form(rng, F, 2, 2);
        const Vec v = random_vec(rng, F, 2), w = random_vec(rng, F, 4);
        Vec vw = v;
        vw.insert(vw.end(), w.begin(), w.end());
        CHECK(orth_sum(q1, q2).evaluate(vw) == q1.evaluate(v) + q2.evaluate(w));

        // (c q)(x, y) = c q(x, c y) in the scaled coordinates
        const Elem c = sample_nonzero(rng, F, 2);
        Vec u = w;
        for (std::size_t j = 1; j < u.size(); j += 2)
            u[j] = u[j] * c;
        CHECK(q2.scaled(c).evaluate(u) == c * q2.evaluate(w));
    }
    CHECK_THROWS_AS(Q("[1,t]").scaled(E("0")), Error);
}

TEST_CASE("Pfister expansions")
{
    const Elem a = E("t"), b = E("t+1"), c = E("t^2+1");
    const BilForm two = PfisterB(F, {a, b}).expand();
    CHECK(two == BilForm(F, {E("1"), a, b, a * b}));
    CHECK(tensor_bb(BilForm(F, {E("1")}), two) == two);
    const BilForm three = PfisterB(F, {a, b, c}).expand();
    REQUIRE(three.dim() == 8);
    CHECK(three.diag()[7] == a * b * c);
    CHECK(three.diag()[5] == a * c);

    const Elem al = E("t^3+1"), be = E("t^2+t");
    CHECK(PfisterQ(F, {be}, al).expand() == Q("[1,t^3+1]") + QuadForm::binary(F, be, al / be));
    CHECK(tensor_bq(BilForm(F, {E("1")}), Q("[1,t]")) == Q("[1,t]"));
    CHECK(Q("<<t,t]]") == Q("[1,t] + [t,1]"));
    CHECK(Q("<<t,t,1]]").dim() == 8);
    CHECK(parse_pfister("<<t,t,1]]", F).fold() == 3);
}

TEST_CASE("Arf invariant")
{
    CHECK(arf(QuadForm::hyperbolic(F)).is_trivial());
    const FieldCtx g2 = FieldCtx::finite(1);
    CHECK_FALSE(arf(Q("[1,1]", g2)).is_trivial());
    // t^2 = t mod x^2 + x, and t is not of the form x^2 + x (degrees of
    // polynomial x^2 + x are even; non-polynomial x leave a pole)
    CHECK_FALSE(arf(Q("[1,t^2]")).is_trivial());
    CHECK(arf(Q("[1,t^2]")) == arf(Q("[1,t]")));
    CHECK(arf(Q("[1,t^2+t]")).is_trivial());
    CHECK(as_canonical(F, E("t^2")) == E("t"));
    CHECK(as_canonical(F, E("1")) == E("1"));
    CHECK(arf(Q("[1,t]")) == arf(Q("[t,1]")));

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const Elem f = sample_element(rng, F, 3);
        CHECK(as_canonical(F, f * f + f).is_zero());
        const QuadForm q = random_form(rng, F, 2, 2);
        CHECK(arf(q + q).is_trivial());
    }
}

TEST_CASE("Clifford invariant")
{
    CHECK(clifford(QuadForm::hyperbolic(F)).is_trivial());
    const BrauerClass c = clifford(Q("<<t,1]]"));
    CHECK(c == BrauerClass::symbol(F, E("1"), E("t")));
    std::mt19937_64 rng(4);
    for (int i = 0; i < 50; ++i) {
        const QuadForm q = random_form(rng, F, 3, 2);
        CHECK(clifford(q + q).is_trivial());
        // [a,b] has invariant [ab, a)
        const QuadForm b = random_form(rng, F, 1, 2);
        const Block& k = b.blocks()[0];
        CHECK(clifford(b) == BrauerClass::symbol(F, k.a * k.b, k.a));
    }
}

TEST_CASE("isotropy search")
{
    const auto h = isotropy_search(QuadForm::hyperbolic(F), 0);
    REQUIRE(h.has_value());
    CHECK(QuadForm::hyperbolic(F).evaluate(*h).is_zero());
    CHECK(nonzero(*h));

    const FieldCtx g2 = FieldCtx::finite(1);
    const QuadForm one = Q("[1,1]", g2);
    CHECK_FALSE(isotropy_search(one, 0).has_value());
    for (const auto& [x, y] : std::vector<std::pair<const char*, const char*>>{{"1", "0"}, {"0", "1"}, {"1", "1"}})
        CHECK(one.evaluate({E(x, g2), E(y, g2)}).is_one());

    const QuadForm tt = Q("<<t,t]]");
    CHECK(tt.evaluate({E("1"), E("0"), E("0"), E("1")}).is_zero());
    const auto w = isotropy_search(tt, 2);
    REQUIRE(w.has_value());
    CHECK(nonzero(*w));
    CHECK(tt.evaluate(*w).is_zero());
}

TEST_CASE("exact isotropy and the anisotropic dimension table")
{
    CHECK_FALSE(is_isotropic_exact(Q("<<t,1]]")));
    CHECK(is_isotropic_exact(Q("[1,0]")));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 25; ++i) {
        const QuadForm q = random_form(rng, F, 3, 2);
        CHECK(is_isotropic_exact(q));
        const auto w = isotropy_search(q, 3);
        REQUIRE(w.has_value());
        CHECK(q.evaluate(*w).is_zero());
    }
    // when the table says anisotropic, no search may find a vector
    for (int i = 0; i < 40; ++i) {
        const QuadForm q = random_form(rng, F, 1 + i % 2, 2);
        const bool iso = is_isotropic_exact(q);
        const auto w = isotropy_search(q, 2);
        if (w) {
            CHECK(iso);
            CHECK(q.evaluate(*w).is_zero());
        }
    }
}

TEST_CASE("2-fold Pfister forms over GF(16) are isotropic by enumeration")
{
    const FieldCtx f = FieldCtx::finite(4);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 4; ++i) {
        const QuadForm q = PfisterQ(f, {sample_nonzero(rng, f, 0)}, sample_element(rng, f, 0)).expand();
        bool found = false;
        for (std::uint32_t m = 1; m < (1u << 16) && !found; ++m) {
            Vec v;
            for (int j = 0; j < 4; ++j)
                v.push_back(Elem::constant(f, m >> (4 * j) & 15));
            found = q.evaluate(v).is_zero();
        }
        CHECK(found);
        CHECK(is_isotropic_exact(q));
    }
}

TEST_CASE("Witt decomposition")
{
    const WittDecomposition hh = witt_decompose(QuadForm::hyperbolic(F, 2));
    CHECK(hh.witt_index == 2);
    CHECK(hh.anisotropic.empty());
    const WittDecomposition tt = witt_decompose(Q("<<t,t]]"));
    CHECK(tt.witt_index == 2);
    CHECK(tt.anisotropic.empty());
    const FieldCtx g2 = FieldCtx::finite(1);
    const WittDecomposition one = witt_decompose(Q("[1,1]", g2));
    CHECK(one.witt_index == 0);
    CHECK(one.anisotropic == Q("[1,1]", g2));

    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        const QuadForm q = random_form(rng, F, 1 + i % 4, 2);
        const WittDecomposition d = witt_decompose(q);
        const WittClass w = witt_class(q);
        CHECK(d.exact);
        CHECK(2 * d.witt_index + d.anisotropic.dim() == q.dim());
        CHECK(static_cast<int>(d.anisotropic.dim()) == w.dim_anis);
        CHECK(witt_equivalent(q, d.anisotropic));
        if (!d.anisotropic.empty()) {
            CHECK_FALSE(is_isotropic_exact(d.anisotropic));
        }
    }
}

TEST_CASE("Witt equivalence and isometry")
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
        const QuadForm q = random_form(rng, F, 2, 2);
        CHECK(witt_equivalent(q, q + QuadForm::hyperbolic(F)));
        CHECK_FALSE(is_isometric(q, q + QuadForm::hyperbolic(F)));

        const Elem a = sample_nonzero(rng, F, 2), b1 = sample_element(rng, F, 2), b2 = sample_element(rng, F, 2);
        const QuadForm lhs = QuadForm::binary(F, a, b1) + QuadForm::binary(F, a, b2);
        const QuadForm rhs = QuadForm::hyperbolic(F) + QuadForm::binary(F, a, b1 + b2);
        CHECK(lhs.evaluate({E("1"), E("0"), E("1"), E("0")}).is_zero());
        CHECK(is_isometric(lhs, rhs));
    }
    // [1,t] and [t,1]: same Arf class, Clifford [t,1) vs [t,t)
    const bool same_cliff = clifford(Q("[1,t]")) == clifford(Q("[t,1]"));
    CHECK(witt_equivalent(Q("[1,t]"), Q("[t,1]")) == same_cliff);
}

TEST_CASE("symbolic forms: specialization evidence")
{
    const FieldCtx s = FieldCtx::symbolic(1, {"s", "t"});
    const QuadForm q = Q("<<s,t]]", s);
    const Evidence yes = witt_equivalent_evidence(q + q, QuadForm::hyperbolic(s), 9, 6);
    CHECK(yes.value);
    CHECK(yes.samples > 0);
    const Evidence no = witt_equivalent_evidence(q, QuadForm::hyperbolic(s), 9, 6);
    CHECK_FALSE(no.value);
    CHECK_THROWS_AS(witt_class(q), Error);
    const auto sp = specialize(q, {E("t").rat(), E("t+1").rat()});
    REQUIRE(sp.has_value());
    CHECK(*sp == Q("<<t,t+1]]"));
}

TEST_CASE("finite-field invariant table against point counts")
{
    const CheckResult r = check_finite_fields(CheckScale::Full, 0);
    INFO(r.detail);
    CHECK(r.passed);
}
