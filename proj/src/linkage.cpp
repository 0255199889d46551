#include "c2q/linkage.hpp"

#include "c2q/artin_schreier.hpp"
#include "c2q/error.hpp"

#include <algorithm>
#include <map>

namespace c2q {

namespace {

// Incremental row reduction over GF(2) that remembers which input columns
// produced each reduced row.
class Gf2Span {
public:
    Gf2Span(std::size_t dim, std::size_t ncols) : dim_(dim), ncols_(ncols) {}

    void add(std::size_t col, std::vector<bool> v)
    {
        std::vector<bool> combo(ncols_, false);
        combo[col] = true;
        reduce(v, combo);
        const auto it = std::find(v.begin(), v.end(), true);
        if (it == v.end())
            return;
        const auto pivot = static_cast<std::size_t>(it - v.begin());
        rows_.push_back(Row{std::move(v), std::move(combo), pivot});
    }

    std::optional<std::vector<std::size_t>> solve(std::vector<bool> target) const
    {
        std::vector<bool> combo(ncols_, false);
        reduce(target, combo);
        if (std::find(target.begin(), target.end(), true) != target.end())
            return std::nullopt;
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < ncols_; ++i)
            if (combo[i])
                cols.push_back(i);
        return cols;
    }

private:
    struct Row {
        std::vector<bool> v;
        std::vector<bool> combo;
        std::size_t pivot;
    };

    void reduce(std::vector<bool>& v, std::vector<bool>& combo) const
    {
        for (const Row& r : rows_) {
            if (!v[r.pivot])
                continue;
            for (std::size_t i = 0; i < dim_; ++i)
                v[i] = v[i] != r.v[i];
            for (std::size_t i = 0; i < ncols_; ++i)
                combo[i] = combo[i] != r.combo[i];
        }
    }

    std::size_t dim_;
    std::size_t ncols_;
    std::vector<Row> rows_;
};

using PlaceIndex = std::map<Place, std::size_t>;

PlaceIndex index_places(const PlaceSet& places)
{
    PlaceIndex idx;
    for (const Place& p : places)
        idx.emplace(p, idx.size());
    return idx;
}

std::vector<bool> indicator(const PlaceIndex& idx, const PlaceSet& s)
{
    std::vector<bool> v(idx.size(), false);
    for (const Place& p : s)
        v[idx.at(p)] = true;
    return v;
}

void insert_factors(PlaceSet& out, const Poly& p)
{
    if (p.is_constant())
        return;
    for (Poly& f : irreducible_factors(p))
        out.insert(Place::finite(std::move(f)));
}

// All polynomials of degree exactly d (d = -1: just 0), in Poly order.
std::vector<Poly> polys_of_degree(const GF2k& f, int d, bool monic)
{
    const std::uint64_t q = std::uint64_t{1} << f.degree();
    std::vector<Poly> out;
    if (d < 0) {
        out.emplace_back(f);
        return out;
    }
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i)
        count *= q;
    for (GF2k::Elem lead = 1; lead < q; ++lead) {
        if (monic && lead != 1)
            break;
        for (std::uint64_t n = 0; n < count; ++n) {
            std::vector<GF2k::Elem> c(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t m = n;
            for (int i = 0; i < d; ++i, m /= q)
                c[i] = static_cast<GF2k::Elem>(m % q);
            c[d] = lead;
            out.emplace_back(f, std::move(c));
        }
    }
    return out;
}

// Reduced fractions of height exactly h, in canonical order.
std::vector<RatFunc> fractions_of_height(const GF2k& f, int h)
{
    std::vector<RatFunc> out;
    for (int dd = 0; dd <= h; ++dd)
        for (const Poly& den : polys_of_degree(f, dd, true))
            for (int nd = (dd == h ? -1 : h); nd <= h; ++nd)
                for (const Poly& num : polys_of_degree(f, nd, false)) {
                    if (num.is_zero() && dd > 0)
                        continue;
                    if (!gcd(num, den).is_one())
                        continue;
                    out.emplace_back(num, den);
                }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<PlaceSet> ramification_targets(const std::vector<Quaternion>& qs)
{
    std::vector<PlaceSet> out;
    for (const Quaternion& q : qs)
        out.push_back(brauer_class(q).ramification());
    return out;
}

void require_exact(const std::vector<Quaternion>& qs)
{
    if (qs.empty())
        throw Error(ErrorCode::InvalidArgument, "linkage needs at least one algebra");
    for (const Quaternion& q : qs) {
        if (!(q.field() == qs.front().field()))
            throw Error(ErrorCode::FieldMismatch, "algebras over different fields");
        if (!q.field().exact())
            throw Error(ErrorCode::UnsupportedField, "no exact linkage search over " + q.field().spec());
    }
}

// Left slots a_i with [a_i, beta) ramified exactly at targets[i], using
// partial fractions supported on the places of beta, the targets and
// infinity. beta must be a non-square.
std::optional<std::vector<RatFunc>> solve_left_slots(const RatFunc& beta, const std::vector<PlaceSet>& targets)
{
    const GF2k& f = beta.field();
    PlaceSet places{Place::infinity(f)};
    insert_factors(places, beta.num());
    insert_factors(places, beta.den());
    for (const PlaceSet& r : targets)
        places.insert(r.begin(), r.end());
    const PlaceIndex idx = index_places(places);

    std::vector<RatFunc> basis;
    for (unsigned i = 0; i < f.degree(); ++i) {
        const auto g = static_cast<GF2k::Elem>(1u << i);
        basis.push_back(RatFunc::constant(f, g));
        for (int j = 1; j <= 3; ++j)
            basis.emplace_back(Poly::monomial(f, g, j));
        for (const Place& v : places) {
            if (v.is_infinity())
                continue;
            Poly pm = v.poly();
            for (int m = 1; m <= 2; ++m, pm = pm * v.poly())
                for (int j = 0; j < v.poly().degree(); ++j)
                    basis.emplace_back(Poly::monomial(f, g, j), pm);
        }
    }

    Gf2Span span(idx.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        std::vector<bool> col(idx.size(), false);
        for (const auto& [v, row] : idx)
            col[row] = schmid_symbol(basis[j], beta, v) != 0;
        span.add(j, std::move(col));
    }

    std::vector<RatFunc> out;
    for (const PlaceSet& r : targets) {
        auto sol = span.solve(indicator(idx, r));
        if (!sol)
            return std::nullopt;
        RatFunc a(f);
        for (std::size_t j : *sol)
            a += basis[j];
        out.push_back(as_canonical(a));
    }
    return out;
}

std::optional<LinkageCertificate> separable_search(const std::vector<Quaternion>& qs, int bound, int alpha_height)
{
    const FieldCtx& field = qs.front().field();
    const GF2k& f = field.base();
    const std::vector<PlaceSet> targets = ramification_targets(qs);

    if (field.kind() == FieldCtx::Kind::Finite) {
        // every algebra is split; any nontrivial Artin-Schreier class works
        const Elem c0 = Elem::constant(field, f.trace_one());
        LinkageCertificate cert{LinkMode::Separable, c0, qs, {}, false};
        for (std::size_t i = 0; i < qs.size(); ++i)
            cert.rewritten.emplace_back(field, c0, Elem::one(field));
        cert.verified = verify_certificate(cert);
        return cert;
    }

    std::vector<Poly> irreducibles;
    for (int d = 1; d <= std::max(bound, 1); ++d)
        for (Poly& p : monic_irreducibles(f, d))
            irreducibles.push_back(std::move(p));

    std::vector<RatFunc> seen;
    for (int h = 0; h <= alpha_height; ++h) {
        for (const RatFunc& cand : fractions_of_height(f, h)) {
            const RatFunc alpha = as_canonical(cand);
            if (alpha.is_zero())
                continue;
            if (std::find(seen.begin(), seen.end(), alpha) != seen.end())
                continue;
            seen.push_back(alpha);

            // the extension must stay a field at every ramified place
            bool feasible = true;
            for (const PlaceSet& r : targets)
                for (const Place& v : r)
                    feasible = feasible && !artin_schreier_split_at(alpha, v);
            if (!feasible)
                continue;

            std::vector<Poly> basis = irreducibles;
            for (Poly& p : irreducible_factors(alpha.den()))
                if (std::find(basis.begin(), basis.end(), p) == basis.end())
                    basis.push_back(std::move(p));
            PlaceSet places{Place::infinity(f)};
            for (const Poly& p : basis)
                places.insert(Place::finite(p));
            for (const PlaceSet& r : targets)
                for (const Place& v : r)
                    feasible = feasible && places.count(v);
            if (!feasible)
                continue;

            const PlaceIndex idx = index_places(places);
            Gf2Span span(idx.size(), basis.size());
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const RatFunc b(basis[j]);
                std::vector<bool> col(idx.size(), false);
                for (const auto& [v, row] : idx)
                    col[row] = schmid_symbol(alpha, b, v) != 0;
                span.add(j, std::move(col));
            }

            LinkageCertificate cert{LinkMode::Separable, Elem(alpha), qs, {}, false};
            for (const PlaceSet& r : targets) {
                auto sol = span.solve(indicator(idx, r));
                if (!sol) {
                    feasible = false;
                    break;
                }
                Poly b = Poly::constant(f, 1);
                for (std::size_t j : *sol)
                    b = b * basis[j];
                cert.rewritten.emplace_back(field, Elem(alpha), Elem(RatFunc(b)));
            }
            if (!feasible)
                continue;
            cert.verified = verify_certificate(cert);
            if (!cert.verified)
                throw Error(ErrorCode::InvalidArgument, "internal: separable certificate failed verification");
            return cert;
        }
    }
    return std::nullopt;
}

std::optional<LinkageCertificate> inseparable_search(const std::vector<Quaternion>& qs, int bound)
{
    const FieldCtx& field = qs.front().field();
    if (field.kind() == FieldCtx::Kind::Finite)
        return std::nullopt; // every element of a finite field is a square
    const GF2k& f = field.base();
    const std::vector<PlaceSet> targets = ramification_targets(qs);
    for (int d = 1; d <= std::max(bound, 1); ++d) {
        for (const Poly& b : polys_of_degree(f, d, true)) {
            if (!gcd(b, b.derivative()).is_one())
                continue;
            const RatFunc beta(b);
            auto alphas = solve_left_slots(beta, targets);
            if (!alphas)
                continue;
            LinkageCertificate cert{LinkMode::Inseparable, Elem(beta), qs, {}, false};
            for (const RatFunc& a : *alphas)
                cert.rewritten.emplace_back(field, Elem(a), Elem(beta));
            cert.verified = verify_certificate(cert);
            if (!cert.verified)
                throw Error(ErrorCode::InvalidArgument, "internal: inseparable certificate failed verification");
            return cert;
        }
    }
    return std::nullopt;
}

bool same_alpha(const std::vector<Quaternion>& qs)
{
    return std::all_of(qs.begin(), qs.end(), [&](const Quaternion& q) { return q.alpha() == qs.front().alpha(); });
}

bool same_beta(const std::vector<Quaternion>& qs)
{
    return std::all_of(qs.begin(), qs.end(), [&](const Quaternion& q) { return q.beta() == qs.front().beta(); });
}

Quaternion product_same_alpha(const std::vector<Quaternion>& qs)
{
    Quaternion r = qs.front();
    for (std::size_t i = 1; i < qs.size(); ++i)
        r = brauer_mul_same_alpha(r, qs[i]);
    return r.field().exact() ? reduce_right_slot(r) : r;
}

Quaternion sum_same_beta(const std::vector<Quaternion>& qs)
{
    Elem a = Elem::zero(qs.front().field());
    for (const Quaternion& q : qs)
        a += q.alpha();
    if (qs.front().field().exact())
        a = as_canonical(qs.front().field(), a);
    return Quaternion(qs.front().field(), a, qs.front().beta());
}

std::vector<Quaternion> subset(const std::vector<Quaternion>& forms, unsigned mask)
{
    std::vector<Quaternion> out;
    for (std::size_t i = 0; i < forms.size(); ++i)
        if ((mask >> i) & 1u)
            out.push_back(forms[i]);
    return out;
}

struct RepChoice {
    std::optional<Quaternion> rep;
    std::string provenance;
    bool found;
};

RepChoice choose_representative(const std::vector<Quaternion>& qs, const std::optional<PlaceSet>& ram, int bound)
{
    if (qs.empty() || (ram && ram->empty()))
        return {std::nullopt, "identity", true};
    if (qs.size() == 1)
        return {qs.front(), "input", true};
    if (same_alpha(qs))
        return {product_same_alpha(qs), "closed form: common left slot", true};
    if (same_beta(qs))
        return {sum_same_beta(qs), "closed form: common right slot", true};
    if (!ram)
        return {std::nullopt, "undetermined", false};
    if (auto cert = find_linkage(qs, LinkMode::Separable, std::min(bound, 2)))
        return {product_same_alpha(cert->rewritten), "closed form: separable linkage", true};
    if (auto cert = find_linkage(qs, LinkMode::Inseparable, bound))
        return {sum_same_beta(cert->rewritten), "closed form: inseparable linkage", true};
    if (auto q = quaternion_with_ramification(qs.front().field(), *ram, bound))
        return {*q, "search", true};
    return {std::nullopt, "undetermined", false};
}

std::size_t check_size(const std::vector<Quaternion>& forms)
{
    if (forms.empty() || forms.size() > 8)
        throw Error(ErrorCode::InvalidArgument, "tight sets take 1 to 8 algebras");
    for (const Quaternion& q : forms)
        if (!(q.field() == forms.front().field()))
            throw Error(ErrorCode::FieldMismatch, "algebras over different fields");
    return forms.size();
}

} // namespace

std::string to_string(LinkMode m)
{
    return m == LinkMode::Separable ? "separable" : "inseparable";
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Exact:
        return "exact";
    case Verdict::Evidence:
        return "evidence";
    case Verdict::Failed:
        return "failed";
    case Verdict::None:
        break;
    }
    return "none";
}

bool verify_certificate(const LinkageCertificate& cert)
{
    if (cert.inputs.size() != cert.rewritten.size())
        return false;
    for (std::size_t i = 0; i < cert.inputs.size(); ++i) {
        const Quaternion& r = cert.rewritten[i];
        const bool slot_ok = cert.mode == LinkMode::Separable ? r.alpha() == cert.common : r.beta() == cert.common;
        if (!slot_ok || !is_isomorphic(r, cert.inputs[i]))
            return false;
    }
    return true;
}

std::optional<LinkageCertificate> find_linkage(const std::vector<Quaternion>& qs, LinkMode mode, int bound)
{
    require_exact(qs);
    if (bound < 0)
        throw Error(ErrorCode::InvalidArgument, "search bound must be >= 0");
    if (mode == LinkMode::Separable)
        return separable_search(qs, bound, bound);
    return inseparable_search(qs, bound);
}

std::optional<LinkageCertificate> pair_linkage(const Quaternion& q1, const Quaternion& q2, LinkMode mode, int bound)
{
    return find_linkage({q1, q2}, mode, bound);
}

std::optional<LinkageCertificate> triple_linkage(const Quaternion& q1, const Quaternion& q2, const Quaternion& q3,
                                                 int bound)
{
    const std::vector<Quaternion> qs{q1, q2, q3};
    require_exact(qs);
    if (bound < 0)
        throw Error(ErrorCode::InvalidArgument, "search bound must be >= 0");
    if (auto c = separable_search(qs, bound, std::min(bound, 2)))
        return c;
    return inseparable_search(qs, bound);
}

std::optional<Quaternion> quaternion_with_ramification(const FieldCtx& field, const PlaceSet& ram, int bound)
{
    if (!field.exact())
        throw Error(ErrorCode::UnsupportedField, "no ramification data over " + field.spec());
    if (ram.size() % 2)
        return std::nullopt;
    if (field.kind() == FieldCtx::Kind::Finite)
        return ram.empty() ? std::optional<Quaternion>(Quaternion(field, Elem::zero(field), Elem::one(field)))
                           : std::nullopt;
    const GF2k& f = field.base();
    for (int d = 1; d <= std::max(bound, 1); ++d)
        for (const Poly& b : polys_of_degree(f, d, true)) {
            if (!gcd(b, b.derivative()).is_one())
                continue;
            if (auto a = solve_left_slots(RatFunc(b), {ram}))
                return Quaternion(field, Elem(a->front()), Elem(RatFunc(b)));
        }
    return std::nullopt;
}

// ---------------------------------------------------------------- tight sets

std::optional<TightSet> is_tight(const std::vector<Quaternion>& forms, int bound)
{
    const std::size_t k = check_size(forms);
    const FieldCtx& field = forms.front().field();
    const bool exact = field.exact();
    std::vector<PlaceSet> rams;
    if (exact)
        rams = ramification_targets(forms);

    TightSet t{field, forms, {}, exact, true};
    std::map<PlaceSet, std::size_t> by_class;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::optional<PlaceSet> ram;
        if (exact) {
            PlaceSet r;
            for (std::size_t i = 0; i < k; ++i)
                if ((mask >> i) & 1u)
                    r = symmetric_difference(r, rams[i]);
            if (auto it = by_class.find(r); it != by_class.end()) {
                ++t.elements[it->second].multiplicity;
                continue;
            }
            by_class.emplace(r, t.elements.size());
            ram = std::move(r);
        }
        RepChoice c = choose_representative(subset(forms, mask), ram, bound);
        if (!c.found)
            return std::nullopt;
        if (exact && c.rep && brauer_class(*c.rep).ramification() != *ram)
            t.verified = false;
        t.elements.push_back(GroupElement{mask, 1, std::move(c.rep), std::move(c.provenance)});
    }
    return t;
}

TightSet tight_set_from(const std::vector<Quaternion>& forms, const std::vector<std::optional<Quaternion>>& reps,
                        const std::vector<std::string>& provenance)
{
    const std::size_t k = check_size(forms);
    if (reps.size() != (1u << k) || provenance.size() != reps.size())
        throw Error(ErrorCode::InvalidArgument, "one representative per subset required");
    const FieldCtx& field = forms.front().field();
    const bool exact = field.exact();
    std::vector<PlaceSet> rams;
    if (exact)
        rams = ramification_targets(forms);

    TightSet t{field, forms, {}, exact, true};
    std::map<PlaceSet, std::size_t> by_class;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::optional<Quaternion> rep = mask ? reps[mask] : std::nullopt;
        std::string prov = mask ? provenance[mask] : "identity";
        if (exact) {
            PlaceSet r;
            for (std::size_t i = 0; i < k; ++i)
                if ((mask >> i) & 1u)
                    r = symmetric_difference(r, rams[i]);
            const PlaceSet got = rep ? brauer_class(*rep).ramification() : PlaceSet{};
            if (got != r)
                t.verified = false;
            if (auto it = by_class.find(r); it != by_class.end()) {
                ++t.elements[it->second].multiplicity;
                continue;
            }
            by_class.emplace(r, t.elements.size());
            if (r.empty()) {
                rep.reset();
                prov = "identity";
            }
        }
        t.elements.push_back(GroupElement{mask, 1, std::move(rep), std::move(prov)});
    }
    return t;
}

SigmaReport sigma_invariant(const TightSet& t, const std::optional<QuadForm>& claim, std::string claim_text,
                            std::uint64_t seed)
{
    QuadForm sigma(t.field);
    for (const GroupElement& e : t.elements) {
        const QuadForm piece = e.rep ? norm_form(*e.rep).expand() : QuadForm::hyperbolic(t.field, 2);
        for (std::size_t i = 0; i < e.multiplicity; ++i)
            sigma = orth_sum(sigma, piece);
    }
    SigmaReport rep{sigma, std::nullopt, claim, std::move(claim_text), Verdict::None, ""};
    if (t.field.exact())
        rep.witt = witt_class(sigma);
    if (!claim)
        return rep;
    if (t.field.exact()) {
        const WittClass target = witt_class(*claim);
        const bool same = rep.witt->dim_anis == target.dim_anis && rep.witt->arf == target.arf &&
                          rep.witt->clifford == target.clifford && witt_equivalent(sigma, *claim);
        rep.verdict = same ? Verdict::Exact : Verdict::Failed;
        rep.detail = same ? "Witt classes agree; anisotropic dimension " + std::to_string(target.dim_anis)
                          : "Witt classes differ";
    } else {
        const Evidence ev = witt_equivalent_evidence(sigma, *claim, seed);
        rep.verdict = ev.value ? Verdict::Evidence : Verdict::Failed;
        rep.detail = ev.detail;
    }
    return rep;
}

} // namespace c2q
