#include "c2q/quadform.hpp"

#include "c2q/artin_schreier.hpp"
#include "c2q/error.hpp"

#include <algorithm>
#include <random>

namespace c2q {

namespace {

void require_same_field(const FieldCtx& a, const FieldCtx& b)
{
    if (!(a == b))
        throw Error(ErrorCode::FieldMismatch, "forms over " + a.spec() + " and " + b.spec());
}

Vec add(const Vec& v, const Vec& w)
{
    Vec out = v;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += w[i];
    return out;
}

Vec scale(const Elem& c, const Vec& v)
{
    Vec out = v;
    for (Elem& x : out)
        x *= c;
    return out;
}

bool is_zero_vec(const Vec& v)
{
    for (const Elem& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Block normalize(Block blk)
{
    if (blk.a.is_zero())
        blk.b = blk.a;
    return blk;
}

std::string join(const std::vector<Elem>& xs, const FieldCtx& f)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i)
            s += ",";
        s += xs[i].to_string(f);
    }
    return s;
}

// Candidate coordinate values of "degree" <= d. Each list is a prefix of the
// next one, so deepening only has to visit tuples that use a new value.
std::vector<Elem> coordinate_candidates(const FieldCtx& field, int d)
{
    const GF2k& f = field.base();
    const std::uint64_t q = std::uint64_t{1} << field.k();
    std::vector<Elem> out;
    switch (field.kind()) {
    case FieldCtx::Kind::Finite: {
        const unsigned bits = std::min<unsigned>(static_cast<unsigned>(d) + 1, field.k());
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << bits); ++c)
            out.emplace_back(RatFunc::constant(f, static_cast<GF2k::Elem>(c)));
        break;
    }
    case FieldCtx::Kind::Rational: {
        std::uint64_t count = 1;
        for (int i = 0; i <= d; ++i)
            count *= q;
        for (std::uint64_t n = 0; n < count; ++n) {
            std::vector<GF2k::Elem> coeffs;
            for (std::uint64_t m = n; m; m /= q)
                coeffs.push_back(static_cast<GF2k::Elem>(m % q));
            out.emplace_back(RatFunc(Poly(f, std::move(coeffs))));
        }
        break;
    }
    case FieldCtx::Kind::Symbolic: {
        // 0/1 combinations of monomials of total degree <= d, capped
        constexpr std::size_t cap = 4096;
        const std::size_t nv = field.vars().size();
        std::vector<Elem> monomials{Elem::one(field)};
        std::vector<Elem> frontier{Elem::one(field)};
        for (int deg = 1; deg <= d; ++deg) {
            std::vector<Elem> next;
            for (const Elem& m : frontier)
                for (std::size_t v = 0; v < nv; ++v) {
                    Elem x = m * Elem::variable(field, v);
                    if (std::find(next.begin(), next.end(), x) == next.end())
                        next.push_back(x);
                }
            monomials.insert(monomials.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        for (std::uint64_t n = 0; out.size() < cap; ++n) {
            if (monomials.size() < 64 && n >> monomials.size())
                break;
            Elem x = Elem::zero(field);
            for (std::size_t i = 0; i < monomials.size() && i < 64; ++i)
                if ((n >> i) & 1)
                    x += monomials[i];
            out.push_back(std::move(x));
        }
        break;
    }
    }
    return out;
}

Elem block_value(const Block& blk, const Elem& x, const Elem& y)
{
    return blk.a * x.square() + x * y + blk.b * y.square();
}

// Symplectic reduction: pair up the given basis vectors of a subspace into
// hyperbolic-polar pairs (u, w) with B(u, w) = 1 and return the blocks
// [q(u), q(w)]. The first basis vector is always paired first.
std::vector<Block> symplectic_blocks(const QuadForm& q, std::vector<Vec> basis)
{
    std::vector<Block> blocks;
    while (!basis.empty()) {
        const Vec u = basis.front();
        std::size_t j = 1;
        while (j < basis.size() && q.polar(u, basis[j]).is_zero())
            ++j;
        if (j == basis.size())
            throw Error(ErrorCode::SingularForm, "internal: degenerate polar form during reduction");
        const Vec w = scale(q.polar(u, basis[j]).inverse(), basis[j]);
        blocks.push_back(normalize(Block{q.evaluate(u), q.evaluate(w)}));
        std::vector<Vec> rest;
        for (std::size_t i = 1; i < basis.size(); ++i) {
            if (i == j)
                continue;
            const Vec& x = basis[i];
            rest.push_back(add(add(x, scale(q.polar(x, w), u)), scale(q.polar(x, u), w)));
        }
        basis = std::move(rest);
    }
    return blocks;
}

} // namespace

// ---------------------------------------------------------------- BilForm

BilForm::BilForm(FieldCtx field, std::vector<Elem> diag) : field_(std::move(field)), diag_(std::move(diag))
{
    if (diag_.empty())
        throw Error(ErrorCode::InvalidArgument, "bilinear form needs at least one entry");
    for (const Elem& d : diag_)
        if (d.is_zero())
            throw Error(ErrorCode::ZeroScalar, "diagonal entries must be nonzero");
}

Elem BilForm::evaluate(const Vec& v, const Vec& w) const
{
    if (v.size() != dim() || w.size() != dim())
        throw Error(ErrorCode::InvalidArgument, "vector dimension mismatch");
    Elem s = Elem::zero(field_);
    for (std::size_t i = 0; i < dim(); ++i)
        s += diag_[i] * v[i] * w[i];
    return s;
}

std::string BilForm::to_string() const
{
    return "<" + join(diag_, field_) + ">";
}

// ---------------------------------------------------------------- QuadForm

QuadForm::QuadForm(FieldCtx field, std::vector<Block> blocks) : field_(std::move(field))
{
    blocks_.reserve(blocks.size());
    for (Block& b : blocks)
        blocks_.push_back(normalize(std::move(b)));
}

QuadForm QuadForm::binary(const FieldCtx& field, const Elem& a, const Elem& b)
{
    return QuadForm(field, {Block{a, b}});
}

QuadForm QuadForm::hyperbolic(const FieldCtx& field, std::size_t planes)
{
    return QuadForm(field, std::vector<Block>(planes, Block{Elem::zero(field), Elem::zero(field)}));
}

Elem QuadForm::evaluate(const Vec& v) const
{
    if (v.size() != dim())
        throw Error(ErrorCode::InvalidArgument, "vector dimension mismatch");
    Elem s = Elem::zero(field_);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        s += block_value(blocks_[i], v[2 * i], v[2 * i + 1]);
    return s;
}

Elem QuadForm::polar(const Vec& v, const Vec& w) const
{
    if (v.size() != dim() || w.size() != dim())
        throw Error(ErrorCode::InvalidArgument, "vector dimension mismatch");
    Elem s = Elem::zero(field_);
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        s += v[2 * i] * w[2 * i + 1] + v[2 * i + 1] * w[2 * i];
    return s;
}

QuadForm QuadForm::scaled(const Elem& c) const
{
    if (c.is_zero())
        throw Error(ErrorCode::ZeroScalar, "cannot scale a form by 0");
    const Elem ci = c.inverse();
    std::vector<Block> out;
    for (const Block& b : blocks_)
        out.push_back(Block{c * b.a, ci * b.b});
    return QuadForm(field_, std::move(out));
}

std::string QuadForm::to_string() const
{
    if (blocks_.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i)
            s += " + ";
        const Block& b = blocks_[i];
        if (b.a.is_zero())
            s += "H";
        else
            s += "[" + b.a.to_string(field_) + "," + b.b.to_string(field_) + "]";
    }
    return s;
}

// ---------------------------------------------------------------- Pfister forms

PfisterB::PfisterB(FieldCtx field, std::vector<Elem> slots) : field_(std::move(field)), slots_(std::move(slots))
{
    for (const Elem& s : slots_)
        if (s.is_zero())
            throw Error(ErrorCode::ZeroSlot, "bilinear Pfister slots must be nonzero");
}

BilForm PfisterB::expand() const
{
    std::vector<Elem> diag{Elem::one(field_)};
    for (const Elem& s : slots_) {
        const std::size_t n = diag.size();
        for (std::size_t i = 0; i < n; ++i)
            diag.push_back(diag[i] * s);
    }
    return BilForm(field_, std::move(diag));
}

std::string PfisterB::to_string() const
{
    return "<<" + join(slots_, field_) + ">>";
}

PfisterQ::PfisterQ(FieldCtx field, std::vector<Elem> bslots, Elem qslot)
    : field_(std::move(field)), bslots_(std::move(bslots)), qslot_(std::move(qslot))
{
    for (const Elem& s : bslots_)
        if (s.is_zero())
            throw Error(ErrorCode::ZeroSlot, "bilinear Pfister slots must be nonzero");
}

QuadForm PfisterQ::expand() const
{
    return tensor_bq(PfisterB(field_, bslots_).expand(), QuadForm::binary(field_, Elem::one(field_), qslot_));
}

std::string PfisterQ::to_string() const
{
    std::string s = "<<" + join(bslots_, field_);
    if (!bslots_.empty())
        s += ",";
    return s + qslot_.to_string(field_) + "]]";
}

// ---------------------------------------------------------------- constructions

Gram polar_form(const QuadForm& q)
{
    const std::size_t n = q.dim();
    Gram g(n, std::vector<Elem>(n, Elem::zero(q.field())));
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        g[i][i + 1] = Elem::one(q.field());
        g[i + 1][i] = Elem::one(q.field());
    }
    return g;
}

QuadForm orth_sum(const QuadForm& q1, const QuadForm& q2)
{
    require_same_field(q1.field(), q2.field());
    std::vector<Block> blocks = q1.blocks();
    blocks.insert(blocks.end(), q2.blocks().begin(), q2.blocks().end());
    return QuadForm(q1.field(), std::move(blocks));
}

BilForm tensor_bb(const BilForm& b1, const BilForm& b2)
{
    require_same_field(b1.field(), b2.field());
    std::vector<Elem> diag;
    for (const Elem& x : b1.diag())
        for (const Elem& y : b2.diag())
            diag.push_back(x * y);
    return BilForm(b1.field(), std::move(diag));
}

QuadForm tensor_bq(const BilForm& b, const QuadForm& q)
{
    require_same_field(b.field(), q.field());
    QuadForm out(q.field());
    for (const Elem& c : b.diag())
        out = orth_sum(out, q.scaled(c));
    return out;
}

QuadForm pfister_expand(const PfisterQ& p)
{
    return p.expand();
}

// ---------------------------------------------------------------- invariants

Elem as_canonical(const FieldCtx& field, const Elem& a)
{
    if (!field.exact())
        throw Error(ErrorCode::UnsupportedField, "no canonical Artin-Schreier form over " + field.spec());
    return c2q::as_canonical(a.rat());
}

std::optional<Elem> solve_artin_schreier(const FieldCtx& field, const Elem& c)
{
    if (!field.exact()) {
        if (c.is_zero())
            return Elem::zero(field);
        return std::nullopt;
    }
    if (auto x = c2q::solve_artin_schreier(c.rat()))
        return Elem(*x);
    return std::nullopt;
}

bool ArfClass::is_trivial() const
{
    if (rep.is_zero())
        return true;
    if (!canonical)
        throw Error(ErrorCode::UnsupportedField, "Arf class undecided over " + field.spec());
    return false;
}

bool operator==(const ArfClass& a, const ArfClass& b)
{
    if (!(a.field == b.field))
        return false;
    if (!a.canonical || !b.canonical) {
        if (a.rep == b.rep)
            return true;
        throw Error(ErrorCode::UnsupportedField, "Arf classes undecided over " + a.field.spec());
    }
    return a.rep == b.rep;
}

ArfClass arf(const QuadForm& q)
{
    Elem s = Elem::zero(q.field());
    for (const Block& b : q.blocks())
        s += b.a * b.b;
    if (q.field().exact())
        return ArfClass{q.field(), as_canonical(q.field(), s), true};
    return ArfClass{q.field(), s, false};
}

BrauerClass clifford(const QuadForm& q)
{
    BrauerClass c = BrauerClass::trivial(q.field());
    for (const Block& b : q.blocks())
        if (!b.a.is_zero())
            c += BrauerClass::symbol(q.field(), b.a * b.b, b.a);
    return c;
}

int anisotropic_dimension(const ArfClass& a, const BrauerClass& c)
{
    if (!a.field.exact() || !c.exact())
        throw Error(ErrorCode::UnsupportedField, "no exact Witt decision over " + a.field.spec());
    const bool split = c.is_trivial();
    if (a.field.kind() == FieldCtx::Kind::Finite) {
        if (!split)
            throw Error(ErrorCode::InvalidArgument, "internal: nontrivial Brauer class over a finite field");
        return a.is_trivial() ? 0 : 2;
    }
    if (a.is_trivial())
        return split ? 0 : 4;
    // A binary form with Arf invariant delta has Clifford invariant [delta, a),
    // and those are exactly the classes split by the Artin-Schreier extension
    // of delta: the ones ramified only where that extension is nontrivial.
    const RatFunc& delta = a.rep.rat();
    for (const Place& v : c.ramification())
        if (artin_schreier_split_at(delta, v))
            return 4;
    return 2;
}

WittClass witt_class(const QuadForm& q)
{
    ArfClass a = arf(q);
    BrauerClass c = clifford(q);
    const int d = anisotropic_dimension(a, c);
    if (static_cast<std::size_t>(d) > q.dim())
        throw Error(ErrorCode::InvalidArgument,
                    "internal: invariants of " + q.to_string() + " force anisotropic dimension " + std::to_string(d));
    return WittClass{d, std::move(a), std::move(c), q};
}

bool is_isotropic_exact(const QuadForm& q)
{
    return q.dim() > static_cast<std::size_t>(witt_class(q).dim_anis);
}

// ---------------------------------------------------------------- search

std::optional<Vec> isotropy_search(const QuadForm& q, int bound)
{
    if (bound < 0)
        throw Error(ErrorCode::InvalidArgument, "search bound must be >= 0");
    const FieldCtx& field = q.field();
    const std::size_t n = q.blocks().size();
    if (n == 0)
        return std::nullopt;

    // a single block already isotropic
    for (std::size_t i = 0; i < n; ++i) {
        const Block& b = q.blocks()[i];
        Vec v(q.dim(), Elem::zero(field));
        if (b.a.is_zero()) {
            v[2 * i] = Elem::one(field);
            return v;
        }
        if (b.b.is_zero()) {
            v[2 * i + 1] = Elem::one(field);
            return v;
        }
        if (auto x = solve_artin_schreier(field, b.a * b.b)) {
            v[2 * i] = *x / b.a;
            v[2 * i + 1] = Elem::one(field);
            return v;
        }
    }

    const Block& last = q.blocks().back();
    const std::size_t solved = 2 * (n - 1);
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < q.dim(); ++i)
        if (i != solved)
            free.push_back(i);

    std::size_t prev = 0;
    for (int d = 0; d <= bound; ++d) {
        const std::vector<Elem> cand = coordinate_candidates(field, d);
        const std::size_t count = cand.size();
        if (count == prev)
            continue;
        std::vector<Elem> squares;
        squares.reserve(count);
        for (const Elem& c : cand)
            squares.push_back(c.square());

        std::vector<std::size_t> idx(free.size(), 0);
        for (;;) {
            bool uses_new = false;
            for (std::size_t i : idx)
                uses_new = uses_new || i >= prev;
            if (uses_new) {
                Vec v(q.dim(), Elem::zero(field));
                for (std::size_t j = 0; j < free.size(); ++j)
                    v[free[j]] = cand[idx[j]];
                // C = value of everything except the a x^2 + x y part of the last block
                Elem c = last.b * squares[idx.back()];
                for (std::size_t i = 0; i + 1 < n; ++i) {
                    const std::size_t ix = idx[2 * i];
                    const std::size_t iy = idx[2 * i + 1];
                    const Block& b = q.blocks()[i];
                    c += b.a * squares[ix] + cand[ix] * cand[iy] + b.b * squares[iy];
                }
                const Elem& y = v[solved + 1];
                std::optional<Elem> x;
                if (y.is_zero()) {
                    x = (c / last.a).sqrt();
                } else if (auto r = solve_artin_schreier(field, last.a * c / y.square())) {
                    x = y * *r / last.a;
                }
                if (x) {
                    v[solved] = *x;
                    if (!is_zero_vec(v))
                        return v;
                }
            }
            std::size_t pos = idx.size();
            while (pos > 0 && ++idx[pos - 1] == count)
                idx[--pos] = 0;
            if (pos == 0)
                break;
        }
        prev = count;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- Witt decomposition

WittDecomposition witt_decompose(const QuadForm& q, int bound)
{
    const FieldCtx& field = q.field();
    const bool exact = field.exact();
    std::optional<WittClass> wc;
    if (exact)
        wc = witt_class(q);
    const std::size_t target = exact ? static_cast<std::size_t>(wc->dim_anis) : 0;

    std::size_t index = 0;
    QuadForm cur = q;
    for (;;) {
        std::vector<Block> rest;
        for (const Block& b : cur.blocks()) {
            if (b.a.is_zero())
                ++index;
            else
                rest.push_back(b);
        }
        cur = QuadForm(field, std::move(rest));
        if (cur.dim() <= target)
            break;

        auto v = isotropy_search(cur, bound);
        if (!v) {
            if (exact)
                throw Error(ErrorCode::SearchBoundExceeded,
                            "no isotropic vector of degree <= " + std::to_string(bound) + " for " + cur.to_string());
            break;
        }
        std::size_t k = 0;
        while ((*v)[k].is_zero())
            ++k;
        std::vector<Vec> basis{*v};
        for (std::size_t i = 0; i < cur.dim(); ++i) {
            if (i == k)
                continue;
            Vec e(cur.dim(), Elem::zero(field));
            e[i] = Elem::one(field);
            basis.push_back(std::move(e));
        }
        cur = QuadForm(field, symplectic_blocks(cur, std::move(basis)));
    }

    if (exact) {
        const WittClass after = witt_class(cur);
        if (cur.dim() != target || !(after.arf == wc->arf) || !(after.clifford == wc->clifford))
            throw Error(ErrorCode::InvalidArgument, "internal: Witt decomposition changed the invariants");
    }
    return WittDecomposition{index, std::move(cur), exact, bound};
}

bool witt_equivalent(const QuadForm& q1, const QuadForm& q2)
{
    require_same_field(q1.field(), q2.field());
    if (!q1.field().exact())
        throw Error(ErrorCode::UnsupportedField, "no exact Witt decision over " + q1.field().spec());
    return witt_class(orth_sum(q1, q2)).dim_anis == 0;
}

bool is_isometric(const QuadForm& q1, const QuadForm& q2)
{
    return q1.dim() == q2.dim() && witt_equivalent(q1, q2);
}

std::optional<QuadForm> specialize(const QuadForm& q, const std::vector<RatFunc>& values)
{
    if (q.field().kind() != FieldCtx::Kind::Symbolic)
        throw Error(ErrorCode::UnsupportedField, "specialization needs a symbolic field");
    if (values.size() != q.field().vars().size())
        throw Error(ErrorCode::InvalidArgument, "one value per variable required");
    const FieldCtx target = FieldCtx::rational(q.field().k());
    std::vector<Block> blocks;
    for (const Block& b : q.blocks()) {
        auto a = b.a.mrat().specialize(values);
        auto c = b.b.mrat().specialize(values);
        if (!a || !c)
            return std::nullopt;
        blocks.push_back(Block{*a, *c});
    }
    return QuadForm(target, std::move(blocks));
}

Evidence witt_equivalent_evidence(const QuadForm& q1, const QuadForm& q2, std::uint64_t seed, int samples)
{
    require_same_field(q1.field(), q2.field());
    if (q1.field().exact()) {
        const bool v = witt_equivalent(q1, q2);
        return Evidence{v, 0, 0, "exact decision"};
    }
    const FieldCtx target = FieldCtx::rational(q1.field().k());
    std::mt19937_64 rng(seed);
    Evidence ev{true, 0, 0, ""};
    int attempts = 0;
    while (ev.samples < samples && attempts < 4 * samples) {
        ++attempts;
        std::vector<RatFunc> values;
        for (std::size_t i = 0; i < q1.field().vars().size(); ++i)
            values.push_back(sample_nonzero(rng, target, 2).rat());
        auto s1 = specialize(q1, values);
        auto s2 = specialize(q2, values);
        if (!s1 || !s2) {
            ++ev.skipped;
            continue;
        }
        ++ev.samples;
        if (!witt_equivalent(*s1, *s2)) {
            ev.value = false;
            std::string at;
            for (std::size_t i = 0; i < values.size(); ++i)
                at += (i ? ", " : "") + q1.field().vars()[i] + " = " + values[i].to_string();
            ev.detail = "not Witt equivalent after substituting " + at;
            return ev;
        }
    }
    ev.detail = "Witt equivalent after " + std::to_string(ev.samples) + " random substitutions";
    return ev;
}

} // namespace c2q
