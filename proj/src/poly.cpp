#include "c2q/poly.hpp"

#include "c2q/error.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace c2q {

Poly::Poly(const GF2k& field, std::vector<Elem> coeffs) : field_(&field), coeffs_(std::move(coeffs))
{
    normalize();
}

Poly Poly::constant(const GF2k& field, Elem c)
{
    return Poly(field, {c});
}

Poly Poly::monomial(const GF2k& field, Elem c, int degree)
{
    if (c == 0)
        return Poly(field);
    std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return Poly(field, std::move(v));
}

void Poly::normalize() noexcept
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& o) const
{
    if (field_ != o.field_)
        throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
    const std::vector<Elem>& longer = coeffs_.size() >= o.coeffs_.size() ? coeffs_ : o.coeffs_;
    const std::vector<Elem>& shorter = coeffs_.size() >= o.coeffs_.size() ? o.coeffs_ : coeffs_;
    std::vector<Elem> r = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i)
        r[i] ^= shorter[i];
    return Poly(*field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const
{
    if (field_ != o.field_)
        throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
    if (is_zero() || o.is_zero())
        return Poly(*field_);
    std::vector<Elem> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
    if (field_->degree() == 1) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i])
                for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                    r[i + j] ^= o.coeffs_[j];
    } else {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (!coeffs_[i])
                continue;
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                if (o.coeffs_[j])
                    r[i + j] ^= field_->mul(coeffs_[i], o.coeffs_[j]);
        }
    }
    return Poly(*field_, std::move(r));
}

Poly Poly::scale(Elem c) const
{
    if (c == 0)
        return Poly(*field_);
    std::vector<Elem> r = coeffs_;
    for (auto& x : r)
        x = field_->mul(x, c);
    return Poly(*field_, std::move(r));
}

Poly Poly::shift(int n) const
{
    if (is_zero() || n == 0)
        return *this;
    std::vector<Elem> r(static_cast<std::size_t>(n), 0);
    r.insert(r.end(), coeffs_.begin(), coeffs_.end());
    return Poly(*field_, std::move(r));
}

Poly Poly::monic() const
{
    if (is_zero() || lead() == 1)
        return *this;
    return scale(field_->inv(lead()));
}

Poly Poly::derivative() const
{
    std::vector<Elem> r;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        r.push_back((i & 1u) ? coeffs_[i] : 0);
    return Poly(*field_, std::move(r));
}

Poly Poly::square() const
{
    if (is_zero())
        return *this;
    std::vector<Elem> r(2 * coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        r[2 * i] = field_->sqr(coeffs_[i]);
    return Poly(*field_, std::move(r));
}

Poly::Elem Poly::eval(Elem x) const
{
    Elem r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = field_->mul(r, x) ^ *it;
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const
{
    if (field_ != d.field_)
        throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
    if (d.is_zero())
        throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (degree() < d.degree())
        return {Poly(*field_), *this};
    std::vector<Elem> rem = coeffs_;
    std::vector<Elem> quo(coeffs_.size() - d.coeffs_.size() + 1, 0);
    const Elem inv_lead = field_->inv(d.lead());
    const int dd = d.degree();
    for (int i = degree(); i >= dd; --i) {
        const Elem c = rem[i];
        if (c == 0)
            continue;
        const Elem q = field_->mul(c, inv_lead);
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j)
            rem[i - dd + j] ^= field_->mul(q, d.coeffs_[j]);
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {Poly(*field_, std::move(quo)), Poly(*field_, std::move(rem))};
}

bool Poly::is_square() const noexcept
{
    for (std::size_t i = 1; i < coeffs_.size(); i += 2)
        if (coeffs_[i])
            return false;
    return true;
}

Poly Poly::sqrt() const
{
    if (!is_square())
        throw Error(ErrorCode::InvalidArgument, "polynomial is not a square");
    std::vector<Elem> r;
    for (std::size_t i = 0; i < coeffs_.size(); i += 2)
        r.push_back(field_->sqrt(coeffs_[i]));
    return Poly(*field_, std::move(r));
}

Poly Poly::reversed() const
{
    std::vector<Elem> r(coeffs_.rbegin(), coeffs_.rend());
    return Poly(*field_, std::move(r));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept
{
    if (a.degree() != b.degree())
        return a.degree() <=> b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeffs_[i] != b.coeffs_[i])
            return a.coeffs_[i] <=> b.coeffs_[i];
    return std::strong_ordering::equal;
}

std::size_t Poly::term_count() const noexcept
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i])
            continue;
        n += i == 0 ? static_cast<std::size_t>(std::popcount(coeffs_[i])) : 1;
    }
    return n;
}

std::string Poly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Elem c = coeffs_[i];
        if (!c)
            continue;
        if (!out.empty())
            out += "+";
        if (i == 0) {
            out += field_->to_string(c);
            continue;
        }
        std::string mono = i == 1 ? var : var + "^" + std::to_string(i);
        if (c == 1)
            out += mono;
        else if (std::popcount(c) == 1)
            out += field_->to_string(c) + "*" + mono;
        else
            out += "(" + field_->to_string(c) + ")*" + mono;
    }
    return out;
}

Poly gcd(const Poly& a, const Poly& b)
{
    Poly x = a;
    Poly y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b)
{
    const GF2k& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, 1), s1(f);
    Poly t0(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 + q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 + q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {r0, s0, t0};
    const auto inv = f.inv(r0.lead());
    return {r0.scale(inv), s0.scale(inv), t0.scale(inv)};
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m)
{
    return (a * b) % m;
}

Poly invmod(const Poly& a, const Poly& m)
{
    XgcdResult r = xgcd(a % m, m);
    if (!r.g.is_one())
        throw Error(ErrorCode::DivisionByZero, "polynomial not invertible modulo " + m.to_string());
    return r.s % m;
}

namespace {

// f^(2^n) mod m by repeated squaring
Poly frobenius_pow(Poly f, unsigned n, const Poly& m)
{
    for (unsigned i = 0; i < n; ++i)
        f = f.square() % m;
    return f;
}

void squarefree_decompose(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out)
{
    if (f.degree() <= 0)
        return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decompose(f.sqrt(), mult * 2, out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0)
            out.emplace_back(z.monic(), i * mult);
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0)
        squarefree_decompose(c.monic().sqrt(), mult * 2, out);
}

void equal_degree_split(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out)
{
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const GF2k& f = g.field();
    const unsigned bits = f.degree() * static_cast<unsigned>(d);
    for (;;) {
        std::vector<GF2k::Elem> rc(static_cast<std::size_t>(g.degree()));
        for (auto& c : rc)
            c = static_cast<GF2k::Elem>(rng() & (f.size() - 1));
        Poly a(f, std::move(rc));
        if (a.degree() <= 0)
            continue;
        // absolute trace map a + a^2 + ... + a^(2^(kd-1)) modulo g
        Poly tr = a;
        Poly p = a;
        for (unsigned i = 1; i < bits; ++i) {
            p = p.square() % g;
            tr += p;
        }
        Poly h = gcd(g, tr);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_split(h, d, rng, out);
            equal_degree_split((g / h).monic(), d, rng, out);
            return;
        }
    }
}

void distinct_degree_split(Poly f, std::mt19937_64& rng, std::vector<Poly>& out)
{
    const GF2k& field = f.field();
    const Poly x = Poly::variable(field);
    Poly h = x;
    for (int i = 1; 2 * i <= f.degree(); ++i) {
        h = frobenius_pow(h, field.degree(), f);
        Poly g = gcd(f, h + x);
        if (g.degree() > 0) {
            equal_degree_split(g, i, rng, out);
            f = (f / g).monic();
            h = h % f;
        }
    }
    if (f.degree() > 0)
        out.push_back(f.monic());
}

} // namespace

bool is_irreducible(const Poly& f)
{
    if (f.degree() <= 0)
        return false;
    if (f.degree() == 1)
        return true;
    const Poly x = Poly::variable(f.field());
    Poly h = x;
    const Poly m = f.monic();
    for (int i = 1; 2 * i <= m.degree(); ++i) {
        h = frobenius_pow(h, f.field().degree(), m);
        if (gcd(m, h + x).degree() > 0)
            return false;
    }
    return true;
}

std::vector<Factor> factor(const Poly& f)
{
    if (f.is_zero())
        throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    std::vector<std::pair<Poly, int>> sqf;
    squarefree_decompose(f.monic(), 1, sqf);
    std::mt19937_64 rng(0x5eedc0ffeeULL + static_cast<unsigned>(f.degree()));
    std::vector<Factor> result;
    for (auto& [part, mult] : sqf) {
        std::vector<Poly> irr;
        distinct_degree_split(part, rng, irr);
        for (auto& p : irr) {
            auto it = std::find_if(result.begin(), result.end(),
                                   [&](const Factor& fa) { return fa.poly == p; });
            if (it != result.end())
                it->multiplicity += mult;
            else
                result.push_back({p, mult});
        }
    }
    std::sort(result.begin(), result.end(),
              [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
    return result;
}

std::vector<Poly> irreducible_factors(const Poly& f)
{
    std::vector<Poly> r;
    if (f.degree() <= 0)
        return r;
    for (auto& fa : factor(f))
        r.push_back(fa.poly);
    return r;
}

std::vector<Poly> monic_irreducibles(const GF2k& field, int degree)
{
    std::vector<Poly> out;
    if (degree < 1)
        return out;
    const std::uint64_t q = field.size();
    std::uint64_t total = 1;
    for (int i = 0; i < degree; ++i)
        total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<GF2k::Elem> c(static_cast<std::size_t>(degree) + 1);
        std::uint64_t v = idx;
        for (int i = 0; i < degree; ++i) {
            c[i] = static_cast<GF2k::Elem>(v % q);
            v /= q;
        }
        c[degree] = 1;
        Poly p(field, std::move(c));
        if (is_irreducible(p))
            out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace c2q
