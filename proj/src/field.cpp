#include "c2q/field.hpp"

#include "c2q/error.hpp"

#include <cctype>
#include <functional>

namespace c2q {

FieldCtx FieldCtx::finite(unsigned k)
{
    GF2k::get(k);
    return FieldCtx(Kind::Finite, k, {});
}

FieldCtx FieldCtx::rational(unsigned k, std::string var)
{
    GF2k::get(k);
    return FieldCtx(Kind::Rational, k, {std::move(var)});
}

FieldCtx FieldCtx::symbolic(unsigned k, std::vector<std::string> vars)
{
    GF2k::get(k);
    if (vars.size() < 2)
        throw Error(ErrorCode::InvalidArgument, "symbolic fields need at least two indeterminates");
    return FieldCtx(Kind::Symbolic, k, std::move(vars));
}

const std::string& FieldCtx::var() const
{
    if (vars_.empty())
        throw Error(ErrorCode::UnsupportedField, "finite field has no indeterminate");
    return vars_.front();
}

FieldCtx FieldCtx::parse(const std::string& raw)
{
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto fail = [&]() -> FieldCtx {
        throw Error(ErrorCode::ParseError, "unrecognized field spec '" + raw + "'");
    };
    std::size_t pos = 0;
    unsigned k = 1;
    if (s.rfind("gf(2^", 0) == 0) {
        pos = 5;
        std::size_t end = s.find(')', pos);
        if (end == std::string::npos || end == pos)
            return fail();
        const std::string digits = s.substr(pos, end - pos);
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return fail();
        k = static_cast<unsigned>(std::stoul(digits));
        pos = end + 1;
    } else if (s.rfind("gf2", 0) == 0) {
        pos = 3;
    } else {
        return fail();
    }
    if (pos == s.size())
        return finite(k);
    if (s[pos] != '(' || s.back() != ')')
        return fail();
    std::vector<std::string> vars;
    std::string cur;
    for (std::size_t i = pos + 1; i + 1 < s.size(); ++i) {
        if (s[i] == ',') {
            vars.push_back(cur);
            cur.clear();
        } else {
            cur += s[i];
        }
    }
    vars.push_back(cur);
    for (const auto& v : vars) {
        if (v.empty() || !std::isalpha(static_cast<unsigned char>(v[0])) || v == "g" || v == "h")
            return fail();
        for (char c : v)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                return fail();
    }
    if (vars.size() == 1)
        return rational(k, vars[0]);
    return symbolic(k, std::move(vars));
}

std::string FieldCtx::spec() const
{
    std::string base = k_ == 1 ? "gf2" : "gf(2^" + std::to_string(k_) + ")";
    if (vars_.empty())
        return base;
    std::string out = base + "(";
    for (std::size_t i = 0; i < vars_.size(); ++i)
        out += (i ? "," : "") + vars_[i];
    return out + ")";
}

Elem Elem::zero(const FieldCtx& f)
{
    return constant(f, 0);
}

Elem Elem::one(const FieldCtx& f)
{
    return constant(f, 1);
}

Elem Elem::constant(const FieldCtx& f, GF2k::Elem c)
{
    if (f.kind() == FieldCtx::Kind::Symbolic)
        return MRatFunc(MPoly::constant(f.base(), f.vars().size(), c));
    return RatFunc::constant(f.base(), c);
}

Elem Elem::variable(const FieldCtx& f, std::size_t i)
{
    switch (f.kind()) {
    case FieldCtx::Kind::Finite:
        throw Error(ErrorCode::UnsupportedField, "finite field has no indeterminate");
    case FieldCtx::Kind::Rational:
        if (i != 0)
            throw Error(ErrorCode::InvalidArgument, "variable index out of range");
        return RatFunc::variable(f.base());
    case FieldCtx::Kind::Symbolic:
        break;
    }
    if (i >= f.vars().size())
        throw Error(ErrorCode::InvalidArgument, "variable index out of range");
    return MRatFunc(MPoly::variable(f.base(), f.vars().size(), i));
}

const RatFunc& Elem::rat() const
{
    if (auto* r = std::get_if<RatFunc>(&v_))
        return *r;
    throw Error(ErrorCode::UnsupportedField, "operation requires GF(2^k) or GF(2^k)(t)");
}

const MRatFunc& Elem::mrat() const
{
    if (auto* m = std::get_if<MRatFunc>(&v_))
        return *m;
    throw Error(ErrorCode::UnsupportedField, "operation requires a symbolic field");
}

bool Elem::is_zero() const noexcept
{
    return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Elem::is_one() const noexcept
{
    return std::visit([](const auto& x) { return x.is_one(); }, v_);
}

namespace {

template <typename Op>
Elem binary(const std::variant<RatFunc, MRatFunc>& a, const std::variant<RatFunc, MRatFunc>& b, Op op)
{
    if (a.index() != b.index())
        throw Error(ErrorCode::FieldMismatch, "elements of different fields");
    if (a.index() == 0) {
        const auto& x = std::get<RatFunc>(a);
        const auto& y = std::get<RatFunc>(b);
        if (&x.field() != &y.field())
            throw Error(ErrorCode::FieldMismatch, "elements of different fields");
        return Elem(op(x, y));
    }
    const auto& x = std::get<MRatFunc>(a);
    const auto& y = std::get<MRatFunc>(b);
    if (&x.field() != &y.field() || x.nvars() != y.nvars())
        throw Error(ErrorCode::FieldMismatch, "elements of different fields");
    return Elem(op(x, y));
}

} // namespace

Elem Elem::operator+(const Elem& o) const
{
    return binary(v_, o.v_, [](const auto& x, const auto& y) { return x + y; });
}

Elem Elem::operator*(const Elem& o) const
{
    return binary(v_, o.v_, [](const auto& x, const auto& y) { return x * y; });
}

Elem Elem::operator/(const Elem& o) const
{
    return binary(v_, o.v_, [](const auto& x, const auto& y) { return x / y; });
}

Elem Elem::inverse() const
{
    return std::visit([](const auto& x) { return Elem(x.inverse()); }, v_);
}

Elem Elem::square() const
{
    return std::visit([](const auto& x) { return Elem(x.square()); }, v_);
}

Elem Elem::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    if (auto* r = std::get_if<RatFunc>(&v_))
        return r->pow(e);
    Elem result = Elem(MRatFunc(MPoly::constant(mrat().field(), mrat().nvars(), 1)));
    Elem b = *this;
    while (e) {
        if (e & 1)
            result *= b;
        b = b.square();
        e >>= 1;
    }
    return result;
}

std::optional<Elem> Elem::sqrt() const
{
    return std::visit(
        [](const auto& x) -> std::optional<Elem> {
            auto r = x.sqrt();
            if (!r)
                return std::nullopt;
            return Elem(*r);
        },
        v_);
}

std::string Elem::to_string(const FieldCtx& f) const
{
    if (auto* r = std::get_if<RatFunc>(&v_))
        return r->to_string(f.vars().empty() ? "t" : f.vars().front());
    return std::get<MRatFunc>(v_).to_string(f.vars());
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n)
{
    if (n <= 1)
        return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

namespace {

Poly random_poly(std::mt19937_64& rng, const GF2k& f, int max_degree)
{
    std::vector<GF2k::Elem> c(static_cast<std::size_t>(max_degree) + 1);
    for (auto& x : c)
        x = static_cast<GF2k::Elem>(uniform_below(rng, f.size()));
    return Poly(f, std::move(c));
}

// Uniform over monic polynomials of degree <= bound: pick the degree with
// weight q^d, then the lower coefficients uniformly.
Poly random_monic(std::mt19937_64& rng, const GF2k& f, int bound)
{
    std::uint64_t total = 0;
    std::vector<std::uint64_t> weights;
    std::uint64_t w = 1;
    for (int d = 0; d <= bound; ++d) {
        weights.push_back(w);
        total += w;
        w *= f.size();
    }
    std::uint64_t pick = uniform_below(rng, total);
    int degree = 0;
    while (pick >= weights[degree]) {
        pick -= weights[degree];
        ++degree;
    }
    std::vector<GF2k::Elem> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i)
        c[i] = static_cast<GF2k::Elem>(uniform_below(rng, f.size()));
    c[degree] = 1;
    return Poly(f, std::move(c));
}

MPoly random_mpoly(std::mt19937_64& rng, const GF2k& f, std::size_t nvars, int bound)
{
    MPoly p(f, nvars);
    Monomial m(nvars, 0);
    // all monomials of total degree <= bound, in a fixed order
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == nvars) {
            const auto c = static_cast<GF2k::Elem>(uniform_below(rng, f.size()));
            p = p + MPoly::constant(f, nvars, 1).mul_monomial(m, c);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m[i] = static_cast<unsigned>(e);
            rec(i + 1, left - e);
        }
        m[i] = 0;
    };
    rec(0, bound);
    return p;
}

} // namespace

Elem sample_element(std::mt19937_64& rng, const FieldCtx& field, int degree_bound)
{
    if (degree_bound < 0)
        throw Error(ErrorCode::InvalidArgument, "degree bound must be >= 0");
    const GF2k& f = field.base();
    switch (field.kind()) {
    case FieldCtx::Kind::Finite:
        return RatFunc::constant(f, static_cast<GF2k::Elem>(uniform_below(rng, f.size())));
    case FieldCtx::Kind::Rational:
        for (;;) {
            Poly num = random_poly(rng, f, degree_bound);
            Poly den = random_monic(rng, f, degree_bound);
            if (num.is_zero()) {
                if (den.is_one())
                    return RatFunc(f);
                continue;
            }
            if (gcd(num, den).is_one())
                return RatFunc(std::move(num), std::move(den));
        }
    case FieldCtx::Kind::Symbolic:
        break;
    }
    const std::size_t n = field.vars().size();
    MPoly num = random_mpoly(rng, f, n, degree_bound);
    MPoly den = random_mpoly(rng, f, n, degree_bound);
    while (den.is_zero())
        den = random_mpoly(rng, f, n, degree_bound);
    return MRatFunc(std::move(num), std::move(den));
}

Elem sample_element(std::uint64_t seed, const FieldCtx& field, int degree_bound)
{
    std::mt19937_64 rng(seed);
    return sample_element(rng, field, degree_bound);
}

Elem sample_nonzero(std::mt19937_64& rng, const FieldCtx& field, int degree_bound)
{
    for (;;) {
        Elem e = sample_element(rng, field, degree_bound);
        if (!e.is_zero())
            return e;
    }
}

} // namespace c2q
