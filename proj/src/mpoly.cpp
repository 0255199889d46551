#include "c2q/mpoly.hpp"

#include "c2q/error.hpp"

#include <algorithm>
#include <bit>

namespace c2q {

MPoly MPoly::constant(const GF2k& field, std::size_t nvars, Elem c)
{
    MPoly p(field, nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(const GF2k& field, std::size_t nvars, std::size_t index)
{
    MPoly p(field, nvars);
    Monomial m(nvars, 0);
    m.at(index) = 1;
    p.add_term(m, 1);
    return p;
}

void MPoly::add_term(const Monomial& m, Elem c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second ^= c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool MPoly::is_constant() const noexcept
{
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const auto& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
}

bool MPoly::is_one() const noexcept
{
    return is_constant() && !terms_.empty() && terms_.begin()->second == 1;
}

MPoly::Elem MPoly::constant_term() const noexcept
{
    auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? 0 : it->second;
}

unsigned MPoly::degree_in(std::size_t var) const noexcept
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m[var]);
    return d;
}

unsigned MPoly::total_degree() const noexcept
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        unsigned s = 0;
        for (unsigned e : m)
            s += e;
        d = std::max(d, s);
    }
    return d;
}

MPoly MPoly::operator+(const MPoly& o) const
{
    if (field_ != o.field_ || nvars_ != o.nvars_)
        throw Error(ErrorCode::FieldMismatch, "multivariate polynomials over different rings");
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const
{
    if (field_ != o.field_ || nvars_ != o.nvars_)
        throw Error(ErrorCode::FieldMismatch, "multivariate polynomials over different rings");
    MPoly r(*field_, nvars_);
    Monomial m(nvars_);
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i)
                m[i] = m1[i] + m2[i];
            r.add_term(m, field_->mul(c1, c2));
        }
    }
    return r;
}

MPoly MPoly::scale(Elem c) const
{
    MPoly r(*field_, nvars_);
    if (c == 0)
        return r;
    for (const auto& [m, x] : terms_)
        r.terms_.emplace(m, field_->mul(x, c));
    return r;
}

MPoly MPoly::mul_monomial(const Monomial& mono, Elem c) const
{
    MPoly r(*field_, nvars_);
    if (c == 0)
        return r;
    for (const auto& [m, x] : terms_) {
        Monomial mm = m;
        for (std::size_t i = 0; i < nvars_; ++i)
            mm[i] += mono[i];
        r.terms_.emplace(std::move(mm), field_->mul(x, c));
    }
    return r;
}

MPoly MPoly::square() const
{
    MPoly r(*field_, nvars_);
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        for (auto& e : mm)
            e *= 2;
        r.terms_.emplace(std::move(mm), field_->sqr(c));
    }
    return r;
}

MPoly MPoly::derivative(std::size_t var) const
{
    MPoly r(*field_, nvars_);
    for (const auto& [m, c] : terms_) {
        if (!(m[var] & 1u))
            continue;
        Monomial mm = m;
        mm[var] -= 1;
        r.add_term(mm, c);
    }
    return r;
}

MPoly MPoly::exact_div(const MPoly& d) const
{
    if (d.is_zero())
        throw Error(ErrorCode::DivisionByZero, "multivariate division by zero");
    MPoly q(*field_, nvars_);
    MPoly r = *this;
    const auto& [dm, dc] = d.lead();
    const Elem dinv = field_->inv(dc);
    Monomial m(nvars_);
    while (!r.is_zero()) {
        const auto& [rm, rc] = r.lead();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (rm[i] < dm[i])
                throw Error(ErrorCode::InvalidArgument, "inexact multivariate division");
            m[i] = rm[i] - dm[i];
        }
        const Elem c = field_->mul(rc, dinv);
        q.add_term(m, c);
        r = r + d.mul_monomial(m, c);
    }
    return q;
}

MPoly MPoly::normalized() const
{
    if (is_zero() || lead().second == 1)
        return *this;
    return scale(field_->inv(lead().second));
}

std::map<unsigned, MPoly> MPoly::coefficients_in(std::size_t var) const
{
    std::map<unsigned, MPoly> out;
    for (const auto& [m, c] : terms_) {
        Monomial mm = m;
        const unsigned e = mm[var];
        mm[var] = 0;
        auto it = out.try_emplace(e, *field_, nvars_).first;
        it->second.add_term(mm, c);
    }
    return out;
}

RatFunc MPoly::evaluate(const std::vector<RatFunc>& values) const
{
    if (values.size() != nvars_)
        throw Error(ErrorCode::InvalidArgument, "wrong number of substitution values");
    RatFunc acc(*field_);
    std::vector<std::vector<RatFunc>> powers(nvars_);
    for (const auto& [m, c] : terms_) {
        RatFunc term = RatFunc::constant(*field_, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0)
                continue;
            auto& pw = powers[i];
            if (pw.empty())
                pw.push_back(RatFunc::constant(*field_, 1));
            while (pw.size() <= m[i])
                pw.push_back(pw.back() * values[i]);
            term *= pw[m[i]];
        }
        acc += term;
    }
    return acc;
}

std::size_t MPoly::term_count() const noexcept
{
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) {
        const bool unit = std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
        n += unit ? static_cast<std::size_t>(std::popcount(c)) : 1;
    }
    return n;
}

std::string MPoly::to_string(const std::vector<std::string>& vars) const
{
    if (is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty())
            out += "+";
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += vars.at(i);
            if (m[i] > 1)
                mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            out += field_->to_string(c);
        else if (c == 1)
            out += mono;
        else if (std::popcount(c) == 1)
            out += field_->to_string(c) + "*" + mono;
        else
            out += "(" + field_->to_string(c) + ")*" + mono;
    }
    return out;
}

namespace {

int main_variable(const MPoly& a, const MPoly& b)
{
    for (std::size_t v = a.nvars(); v-- > 0;)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0)
            return static_cast<int>(v);
    return -1;
}

MPoly content_in(const MPoly& p, std::size_t var)
{
    MPoly g(p.field(), p.nvars());
    for (auto& [e, c] : p.coefficients_in(var)) {
        g = gcd(g, c);
        if (g.is_one())
            break;
    }
    return g;
}

MPoly primitive_in(const MPoly& p, std::size_t var)
{
    if (p.is_zero())
        return p;
    return p.exact_div(content_in(p, var));
}

MPoly leading_coeff_in(const MPoly& p, std::size_t var)
{
    auto coeffs = p.coefficients_in(var);
    return coeffs.rbegin()->second;
}

MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var)
{
    const unsigned db = b.degree_in(var);
    const MPoly lcb = leading_coeff_in(b, var);
    MPoly r = a;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        const unsigned dr = r.degree_in(var);
        const MPoly lcr = leading_coeff_in(r, var);
        Monomial shift(a.nvars(), 0);
        shift[var] = dr - db;
        r = lcb * r + lcr * b.mul_monomial(shift, 1);
    }
    return r;
}

} // namespace

MPoly gcd(const MPoly& a, const MPoly& b)
{
    if (a.is_zero())
        return b.normalized();
    if (b.is_zero())
        return a.normalized();
    if (a.is_constant() || b.is_constant())
        return MPoly::constant(a.field(), a.nvars(), 1);
    const int vi = main_variable(a, b);
    const auto v = static_cast<std::size_t>(vi);
    if (a.degree_in(v) == 0)
        return gcd(a, content_in(b, v));
    if (b.degree_in(v) == 0)
        return gcd(content_in(a, v), b);
    const MPoly ca = content_in(a, v);
    const MPoly cb = content_in(b, v);
    MPoly pa = a.exact_div(ca);
    MPoly pb = b.exact_div(cb);
    const MPoly c = gcd(ca, cb);
    if (pa.degree_in(v) < pb.degree_in(v))
        std::swap(pa, pb);
    while (!pb.is_zero()) {
        MPoly r = pseudo_remainder(pa, pb, v);
        pa = std::move(pb);
        pb = r.is_zero() ? r : primitive_in(r, v);
        if (!pb.is_zero() && pb.degree_in(v) == 0) {
            // coprime in the main variable
            pa = MPoly::constant(a.field(), a.nvars(), 1);
            break;
        }
    }
    return (c * primitive_in(pa, v)).normalized();
}

MRatFunc::MRatFunc(const GF2k& field, std::size_t nvars)
    : num_(field, nvars), den_(MPoly::constant(field, nvars, 1))
{
}

MRatFunc::MRatFunc(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.field(), num_.nvars(), 1)) {}

MRatFunc::MRatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero())
        throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = MPoly::constant(num_.field(), num_.nvars(), 1);
        return;
    }
    if (!den_.is_constant()) {
        MPoly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    const auto lc = den_.lead().second;
    if (lc != 1) {
        const auto inv = num_.field().inv(lc);
        num_ = num_.scale(inv);
        den_ = den_.scale(inv);
    }
}

MRatFunc MRatFunc::operator+(const MRatFunc& o) const
{
    if (den_ == o.den_)
        return MRatFunc(num_ + o.num_, den_);
    return MRatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

MRatFunc MRatFunc::operator*(const MRatFunc& o) const
{
    return MRatFunc(num_ * o.num_, den_ * o.den_);
}

MRatFunc MRatFunc::inverse() const
{
    if (is_zero())
        throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
    return MRatFunc(den_, num_);
}

MRatFunc MRatFunc::operator/(const MRatFunc& o) const
{
    return *this * o.inverse();
}

MRatFunc MRatFunc::square() const
{
    return MRatFunc(num_.square(), den_.square());
}

std::optional<MRatFunc> MRatFunc::sqrt() const
{
    auto root = [](const MPoly& p) -> std::optional<MPoly> {
        MPoly r(p.field(), p.nvars());
        for (const auto& [m, c] : p.terms()) {
            Monomial mm = m;
            for (auto& e : mm) {
                if (e & 1u)
                    return std::nullopt;
                e /= 2;
            }
            r = r + MPoly::constant(p.field(), p.nvars(), 1).mul_monomial(mm, p.field().sqrt(c));
        }
        return r;
    };
    auto n = root(num_);
    auto d = root(den_);
    if (!n || !d)
        return std::nullopt;
    return MRatFunc(std::move(*n), std::move(*d));
}

std::optional<RatFunc> MRatFunc::specialize(const std::vector<RatFunc>& values) const
{
    RatFunc d = den_.evaluate(values);
    if (d.is_zero())
        return std::nullopt;
    return num_.evaluate(values) / d;
}

std::string MRatFunc::to_string(const std::vector<std::string>& vars) const
{
    if (den_.is_one())
        return num_.to_string(vars);
    std::string n = num_.to_string(vars);
    if (num_.term_count() > 1)
        n = "(" + n + ")";
    std::string d = den_.to_string(vars);
    if (d.find_first_of("+*") != std::string::npos)
        d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace c2q
