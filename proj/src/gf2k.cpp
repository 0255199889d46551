#include "c2q/gf2k.hpp"

#include "c2q/error.hpp"

#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <vector>

namespace c2q {

namespace {

int degree_of(std::uint64_t p) noexcept
{
    return p == 0 ? -1 : 63 - std::countl_zero(p);
}

std::uint64_t clmul64_low(std::uint64_t a, std::uint64_t b) noexcept
{
    std::uint64_t r = 0;
    while (b) {
        if (b & 1)
            r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) noexcept
{
    const int dm = degree_of(m);
    for (int d = degree_of(a); d >= dm; d = degree_of(a))
        a ^= m << (d - dm);
    return a;
}

std::uint64_t gf2_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept
{
    // operands are reduced, degree < deg m <= 31, so the product fits
    return gf2_mod(clmul64_low(a, b), m);
}

std::uint64_t gf2_gcd(std::uint64_t a, std::uint64_t b) noexcept
{
    while (b) {
        a = gf2_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

} // namespace

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) noexcept
{
    std::uint64_t r = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1)
            r ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return r;
}

bool gf2_irreducible(std::uint64_t poly) noexcept
{
    const int n = degree_of(poly);
    if (n <= 0)
        return false;
    if (n == 1)
        return true;
    if (n > 31)
        return false; // outside the supported packing
    // Ben-Or: gcd(x^(2^i) - x, f) = 1 for i <= n/2
    std::uint64_t h = 2;
    for (int i = 1; i <= n / 2; ++i) {
        h = gf2_mulmod(h, h, poly);
        if (gf2_gcd(poly, h ^ 2) != 1)
            return false;
    }
    return true;
}

std::uint32_t canonical_modulus(unsigned k)
{
    if (k < 1 || k > 31)
        throw Error(ErrorCode::InvalidArgument, "extension degree out of range");
    for (std::uint64_t p = std::uint64_t{1} << k; p < (std::uint64_t{1} << (k + 1)); ++p)
        if (gf2_irreducible(p))
            return static_cast<std::uint32_t>(p);
    throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

GF2k::GF2k(unsigned k) : k_(k), modulus_(canonical_modulus(k))
{
    for (Elem a = 1; a < size(); ++a) {
        if (trace(a) == 1) {
            trace_one_ = a;
            break;
        }
    }
}

const GF2k& GF2k::get(unsigned k)
{
    if (k < 1 || k > max_degree)
        throw Error(ErrorCode::InvalidArgument,
                    "extension degree must lie in [1, 16], got " + std::to_string(k));
    static std::array<std::unique_ptr<GF2k>, max_degree + 1> fields;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    if (!fields[k])
        fields[k].reset(new GF2k(k));
    return *fields[k];
}

GF2k::Elem GF2k::mul(Elem a, Elem b) const noexcept
{
    std::uint64_t p = clmul(a, b);
    for (int d = 2 * static_cast<int>(k_) - 2; d >= static_cast<int>(k_); --d)
        if (p & (std::uint64_t{1} << d))
            p ^= std::uint64_t{modulus_} << (d - k_);
    return static_cast<Elem>(p);
}

GF2k::Elem GF2k::pow(Elem a, std::uint64_t e) const noexcept
{
    Elem r = 1;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

GF2k::Elem GF2k::inv(Elem a) const
{
    if (a == 0)
        throw Error(ErrorCode::DivisionByZero, "inverse of zero in GF(2^" + std::to_string(k_) + ")");
    // a^(2^k - 2)
    return pow(a, (std::uint64_t{1} << k_) - 2);
}

GF2k::Elem GF2k::sqrt(Elem a) const noexcept
{
    for (unsigned i = 1; i < k_; ++i)
        a = mul(a, a);
    return a;
}

unsigned GF2k::trace(Elem a) const noexcept
{
    Elem t = a;
    Elem x = a;
    for (unsigned i = 1; i < k_; ++i) {
        x = mul(x, x);
        t ^= x;
    }
    return t & 1u;
}

std::optional<GF2k::Elem> GF2k::solve_artin_schreier(Elem c) const
{
    if (trace(c) != 0)
        return std::nullopt;
    // x -> x^2 + x is GF(2)-linear; solve column by column with elimination
    std::vector<Elem> cols(k_);
    for (unsigned i = 0; i < k_; ++i) {
        const Elem e = Elem{1} << i;
        cols[i] = mul(e, e) ^ e;
    }
    // rows of an augmented system: for each bit position j, sum_i x_i cols[i]_j = c_j
    std::vector<std::uint64_t> rows(k_);
    for (unsigned j = 0; j < k_; ++j) {
        std::uint64_t row = 0;
        for (unsigned i = 0; i < k_; ++i)
            if ((cols[i] >> j) & 1u)
                row |= std::uint64_t{1} << i;
        if ((c >> j) & 1u)
            row |= std::uint64_t{1} << k_;
        rows[j] = row;
    }
    std::vector<int> pivot_row(k_, -1);
    unsigned r = 0;
    for (unsigned col = 0; col < k_ && r < k_; ++col) {
        unsigned sel = r;
        while (sel < k_ && !((rows[sel] >> col) & 1u))
            ++sel;
        if (sel == k_)
            continue;
        std::swap(rows[sel], rows[r]);
        for (unsigned j = 0; j < k_; ++j)
            if (j != r && ((rows[j] >> col) & 1u))
                rows[j] ^= rows[r];
        pivot_row[col] = static_cast<int>(r);
        ++r;
    }
    for (unsigned j = r; j < k_; ++j)
        if ((rows[j] >> k_) & 1u)
            return std::nullopt;
    Elem x = 0;
    for (unsigned col = 0; col < k_; ++col)
        if (pivot_row[col] >= 0 && ((rows[pivot_row[col]] >> k_) & 1u))
            x |= Elem{1} << col;
    return x;
}

std::string GF2k::to_string(Elem a) const
{
    if (a == 0)
        return "0";
    std::string out;
    for (int i = static_cast<int>(k_) - 1; i >= 0; --i) {
        if (!((a >> i) & 1u))
            continue;
        if (!out.empty())
            out += "+";
        if (i == 0)
            out += "1";
        else if (i == 1)
            out += "g";
        else
            out += "g^" + std::to_string(i);
    }
    return out;
}

} // namespace c2q
