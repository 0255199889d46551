#pragma once

#include "c2q/brauer.hpp"
#include "c2q/field.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace c2q {

using Vec = std::vector<Elem>;
using Gram = std::vector<std::vector<Elem>>;

/// Diagonal bilinear form <a_1, ..., a_n> with nonzero entries.
class BilForm {
public:
    BilForm(FieldCtx field, std::vector<Elem> diag);

    const FieldCtx& field() const noexcept { return field_; }
    const std::vector<Elem>& diag() const noexcept { return diag_; }
    std::size_t dim() const noexcept { return diag_.size(); }

    Elem evaluate(const Vec& v, const Vec& w) const;
    std::string to_string() const;

    friend bool operator==(const BilForm& a, const BilForm& b) noexcept
    {
        return a.field_ == b.field_ && a.diag_ == b.diag_;
    }

private:
    FieldCtx field_;
    std::vector<Elem> diag_;
};

/// Binary block a x^2 + xy + b y^2.
struct Block {
    Elem a;
    Elem b;
    friend bool operator==(const Block&, const Block&) = default;
};

/// Nonsingular quadratic form, an orthogonal sum of binary blocks. Blocks
/// [0, b] are isotropic and are stored as the hyperbolic plane [0, 0].
/// Coordinates are ordered (x_1, y_1, x_2, y_2, ...).
class QuadForm {
public:
    explicit QuadForm(FieldCtx field) : field_(std::move(field)) {}
    QuadForm(FieldCtx field, std::vector<Block> blocks);

    static QuadForm binary(const FieldCtx& field, const Elem& a, const Elem& b);
    static QuadForm hyperbolic(const FieldCtx& field, std::size_t planes = 1);

    const FieldCtx& field() const noexcept { return field_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    std::size_t dim() const noexcept { return 2 * blocks_.size(); }
    bool empty() const noexcept { return blocks_.empty(); }

    Elem evaluate(const Vec& v) const;
    /// Polar form B(v, w) = q(v + w) + q(v) + q(w).
    Elem polar(const Vec& v, const Vec& w) const;

    /// c * q, renormalized block by block as c[a, b] = [ca, b/c].
    QuadForm scaled(const Elem& c) const;

    std::string to_string() const;

    friend bool operator==(const QuadForm& a, const QuadForm& b) noexcept
    {
        return a.field_ == b.field_ && a.blocks_ == b.blocks_;
    }

private:
    FieldCtx field_;
    std::vector<Block> blocks_;
};

/// Bilinear Pfister form <<a_1, ..., a_n>>; no slots means <1>.
class PfisterB {
public:
    PfisterB(FieldCtx field, std::vector<Elem> slots);

    const FieldCtx& field() const noexcept { return field_; }
    const std::vector<Elem>& slots() const noexcept { return slots_; }
    std::size_t fold() const noexcept { return slots_.size(); }

    /// Diagonal entries are the products over subsets of the slots, ordered
    /// by the binary expansion of the subset index.
    BilForm expand() const;
    std::string to_string() const;

private:
    FieldCtx field_;
    std::vector<Elem> slots_;
};

/// Quadratic Pfister form <<a_1, ..., a_{n-1}, b]] = <<a_1, ..., a_{n-1}>> (x) [1, b].
class PfisterQ {
public:
    PfisterQ(FieldCtx field, std::vector<Elem> bslots, Elem qslot);

    const FieldCtx& field() const noexcept { return field_; }
    const std::vector<Elem>& bslots() const noexcept { return bslots_; }
    const Elem& qslot() const noexcept { return qslot_; }
    std::size_t fold() const noexcept { return bslots_.size() + 1; }

    QuadForm expand() const;
    std::string to_string() const;

private:
    FieldCtx field_;
    std::vector<Elem> bslots_;
    Elem qslot_;
};

Gram polar_form(const QuadForm& q);
QuadForm orth_sum(const QuadForm& q1, const QuadForm& q2);
inline QuadForm operator+(const QuadForm& q1, const QuadForm& q2) { return orth_sum(q1, q2); }
BilForm tensor_bb(const BilForm& b1, const BilForm& b2);
QuadForm tensor_bq(const BilForm& b, const QuadForm& q);
QuadForm pfister_expand(const PfisterQ& p);

/// Canonical representative modulo x^2 + x. Throws UnsupportedField over
/// symbolic fields.
Elem as_canonical(const FieldCtx& field, const Elem& a);
/// A root of x^2 + x = c. Over symbolic fields only c = 0 is solved.
std::optional<Elem> solve_artin_schreier(const FieldCtx& field, const Elem& c);

/// Arf invariant: sum of a_i b_i modulo x^2 + x. Over symbolic fields the
/// representative is not canonical and only evidence-grade.
struct ArfClass {
    FieldCtx field;
    Elem rep;
    bool canonical = true;

    /// Throws UnsupportedField when the class cannot be decided.
    bool is_trivial() const;
    friend bool operator==(const ArfClass& a, const ArfClass& b);
};

ArfClass arf(const QuadForm& q);

/// Sum over the blocks with a_i != 0 of [a_i b_i, a_i).
BrauerClass clifford(const QuadForm& q);

/// Anisotropic dimension of the Witt class with the given invariants over an
/// exact field: 0, 2 or 4.
int anisotropic_dimension(const ArfClass& arf, const BrauerClass& clifford);

struct WittClass {
    int dim_anis;
    ArfClass arf;
    BrauerClass clifford;
    QuadForm provenance;
};

/// Exact Witt class; throws UnsupportedField over symbolic fields.
WittClass witt_class(const QuadForm& q);

bool is_isotropic_exact(const QuadForm& q);

/// Searches for a nonzero isotropic vector. All coordinates but the first
/// of the last block range over elements of degree <= bound (polynomials in
/// t, or elements of GF(2^k) with at most bound + 1 bits); the remaining
/// coordinate is solved exactly. Deepens the degree one level at a time, and
/// within a level the first witness in lexicographic order is returned.
std::optional<Vec> isotropy_search(const QuadForm& q, int bound);

struct WittDecomposition {
    std::size_t witt_index;
    QuadForm anisotropic;
    bool exact; // false: anisotropic part only certified up to the bound
    int bound;
};

/// Splits off hyperbolic planes along isotropic vectors found by search.
/// Over exact fields the target dimension comes from the invariants and a
/// missed vector raises SearchBoundExceeded.
WittDecomposition witt_decompose(const QuadForm& q, int bound = 8);

/// Exact decisions; UnsupportedField over symbolic fields.
bool witt_equivalent(const QuadForm& q1, const QuadForm& q2);
bool is_isometric(const QuadForm& q1, const QuadForm& q2);

/// Substitutes the variables of a symbolic field by elements of
/// GF(2^k)(t). Empty when a coefficient has a pole at the substitution.
std::optional<QuadForm> specialize(const QuadForm& q, const std::vector<RatFunc>& values);

struct Evidence {
    bool value;
    int samples;     // substitutions that were checked exactly
    int skipped;     // substitutions hitting a pole
    std::string detail;
};

/// Evidence-grade Witt equivalence over a symbolic field: checks the claim
/// exactly after random substitutions of the variables into GF(2^k)(t).
Evidence witt_equivalent_evidence(const QuadForm& q1, const QuadForm& q2, std::uint64_t seed, int samples = 20);

} // namespace c2q
