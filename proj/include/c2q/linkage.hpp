#pragma once

#include "c2q/quaternion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace c2q {

enum class LinkMode { Separable, Inseparable };

std::string to_string(LinkMode m);

/// Common-slot witness for a set of quaternion algebras. Separable: every
/// input is isomorphic to [common, b_i); inseparable: to [a_i, common).
struct LinkageCertificate {
    LinkMode mode;
    Elem common;
    std::vector<Quaternion> inputs;
    std::vector<Quaternion> rewritten;
    bool verified = false;
};

/// Re-derives every input from the witness and compares Brauer classes.
/// Throws UnsupportedField over symbolic fields.
bool verify_certificate(const LinkageCertificate& cert);

/// Bounded common-slot searches over GF(2^k) and GF(2^k)(t).
///
/// Separable: left slots alpha are enumerated by height, then as reduced
/// fractions, once per Artin-Schreier class; the right slots are products
/// of monic irreducibles of degree <= bound (and the poles of alpha), found
/// by GF(2) linear algebra on their local symbols.
///
/// Inseparable: right slots are monic squarefree polynomials of degree
/// <= max(bound, 1) in increasing order; left slots are solved from a basis
/// of partial fractions supported on the relevant places.
///
/// An empty result never certifies non-linkage.
std::optional<LinkageCertificate> find_linkage(const std::vector<Quaternion>& qs, LinkMode mode, int bound);
std::optional<LinkageCertificate> pair_linkage(const Quaternion& q1, const Quaternion& q2, LinkMode mode, int bound);
/// Separable search with left slots of height <= min(bound, 2), then the
/// inseparable search.
std::optional<LinkageCertificate> triple_linkage(const Quaternion& q1, const Quaternion& q2, const Quaternion& q3,
                                                 int bound);

/// A quaternion algebra over GF(2^k)(t) with the given ramification set
/// (which must have even size), or the split algebra over GF(2^k).
std::optional<Quaternion> quaternion_with_ramification(const FieldCtx& field, const PlaceSet& ram, int bound);

/// One element of the subgroup G generated by the classes of a set S.
/// `mask` is the first subset of S (bit i = i-th form) summing to it and
/// `multiplicity` counts all subsets that do. The identity has no
/// representative and stands for the hyperbolic form.
struct GroupElement {
    unsigned mask;
    std::size_t multiplicity;
    std::optional<Quaternion> rep;
    std::string provenance;
};

struct TightSet {
    FieldCtx field;
    std::vector<Quaternion> forms;
    std::vector<GroupElement> elements;
    bool exact; // classes compared exactly; otherwise every subset is its own element
    bool verified; // every representative has the class of its subset
};

/// Representatives for every element of G: closed forms when the subset
/// shares a slot or has a linkage certificate, a ramification search
/// otherwise. Empty means undetermined within the bound.
std::optional<TightSet> is_tight(const std::vector<Quaternion>& forms, int bound);

/// Builds a tight set from explicit representatives, one per subset mask
/// (mask 0 is ignored), and verifies them over exact fields.
TightSet tight_set_from(const std::vector<Quaternion>& forms, const std::vector<std::optional<Quaternion>>& reps,
                        const std::vector<std::string>& provenance);

enum class Verdict { Exact, Evidence, Failed, None };

std::string to_string(Verdict v);

struct SigmaReport {
    QuadForm sigma_form;
    std::optional<WittClass> witt;
    std::optional<QuadForm> claim;
    std::string claim_text;
    Verdict verdict;
    std::string detail;
};

/// Sigma over G: the orthogonal sum over all subsets of S of the norm form
/// of the representative of the subset's class (a hyperbolic form of
/// dimension 4 for the identity), i.e. each element of G counted with its
/// multiplicity. Compares with `claim` when given: exactly over exact
/// fields, by random specialization otherwise.
SigmaReport sigma_invariant(const TightSet& t, const std::optional<QuadForm>& claim = std::nullopt,
                            std::string claim_text = {}, std::uint64_t seed = 0);

} // namespace c2q
