#pragma once

#include "c2q/linkage.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace c2q {

struct NamedCertificate {
    std::string name;
    LinkageCertificate cert;
};

/// psi = [a^2 + b, c), phi = [b + a^4/b, b + a^2) for slots (a, b, c) =
/// (alpha, beta, gamma). phi is the slot-square rewrite of [a^2 + b, b) with
/// lambda = a, so the pair shares the left slot a^2 + b and
/// [a^2 + b, b c) represents psi + phi. Sigma is compared with <<c, b, a]].
struct PairConstruction {
    Elem alpha, beta, gamma;
    Quaternion psi, phi;
    SlotSquareResult phi_rewrite;
    bool phi_matches;
    NamedCertificate linkage;
    TightSet tight;
    SigmaReport sigma;
};

PairConstruction leftoright_pair(const FieldCtx& field, const Elem& alpha, const Elem& beta, const Elem& gamma,
                                 std::uint64_t seed = 0);

/// psi = [A, c), phi = [A, c (a^2 + b)), pi = [a^2 + b, c) with
/// A = b + a^4/b. xi = [A, a^2 + b) represents psi + phi.
struct TripleConstruction {
    Elem alpha, beta, gamma;
    Quaternion psi, phi, pi, xi;
    SlotSquareResult xi_rewrite; // xi from [a^2 + b, b) with lambda = a
    bool xi_matches;
    std::vector<NamedCertificate> links;
    bool links_verified; // exact fields only
    TightSet tight;
    SigmaReport sigma;
};

TripleConstruction witteq_triple(const FieldCtx& field, const Elem& alpha, const Elem& beta, const Elem& gamma,
                                 std::uint64_t seed = 0);

/// phi_1 = <<a,b>> (x) psi, phi_2 = <<a,c>> (x) psi, phi_3 = <<b,c>> (x) psi
/// and the congruences modulo the next power of the fundamental ideal
///   phi_1 + phi_2 = <<a,bc>> (x) psi       phi_1 + phi_3 = <<b,ac>> (x) psi
///   phi_2 + phi_3 = <<c,ab>> (x) psi       phi_1 + phi_2 + phi_3 = <<ab,ac>> (x) psi
struct Congruence {
    std::string name;
    std::vector<PfisterQ> lhs;
    PfisterQ rhs;
};

struct ShadowCheck {
    std::string identity;
    int passed = 0;
    int total = 0;
};

struct ThreeSlotReport {
    int n;
    Elem a, b, c;
    PfisterQ psi;
    std::vector<PfisterQ> forms;
    std::vector<Congruence> congruences;
    /// Brauer-level identities behind each congruence, with psi replaced by
    /// its quadratic slot e: quaternion symbols [e, x) checked by
    /// ramification sets after substituting into GF(2^k)(t).
    std::vector<ShadowCheck> shadow;
    /// Full congruences specialized into GF(2^k)(t) and decided exactly
    /// there (both sides lie in I^3, which vanishes, so this is weak).
    ShadowCheck specialized;
    QuadForm sigma_form;
    QuadForm target; // <<a,b,c>> (x) psi
    Verdict sigma_verdict;
    std::string sigma_detail;
    bool evidence_only; // symbolic inputs
};

/// Requires n >= 3 (FoldTooSmall), psi of fold n - 2, nonzero a, b, c.
ThreeSlotReport three_slot_construction(int n, const FieldCtx& field, const Elem& a, const Elem& b, const Elem& c,
                                        const PfisterQ& psi, std::uint64_t seed, int samples = 200);

/// Hyperbolicity of <<c, b, a]] through the triple construction and a
/// linkage certificate of the resulting triple.
struct PipelineReport {
    Elem gamma, beta, alpha;
    PfisterQ target;
    bool fast_path;
    std::string fast_reason;
    std::optional<Vec> witness;
    std::optional<TripleConstruction> triple;
    std::optional<LinkageCertificate> linkage;
    std::string consequence;
    std::optional<SigmaReport> consequence_check;
    std::optional<bool> target_hyperbolic; // exact fields
    bool resolved;
};

PipelineReport pfister3_pipeline(const FieldCtx& field, const Elem& gamma, const Elem& beta, const Elem& alpha,
                                 int bound, std::uint64_t seed = 0);

struct ProbeEntry {
    std::vector<Quaternion> triple;
    std::optional<LinkageCertificate> cert;
    bool reverified;
};

struct ProbeReport {
    std::uint64_t seed;
    int count, degree_bound, search_bound;
    std::vector<ProbeEntry> entries;
    int linked = 0;
    int unresolved = 0;
    int verification_failures = 0;
};

/// Random triples of division algebras over GF(2^k)(t) and the outcome of
/// the bounded triple linkage search for each. Never reports non-linkage.
ProbeReport triple_linkage_probe(const FieldCtx& field, std::uint64_t seed, int count, int degree_bound,
                                 int search_bound);

/// A random division algebra with slots of degree <= degree_bound.
Quaternion sample_division_algebra(std::mt19937_64& rng, const FieldCtx& field, int degree_bound);

} // namespace c2q
