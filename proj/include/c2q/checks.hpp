#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace c2q {

enum class CheckScale { Quick, Full };

struct CheckResult {
    int id;
    std::string name;
    bool passed;
    int instances;
    int failures;
    std::string detail;
    double seconds = 0;
};

// Randomized suites; Quick runs a tenth of the instances.
CheckResult check_reciprocity(CheckScale s, std::uint64_t seed);
CheckResult check_norm_bridge(CheckScale s, std::uint64_t seed);
CheckResult check_symbol_rewrites(CheckScale s, std::uint64_t seed);
CheckResult check_slot_square(CheckScale s, std::uint64_t seed);
CheckResult check_triple_pipeline(CheckScale s, std::uint64_t seed);
CheckResult check_linked_closed_forms(CheckScale s, std::uint64_t seed);
CheckResult check_three_slot_shadow(CheckScale s, std::uint64_t seed);
CheckResult check_pair_linkage(CheckScale s, std::uint64_t seed);
CheckResult check_pfister_dichotomy(CheckScale s, std::uint64_t seed);
CheckResult check_finite_fields(CheckScale s, std::uint64_t seed);
CheckResult check_probe(CheckScale s, std::uint64_t seed);
/// Byte equality of the `paper` suite reports with `<dir>/<op>.json`.
CheckResult check_golden(const std::string& dir);

/// All suites in order; the golden comparison only when a directory is given.
std::vector<CheckResult> run_checks(CheckScale s, std::uint64_t seed, const std::optional<std::string>& golden_dir);

/// The stable report of a `paper` subcommand as written to a golden file.
std::string golden_text(const std::string& op);

} // namespace c2q
