#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "odgraph/graph.hpp"
#include "json.hpp"

namespace od::verify {

/// Closed forms under test. Swapping one entry for a perturbed version is how
/// the harness demonstrates it can fail.
struct FormulaSet {
    std::function<Natural(Natural, Natural)> deg_zn;
    std::function<Natural(Natural)> size_zn;
    std::function<Natural(Natural, Natural)> deg_dn;
    std::function<Natural(Natural)> size_dn;

    static FormulaSet standard();
};

struct Options {
    Natural enumeration_bound = kDefaultEnumerationBound;
    std::size_t chromatic_bound = kDefaultChromaticBound;
    /// Worker threads for sweeps; 0 picks hardware concurrency.
    unsigned threads = 0;
    FormulaSet formulas = FormulaSet::standard();
};

struct Check {
    std::string name;
    std::string formula;  // value(s) from the closed-form / profile route
    std::string oracle;   // value(s) from the explicit graph
    bool pass = true;
};

struct Mismatch {
    std::string check;
    std::string detail;
};

struct VerificationResult {
    explicit VerificationResult(GroupSpec group) : spec(std::move(group)) {}

    GroupSpec spec;
    Natural group_order = 0;
    std::vector<Check> checks;
    std::optional<Mismatch> first_mismatch;
    /// Set when the instance could not be examined (e.g. enumeration bound).
    std::optional<std::string> error;
    /// Informational only; never part of the pass verdict.
    std::optional<Natural> chromatic_number;
    std::optional<Natural> clique_number;
    /// For Z_n: whether the measured chromatic number equals n + 1.
    std::optional<bool> chromatic_equals_n_plus_1;
    bool is_star = false;

    bool passed() const;
};

VerificationResult verify_group(const GroupSpec& spec, const Options& options = {});

enum class SweepFamily { Cyclic, Dihedral, Units, CyclicProduct };

std::string to_string(SweepFamily family);
/// Accepts "cyclic", "dihedral", "units", "product".
std::optional<SweepFamily> parse_family(std::string_view text);

struct SweepReport {
    SweepFamily family = SweepFamily::Cyclic;
    Natural lo = 0;
    Natural hi = 0;
    std::vector<VerificationResult> results;  // ordered by instance parameter
    std::size_t passed = 0;
    std::size_t failed = 0;
    /// Units sweeps: parameters n whose U(n) graph is a star, and whether
    /// that set is exactly {n in range : n | 24}.
    std::optional<std::vector<Natural>> star_instances;
    std::optional<bool> star_matches_divisors_of_24;

    bool all_passed() const { return failed == 0; }
};

/// Instances are Z_n / D_n / U(n) for n in [lo, hi], or Z_a x Z_b for
/// a, b in [lo, hi] (row-major). Throws DomainError for an empty or invalid
/// range; instance failures are recorded, never thrown.
SweepReport sweep(SweepFamily family, Natural lo, Natural hi, const Options& options = {});

nlohmann::ordered_json to_json(const VerificationResult& result);
nlohmann::ordered_json to_json(const SweepReport& report);

}  // namespace od::verify
