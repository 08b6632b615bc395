#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace freewitt::check {

struct SuiteOptions {
    int order = 8;            // length/order for the Witt and free-probability criteria
    std::uint64_t seed = 42;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    long checks = 0;          // number of individual identities verified
    std::string detail;       // first failure, empty on success
};

CriterionResult witt_diagram(const SuiteOptions& opt);
CriterionResult ring_isomorphisms(const SuiteOptions& opt);
CriterionResult faber_routes(const SuiteOptions& opt);
CriterionResult formal_groups(const SuiteOptions& opt);
CriterionResult free_probability(const SuiteOptions& opt);
CriterionResult distribution_rings(const SuiteOptions& opt);
CriterionResult fock_cross_validation(const SuiteOptions& opt);
CriterionResult genus_suite(const SuiteOptions& opt);
// JSON roundtrips of every encoding plus a rerun of seeded generation.
CriterionResult encodings_roundtrip(const SuiteOptions& opt);

using CriterionFn = CriterionResult (*)(const SuiteOptions&);
const std::vector<CriterionFn>& all_criteria();

// Runs one criterion, turning exceptions into failures.
CriterionResult run_criterion(CriterionFn fn, const SuiteOptions& opt);
std::vector<CriterionResult> run_suite(const SuiteOptions& opt);

// One line per criterion; no timings, so reruns are byte-identical.
std::string render(const std::vector<CriterionResult>& results);

} // namespace freewitt::check
