#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "credal/binary.hpp"
#include "credal/frame.hpp"
#include "credal/mc.hpp"
#include "credal/ternary.hpp"

namespace credal::cli {

using ordered_json = nlohmann::ordered_json;

/// Scenario validation failure; `path` points at the offending field.
struct SchemaError : std::runtime_error {
    std::string path;
    SchemaError(std::string p, const std::string& msg)
        : std::runtime_error("schema error at " + p + ": " + msg), path(std::move(p)) {}
};

/// A parsed scenario document (schema_version 1). Exactly one knowledge
/// form is present (or a mixture); evidence only with a 2-atom frame.
struct Scenario {
    Frame frame;
    std::optional<binary::IntervalKnowledge> interval;
    std::optional<ternary::LowerProbBounds3> bounds3;
    std::optional<ternary::CredalSet3> components;
    std::optional<mc::CredalPolytopeSet> polytopes;
    std::vector<std::pair<ternary::CredalSet3, double>> mixture;
    std::optional<binary::EvidenceCounts> evidence;
    std::vector<std::uint32_t> subset_queries;
    std::vector<std::pair<double, double>> interval_queries;
    std::optional<long long> mc_samples;
    std::optional<std::uint64_t> mc_seed;
    ordered_json echo;  // canonicalized scenario for the report
};

Scenario parse_scenario(const ordered_json& doc);
Scenario load_scenario(const std::string& path);

struct RunOptions {
    std::optional<long long> samples;
    std::optional<std::uint64_t> seed;
};

/// Full evaluation of a scenario: mass/bel/pl/q tables, interval answers,
/// pignistic distributions and optional Monte Carlo estimates, every value
/// tagged with how it was obtained. Throws ContradictionError on empty
/// knowledge.
ordered_json run_scenario(const Scenario& sc, const RunOptions& opt = {});

std::string render_text(const ordered_json& report);

struct CrossValidation {
    ordered_json report;
    bool flagged = false;
};

/// Built-in exact-vs-Monte-Carlo case suite; a case is flagged when the
/// largest deviation exceeds 4 standard errors plus `tolerance`.
CrossValidation cross_validate(long long samples, std::uint64_t seed, double tolerance);

std::string render_cross_text(const ordered_json& report);

}  // namespace credal::cli
