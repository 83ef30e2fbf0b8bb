#pragma once

#include "trigal/catalog.hpp"
#include "trigal/classify.hpp"
#include "trigal/gf.hpp"
#include "trigal/permgrp.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace trigal {

/// Frobenius cycle types observed over a finite field.
struct PatternStats {
    PatternStats(int degree_, Field field_, std::uint64_t seed_)
        : degree(degree_), field(std::move(field_)), seed(seed_) {}

    int degree;
    Field field;
    std::uint64_t trials = 0;
    std::uint64_t accepted = 0;
    std::uint64_t discarded = 0; // non-squarefree specializations
    std::uint64_t seed;
    std::map<CycleType, std::uint64_t> histogram;

    std::set<CycleType> types() const;
};

/// Trial i draws (a, b) uniformly from the field with an Rng seeded by
/// trial_seed(seed, i), then records the factor pattern of x^n + a x^m + b
/// if it is squarefree. Throws InvalidShape unless 0 < m < n and
/// gcd(n, m) = 1.
PatternStats sample_trinomial(int n, int m, const Field& field, std::uint64_t trials, std::uint64_t seed);

/// Sections of t -> (t^e1, ..., t^er) by hyperplanes scaled so the t^er
/// coefficient is 1: trial i draws c_1, ..., c_{r-1} (in exponent order) and
/// then c_0, and factors t^er + sum c_i t^ei + c_0. For exponents (m, n)
/// this is exactly sample_trinomial(n, m) with (a, b) = (c_1, c_0).
/// Throws BadExponents unless r >= 2 and 0 < e1 < ... < er.
PatternStats sample_sectional(const std::vector<int>& exponents, const Field& field, std::uint64_t trials,
                              std::uint64_t seed);

struct ConsistencyReport {
    std::vector<GroupName> candidates; // ascending by (order, label)
    std::vector<GroupName> consistent;
    std::optional<GroupName> minimal;
    /// One witness per excluded candidate.
    std::vector<std::pair<GroupName, CycleType>> violations;
    /// Classifier verdict when a shape was supplied.
    std::optional<Verdict> predicted;
    std::string note;
};

/// Candidates are A_n, S_n, the Jones lists for k = 0, 1, 2 (families
/// contribute both end groups) and the triply transitive list. Throws
/// EmptyStats, CharacteristicMismatch, InvalidShape.
ConsistencyReport identify_group(const PatternStats& stats, const std::optional<TrinomialShape>& shape = std::nullopt);

nlohmann::json to_json(const PatternStats& stats);
nlohmann::json to_json(const ConsistencyReport& report);

// ---------------------------------------------------------------------------
// Reference tables

struct Table2Row {
    std::string polynomial; // as printed, e.g. "x^11-x-1"
    std::string field;      // "F5", "F4"
    std::vector<int> expected;
    std::vector<int> computed;
    bool match = false;
};

/// Factors every listed trinomial (F4 with c^2 = c + 1) and compares degree
/// multisets.
std::vector<Table2Row> reproduce_table2();

struct Table1Row {
    GroupName group;
    std::vector<std::string> expected; // labels as printed
    std::vector<std::string> computed; // labels from enumeration
    std::vector<std::string> missing;  // expected but not computed
    std::vector<std::string> extra;    // computed but not expected
    bool match = false;
};

/// Moved parts of a label such as "2^4", "(2^2,4^2)" or "(2,3,6)".
/// Throws ParseError.
std::vector<int> parse_type_label(std::string_view label);

/// Literal rows of the Mathieu cycle-type table.
std::vector<std::pair<GroupName, std::vector<std::string>>> table1_rows();

/// Compares each row (identity and 1-parts dropped) with the enumerated
/// cycle-type set. Enumerating M24 takes tens of seconds.
std::vector<Table1Row> reproduce_table1();
Table1Row compare_table1_row(const GroupName& group, const std::vector<std::string>& expected);

} // namespace trigal
