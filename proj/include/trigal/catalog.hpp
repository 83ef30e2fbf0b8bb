#pragma once

#include "trigal/permgrp.hpp"

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace trigal {

/// A named permutation group of known degree.
struct GroupName {
    enum class Kind {
        Symmetric,
        Alternating,
        Cyclic,
        AGL,
        AGammaL,
        PGL,
        PSL,
        PGammaL,
        M11At11,
        M11At12,
        M12,
        M22,
        AutM22,
        M23,
        M24,
        PSL2_11At11, // PSL(2,11) in its exceptional action on 11 points
    };

    Kind kind = Kind::Symmetric;
    int n = 0; // Symmetric / Alternating / Cyclic
    int d = 0; // matrix groups
    int q = 0;

    static GroupName symmetric(int n) { return {Kind::Symmetric, n, 0, 0}; }
    static GroupName alternating(int n) { return {Kind::Alternating, n, 0, 0}; }
    static GroupName cyclic(int n) { return {Kind::Cyclic, n, 0, 0}; }
    /// Linear/semilinear families; the semilinear ones collapse to the
    /// linear group when q is prime.
    static GroupName matrix(Kind kind, int d, int q);
    static GroupName of(Kind kind) { return {kind, 0, 0, 0}; }

    /// Number of points acted on.
    long long degree() const;
    /// Stable label, e.g. "S11", "AGL(1,8)", "PGammaL(2,9)", "M11@12", "AutM22".
    std::string label() const;
    /// Inverse of label(). Throws UnknownName.
    static GroupName parse(std::string_view text);

    friend bool operator==(const GroupName&, const GroupName&) = default;
    friend auto operator<=>(const GroupName&, const GroupName&) = default;
};

/// Groups between `lower` and `upper` (equal for a single group).
struct GroupFamily {
    GroupName lower;
    GroupName upper;

    bool single() const { return lower == upper; }
    /// "C11...AGL(1,11)" or just the name.
    std::string label() const;
    friend bool operator==(const GroupFamily&, const GroupFamily&) = default;
};

/// Path of the Mathieu generator file: $TRIGAL_MATHIEU_DATA if set, else
/// the copy shipped in data/.
std::string mathieu_data_path();

/// Builds (and caches) the group. Throws DegreeTooLarge above degree 30,
/// UnknownName for names with no construction, MissingDataFile when the
/// Mathieu data cannot be read.
std::shared_ptr<const Group> builtin_group(const GroupName& name);

/// Exact order; Symmetric and Alternating are computed by formula.
BigInt group_order(const GroupName& name);

/// Cycle types of the group, cached per name. Throws BudgetExceeded.
const std::set<CycleType>& cached_cycle_types(const GroupName& name);

/// Primitive groups of degree n containing a cycle with exactly k fixed
/// points, followed by A_n and S_n. Throws BadK unless 0 <= k <= n-2.
std::vector<GroupFamily> jones_candidates(int n, int k);

struct TriplyTransitiveList {
    std::vector<GroupName> groups;
    /// Groups of this degree that exist but have no construction here.
    std::vector<std::string> uncatalogued;
};

/// Triply transitive groups of degree d: AGL(n,2), the projective line
/// groups, the 3-transitive Mathieu actions, then A_d and S_d.
TriplyTransitiveList triply_transitive_candidates(int d);

/// Whether every observed type occurs in the named group. Throws
/// DegreeMismatch when a type's size differs from the group degree.
bool contains_all_types(const GroupName& name, const std::set<CycleType>& observed);

} // namespace trigal
