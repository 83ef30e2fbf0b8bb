#pragma once

#include "trigal/catalog.hpp"
#include "trigal/newton.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace trigal {

/// x^n + a x^m + b over a field of characteristic p (0 allowed).
struct TrinomialShape {
    int n = 0;
    int m = 0;
    std::uint32_t p = 0;
};

/// Throws BadExponent (m outside (0, n) or n < 2), NotCoprime, or
/// BadCharacteristic (p neither 0 nor prime).
void validate(const TrinomialShape& shape);

struct GaussDegrees {
    long long sep = 1;
    long long insep = 1;
    bool strange = false;
};

GaussDegrees gauss_degrees(const TrinomialShape& shape);

/// n = (q^d - 1)/(q - 1) and m or n - m = (q^s - 1)/(q - 1), 1 <= s < d.
struct PglParams {
    long long q;
    int d;
    int s;
    friend bool operator==(const PglParams&, const PglParams&) = default;
};

/// Every matching (q, d, s) with q a power of p; empty when p = 0.
std::vector<PglParams> pgl_params(const TrinomialShape& shape);

/// A_n or S_n once A_n is known to lie in the group.
GroupName an_sn_refine(const TrinomialShape& shape);

struct Verdict {
    GroupName group;
    /// 1..8 for the numbered cases, 0 for the characteristic-zero and n = 2 shortcuts.
    int clause_number = 0;
    /// "1".."8", "char-0" or "trivial".
    std::string clause;
    GaussDegrees gauss;
    std::vector<std::string> notes;
};

/// Throws AmbiguousPGL if several PGL parameter sets match.
Verdict classify_trinomial(const TrinomialShape& shape);

/// A specialization over k((t)) whose Newton polygon forces cycle shapes on
/// an inertia generator.
struct NewtonWitness {
    std::string polynomial;
    NewtonPolygon polygon;
    TameCycles cycles;
};

/// The specializations x^n + t^-1 x^m + 1, x^n + t and x^n + t x^m + t^2.
std::vector<NewtonWitness> newton_witnesses(const TrinomialShape& shape);

} // namespace trigal
