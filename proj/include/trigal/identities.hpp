#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trigal {

struct IdentityReport {
    std::string name;
    bool holds = false;
    /// Nonzero residual (normal form) when the identity fails.
    std::optional<std::string> witness;
    std::vector<std::string> notes;
};

/// Outcome of evaluating an identity at random points of a concrete field.
struct NumericReport {
    std::string name;
    int cases = 0;
    int passed = 0;
    bool holds() const { return cases > 0 && passed == cases; }
};

/// Relation imposed on c in the PSL(2,5) factorization check.
enum class CRelation {
    Stated,    // c^10 + a c^5 + a^2 + b = 0
    Corrected, // c^10 + a c^5 + b c^4 + a^2 = 0
};

/// In GF(2)[a,b,alpha,c,x] modulo alpha^2+alpha+1 and the c relation:
/// (c^2x^3 + c^3x^2 + c^4 alpha x + a + alpha c^5)
///   * (c^2x^3 + c^3x^2 + c^4(alpha+1)x + a + (alpha+1)c^5) = c^4 (x^6 + a x + b).
/// `zero_alpha` substitutes alpha = 0 in both cubics (control).
IdentityReport check_psl25(CRelation relation = CRelation::Stated, bool zero_alpha = false);

/// Each member of the linearization chain for x^24 + a x + b over GF(2)[a,b]
/// reduces to zero, and the last member minus its constant term has only
/// power-of-two exponents. `perturb` replaces a^89 by a^88 in the last member.
IdentityReport check_m24(bool perturb = false);

/// With alpha^23 = b: (alpha y)^23 + a (alpha y)^3 + b = b y^23 + a alpha^3 y^3 + b.
/// `perturb` replaces the exponent 3 on the left by 2.
IdentityReport check_m23_substitution(bool perturb = false);

/// l = p^k, n = (l^r-1)/(l-1), m = (l^s-1)/(l-1): exponent identities,
/// x * (y^n + a y^m + b)|_{y = x^(l-1)} = x^(l^r) + a x^(l^s) + b x, and
/// additivity of the right-hand side. Throws BadParameters.
IdentityReport check_pgl(std::uint32_t p, std::uint32_t k, std::uint32_t r, std::uint32_t s);

/// Numeric counterparts evaluated with the univariate/field code only.
NumericReport numeric_psl25(CRelation relation, bool zero_alpha, int cases, std::uint64_t seed);
NumericReport numeric_m24(bool perturb, int cases, std::uint64_t seed);
NumericReport numeric_m23(bool perturb, int cases, std::uint64_t seed);
NumericReport numeric_pgl(std::uint32_t p, std::uint32_t k, std::uint32_t r, std::uint32_t s, int cases,
                          std::uint64_t seed);

} // namespace trigal
