#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trigal::props {

struct Outcome {
    std::string name;
    int cases = 0;
    std::vector<std::string> failures; // first few counterexamples

    bool passed() const { return cases > 0 && failures.empty(); }
};

/// Random polynomials of degree 1..30: unit * prod g^e == f, every factor
/// monic with a Rabin irreducibility certificate, squarefree iff all
/// multiplicities are 1, pattern independent of the splitting seed.
Outcome factorization_roundtrip(const std::string& field_spec, int count, std::uint64_t seed);

/// Random valued point sets: slopes strictly increasing, runs cover the
/// finite exponent range, hull never above a point, vertices are input
/// points, tame cycle lengths divide runs and sum to the ramified width.
Outcome newton_hull_invariants(int count, std::uint64_t seed);

/// Tropical product of two generic polynomials has the union of the
/// factors' slope multisets.
Outcome newton_product_slopes(int count, std::uint64_t seed);

/// |cycle_type_set(S_n)| = p(n) for n <= 10.
Outcome symmetric_partition_counts();

/// PGL(2,q) is 3- but not 4-transitive with order (q+1)q(q-1).
Outcome projective_line_groups();

/// A_n is exactly (n-2)-transitive for 3 <= n <= 8.
Outcome alternating_transitivity();

std::vector<Outcome> all_suites();

} // namespace trigal::props
